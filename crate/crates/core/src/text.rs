//! Line-oriented text formats for presentations, dissections, curves and
//! homotopy words.
//!
//! Quiver files:
//!
//! ```text
//! # comment
//! vertices: 1 2 3
//! arrow a: 1 -> 2
//! rel a b
//! arrow e: 1 -> 1
//! special e: 1
//! ```
//!
//! Dissection files list polygons by their sides (`e3+` an internal edge
//! walked forwards, a pendant edge by name, anything else a boundary
//! segment), orbifold points, and edge labels:
//!
//! ```text
//! poly p1: e3+ b2 e7- e9
//! orbifold w1 on e9
//! label e3 = 2
//! ```
//!
//! Curve files start with `open <end> -> <end>` or `closed` and list one
//! event per line: `cross e2 +`, `through w1`, `around w1 -`. An orbifold
//! endpoint is written with its tag, as in `w1+`.
//!
//! Words are one line: letters separated by spaces, a letter being arrows
//! joined by `.` with an optional `^-1`; tags `[+]`/`[-]` may open and
//! close a string; `@v` is the trivial string at `v`; `band:` starts a band.

use std::collections::BTreeSet;

use crate::complex::{Polygon, PolygonComplex, Side};
use crate::curves::{Curve, CurveShape, Endpoint, GradedCurve, Mark};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Quiver};
use crate::strings::{Direction, HomotopyBand, HomotopyLetter, HomotopyString, HomotopyWord, Sign};

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    pos: Pos,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn located(pos: Pos, e: Error) -> Error {
    Error::At {
        line: pos.line,
        column: pos.column,
        source: Box::new(e),
    }
}

/// Splits a line into tokens; `:` always stands alone and `#` starts a
/// comment.
fn tokenize(line: &str, number: usize) -> Vec<Token<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut spans = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() || ch == ':' {
            if let Some(s) = start.take() {
                spans.push((s, i));
            }
            if ch == ':' {
                spans.push((i, i + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        spans.push((s, line.len()));
    }
    spans
        .into_iter()
        .map(|(s, e)| Token {
            text: &line[s..e],
            pos: Pos {
                line: number,
                column: line[..s].chars().count() + 1,
            },
        })
        .collect()
}

fn lines(text: &str) -> impl Iterator<Item = Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| tokenize(l, i + 1))
        .filter(|t| !t.is_empty())
}

fn end_of(tokens: &[Token<'_>]) -> Pos {
    let last = &tokens[tokens.len() - 1];
    Pos {
        line: last.pos.line,
        column: last.pos.column + last.text.chars().count(),
    }
}

/// Matches `tokens` against a pattern where `_` takes any identifier.
fn shape<'a>(tokens: &[Token<'a>], pattern: &[&str]) -> Result<Vec<&'a str>> {
    let mut ids = Vec::new();
    for (k, want) in pattern.iter().enumerate() {
        let Some(t) = tokens.get(k) else {
            return Err(syntax(end_of(tokens), format!("expected `{want}`")));
        };
        if *want == "_" {
            if t.text == ":" || t.text == "->" {
                return Err(syntax(t.pos, format!("expected an identifier, found `{}`", t.text)));
            }
            ids.push(t.text);
        } else if t.text != *want {
            return Err(syntax(t.pos, format!("expected `{want}`, found `{}`", t.text)));
        }
    }
    if let Some(t) = tokens.get(pattern.len()) {
        return Err(syntax(t.pos, format!("unexpected `{}`", t.text)));
    }
    Ok(ids)
}

pub fn parse_quiver(text: &str) -> Result<Presentation> {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut rels = Vec::new();
    let mut specials = Vec::new();
    for tokens in lines(text) {
        let head = &tokens[0];
        match head.text {
            "vertices" => {
                let rest = if tokens.get(1).is_some_and(|t| t.text == ":") {
                    &tokens[2..]
                } else {
                    &tokens[1..]
                };
                for t in rest {
                    if t.text == ":" || t.text == "->" {
                        return Err(syntax(t.pos, format!("unexpected `{}`", t.text)));
                    }
                    vertices.push((t.text.to_string(), t.pos));
                }
            }
            "arrow" => {
                let ids = shape(&tokens, &["arrow", "_", ":", "_", "->", "_"])?;
                arrows.push((
                    ids[0].to_string(),
                    ids[1].to_string(),
                    ids[2].to_string(),
                    tokens[1].pos,
                ));
            }
            "special" => {
                let ids = shape(&tokens, &["special", "_", ":", "_"])?;
                specials.push((ids[0].to_string(), ids[1].to_string(), tokens[1].pos));
            }
            "rel" => {
                let ids = shape(&tokens, &["rel", "_", "_"])?;
                rels.push((ids[0].to_string(), ids[1].to_string(), tokens[1].pos));
            }
            other => return Err(syntax(head.pos, format!("unknown statement `{other}`"))),
        }
    }
    let mut quiver = Quiver::new();
    for (v, pos) in &vertices {
        quiver.add_vertex(v.clone()).map_err(|e| located(*pos, e))?;
    }
    for (id, s, t, pos) in &arrows {
        quiver
            .add_arrow(id.clone(), s.clone(), t.clone())
            .map_err(|e| located(*pos, e))?;
    }
    let mut special = Vec::new();
    for (id, v, pos) in specials {
        // the loop itself must be declared as an arrow at `v`
        match quiver.arrow(&id) {
            Some(a) if a.source == v && a.target == v => special.push(id),
            _ => return Err(located(pos, Error::SpecialNotLoop(id))),
        }
    }
    for (a, b, pos) in &rels {
        let single = Presentation::new(quiver.clone(), [(a.clone(), b.clone())], special.clone());
        single.map_err(|e| located(*pos, e))?;
    }
    Presentation::new(quiver, rels.into_iter().map(|(a, b, _)| (a, b)), special)
}

pub fn emit_quiver(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    out.push_str("vertices:");
    for v in q.vertices() {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for (id, a) in q.arrows() {
        out.push_str(&format!("arrow {id}: {} -> {}\n", a.source, a.target));
    }
    for (a, b) in p.relations() {
        out.push_str(&format!("rel {a} {b}\n"));
    }
    for e in p.special() {
        out.push_str(&format!("special {e}: {}\n", q.arrow(e).expect("special arrow").source));
    }
    out
}

pub fn parse_dissection(text: &str) -> Result<PolygonComplex> {
    let all: Vec<Vec<Token<'_>>> = lines(text).collect();
    let mut c = PolygonComplex::default();
    for tokens in &all {
        match tokens[0].text {
            "orbifold" => {
                let ids = shape(tokens, &["orbifold", "_", "on", "_"])?;
                if c.orbifold_points.insert(ids[0].into(), ids[1].into()).is_some() {
                    return Err(located(tokens[1].pos, Error::DuplicateId(ids[0].into())));
                }
            }
            "label" => {
                let ids = shape(tokens, &["label", "_", "=", "_"])?;
                if c.labels.insert(ids[0].into(), ids[1].into()).is_some() {
                    return Err(located(tokens[1].pos, Error::DuplicateId(ids[0].into())));
                }
            }
            "poly" => {}
            other => return Err(syntax(tokens[0].pos, format!("unknown statement `{other}`"))),
        }
    }
    let pendants: BTreeSet<&str> = c.orbifold_points.values().map(String::as_str).collect();
    for tokens in all.iter().filter(|t| t[0].text == "poly") {
        let id = shape(&tokens[..tokens.len().min(3)], &["poly", "_", ":"])?[0];
        let mut sides = Vec::new();
        for t in &tokens[3..] {
            let side = if let Some(edge) = t.text.strip_suffix('+') {
                Side::internal(edge, true)
            } else if let Some(edge) = t.text.strip_suffix('-') {
                Side::internal(edge, false)
            } else if t.text == ":" || t.text == "->" {
                return Err(syntax(t.pos, format!("unexpected `{}`", t.text)));
            } else if pendants.contains(t.text) {
                Side::Pendant(t.text.into())
            } else {
                Side::BoundarySegment(t.text.into())
            };
            sides.push(side);
        }
        c.polygons.push(Polygon { id: id.into(), sides });
    }
    Ok(c)
}

fn side_token(s: &Side) -> String {
    match s {
        Side::Internal { edge, forward } => format!("{edge}{}", if *forward { '+' } else { '-' }),
        Side::BoundarySegment(b) => b.clone(),
        Side::Pendant(e) => e.clone(),
    }
}

/// Canonical text: polygon, orbifold and label lines, each block sorted.
pub fn emit_dissection(c: &PolygonComplex) -> String {
    let mut polys: Vec<String> = c
        .polygons
        .iter()
        .map(|p| {
            let sides: Vec<String> = p.sides.iter().map(side_token).collect();
            format!("poly {}: {}\n", p.id, sides.join(" "))
        })
        .collect();
    polys.sort();
    let mut out: String = polys.concat();
    for (w, e) in &c.orbifold_points {
        out.push_str(&format!("orbifold {w} on {e}\n"));
    }
    for (e, v) in &c.labels {
        out.push_str(&format!("label {e} = {v}\n"));
    }
    out
}

fn parse_sign(t: &Token<'_>) -> Result<Sign> {
    match t.text {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(syntax(t.pos, format!("expected `+` or `-`, found `{other}`"))),
    }
}

fn parse_endpoint(t: &Token<'_>) -> Result<Endpoint> {
    if t.text == "->" || t.text == ":" {
        return Err(syntax(t.pos, "expected an endpoint"));
    }
    Ok(if let Some(w) = t.text.strip_suffix('+') {
        Endpoint::Orbifold(w.into(), Sign::Plus)
    } else if let Some(w) = t.text.strip_suffix('-') {
        Endpoint::Orbifold(w.into(), Sign::Minus)
    } else {
        Endpoint::Marked(t.text.into())
    })
}

pub fn parse_curve(text: &str) -> Result<Curve> {
    let mut all = lines(text);
    let Some(head) = all.next() else {
        return Err(syntax(Pos { line: 1, column: 1 }, "empty curve file"));
    };
    let shape_ = match head[0].text {
        "closed" => {
            shape(&head, &["closed"])?;
            CurveShape::Closed
        }
        "open" => {
            if head.len() != 4 || head[2].text != "->" {
                return Err(syntax(head[0].pos, "expected `open <end> -> <end>`"));
            }
            CurveShape::Open {
                start: parse_endpoint(&head[1])?,
                end: parse_endpoint(&head[3])?,
            }
        }
        other => {
            return Err(syntax(
                head[0].pos,
                format!("expected `open` or `closed`, found `{other}`"),
            ))
        }
    };
    let mut marks = Vec::new();
    for tokens in all {
        let mark = match tokens[0].text {
            "cross" => {
                if tokens.len() != 3 {
                    return Err(syntax(tokens[0].pos, "expected `cross <edge> <+|->`"));
                }
                Mark::cross(tokens[1].text, parse_sign(&tokens[2])?)
            }
            "through" => Mark::Through(shape(&tokens, &["through", "_"])?[0].into()),
            "around" => {
                if tokens.len() != 3 {
                    return Err(syntax(tokens[0].pos, "expected `around <point> <+|->`"));
                }
                Mark::Around(tokens[1].text.into(), parse_sign(&tokens[2])?)
            }
            other => return Err(syntax(tokens[0].pos, format!("unknown event `{other}`"))),
        };
        marks.push(mark);
    }
    Ok(Curve { shape: shape_, marks })
}

fn endpoint_token(e: &Endpoint) -> String {
    match e {
        Endpoint::Marked(m) => m.clone(),
        Endpoint::Orbifold(w, s) => format!("{w}{s}"),
    }
}

pub fn emit_curve(c: &Curve) -> String {
    let mut out = match &c.shape {
        CurveShape::Closed => "closed\n".to_string(),
        CurveShape::Open { start, end } => format!("open {} -> {}\n", endpoint_token(start), endpoint_token(end)),
    };
    for m in &c.marks {
        out.push_str(&match m {
            Mark::Cross { edge, sign } => format!("cross {edge} {sign}\n"),
            Mark::Through(w) => format!("through {w}\n"),
            Mark::Around(w, s) => format!("around {w} {s}\n"),
        });
    }
    out
}

/// `f: ...` with one value per event, plus the winding of a closed curve.
pub fn emit_grading(g: &GradedCurve) -> String {
    let values: Vec<String> = g.grading.iter().map(i64::to_string).collect();
    let mut out = format!("f: {}\n", values.join(" ")).replace(": \n", ":\n");
    if g.curve.shape == CurveShape::Closed {
        out.push_str(&format!("winding: {}\n", g.defect));
    }
    out
}

fn parse_tag(text: &str) -> Option<Sign> {
    match text {
        "[+]" => Some(Sign::Plus),
        "[-]" => Some(Sign::Minus),
        _ => None,
    }
}

fn parse_letter(p: &Presentation, t: &Token<'_>) -> Result<HomotopyLetter> {
    let (body, direction) = match t.text.strip_suffix("^-1") {
        Some(b) => (b, Direction::Inverse),
        None => (t.text, Direction::Direct),
    };
    let mut path = Vec::new();
    for a in body.split('.') {
        if a.is_empty() {
            return Err(syntax(t.pos, format!("malformed letter `{}`", t.text)));
        }
        if p.quiver().arrow(a).is_none() {
            return Err(located(t.pos, Error::UnknownArrow(a.into())));
        }
        path.push(a.to_string());
    }
    Ok(HomotopyLetter { path, direction })
}

/// Parses one word in the context of `p`; the word is not validated.
pub fn parse_word(p: &Presentation, text: &str) -> Result<HomotopyWord> {
    let text = text.trim_end_matches('\n');
    let mut tokens = tokenize(text, 1);
    if tokens.is_empty() {
        return Err(syntax(Pos { line: 1, column: 1 }, "empty word"));
    }
    if tokens[0].text == "band" {
        if tokens.get(1).map(|t| t.text) != Some(":") {
            return Err(syntax(tokens[0].pos, "expected `band:`"));
        }
        let letters = tokens[2..]
            .iter()
            .map(|t| parse_letter(p, t))
            .collect::<Result<Vec<_>>>()?;
        return Ok(HomotopyWord::Band(HomotopyBand { letters }));
    }
    let first_tag = parse_tag(tokens[0].text);
    if first_tag.is_some() {
        tokens.remove(0);
    }
    let last_tag = match tokens.last() {
        Some(t) => parse_tag(t.text),
        None => None,
    };
    if last_tag.is_some() {
        tokens.pop();
    }
    if let [t] = &tokens[..] {
        if let Some(v) = t.text.strip_prefix('@') {
            if !p.quiver().has_vertex(v) {
                return Err(located(t.pos, Error::UnknownVertex(v.into())));
            }
            let tag = first_tag.or(last_tag);
            return Ok(HomotopyWord::String(HomotopyString::trivial(v, tag)));
        }
    }
    if tokens.is_empty() {
        return Err(syntax(
            Pos { line: 1, column: 1 },
            "a string needs letters or `@vertex`",
        ));
    }
    let letters = tokens.iter().map(|t| parse_letter(p, t)).collect::<Result<Vec<_>>>()?;
    let first = &letters[0];
    let q = p.quiver();
    let start = match first.direction {
        Direction::Direct => q.arrow(&first.path[0]).expect("parsed").source.clone(),
        Direction::Inverse => q
            .arrow(&first.path[first.path.len() - 1])
            .expect("parsed")
            .target
            .clone(),
    };
    Ok(HomotopyWord::String(HomotopyString {
        start,
        letters,
        ends: [first_tag, last_tag],
    }))
}

fn letter_text(l: &HomotopyLetter) -> String {
    let body = l.path.join(".");
    match l.direction {
        Direction::Direct => body,
        Direction::Inverse => format!("{body}^-1"),
    }
}

pub fn emit_word(w: &HomotopyWord) -> String {
    let letters = |ls: &[HomotopyLetter]| ls.iter().map(letter_text).collect::<Vec<_>>().join(" ");
    match w {
        HomotopyWord::Band(b) => format!("band: {}", letters(&b.letters)),
        HomotopyWord::String(s) if s.letters.is_empty() => match s.ends[0] {
            Some(t) => format!("@{} [{t}]", s.start),
            None => format!("@{}", s.start),
        },
        HomotopyWord::String(s) => {
            let mut parts = Vec::new();
            if let Some(t) = s.ends[0] {
                parts.push(format!("[{t}]"));
            }
            parts.push(letters(&s.letters));
            if let Some(t) = s.ends[1] {
                parts.push(format!("[{t}]"));
            }
            parts.join(" ")
        }
    }
}
