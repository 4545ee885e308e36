//! Graded curves on a dissected orbifold and their homotopy words.
//!
//! A curve is recorded by the events met along it: crossing an edge
//! (signed, `+` from the region at end 0 of the edge to the region at end 1),
//! passing through an orbifold point, or turning around one. Between two
//! events the curve runs inside one region, the fan of a graph vertex; the
//! arrows it sweeps there form one homotopy letter. Sweeping forwards in
//! the fan lowers the grading by one, backwards raises it.

use std::collections::BTreeMap;

use crate::complex::PolygonComplex;
use crate::error::{Error, Result};
use crate::iso::arrow_matching;
use crate::presentation::Presentation;
use crate::ribbon::{Ribbon, VertexKind};
use crate::strings::{
    validate_band, validate_string, Direction, HomotopyBand, HomotopyLetter, HomotopyString, HomotopyWord, Sign,
};
use crate::surface::read_presentation_with_corners;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    /// A boundary marked point, named by its graph vertex.
    Marked(String),
    /// An orbifold point with the tag of the string end.
    Orbifold(String, Sign),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Cross { edge: String, sign: Sign },
    Through(String),
    Around(String, Sign),
}

impl Mark {
    pub fn cross(edge: impl Into<String>, sign: Sign) -> Self {
        Mark::Cross {
            edge: edge.into(),
            sign,
        }
    }

    fn cancels(&self, other: &Mark) -> bool {
        match (self, other) {
            (Mark::Cross { edge: e, sign: s }, Mark::Cross { edge: f, sign: t }) => e == f && *s == t.flip(),
            (Mark::Around(w, _), Mark::Around(v, _)) => w == v,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveShape {
    Open { start: Endpoint, end: Endpoint },
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Curve {
    pub shape: CurveShape,
    pub marks: Vec<Mark>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCurve {
    pub curve: Curve,
    /// One value per mark.
    pub grading: Vec<i64>,
    /// Total change of the grading once around a closed curve; 0 when open.
    pub defect: i64,
}

/// Darts through which a curve leaves the region before an event and
/// enters the region after it. Orbifold events use the pendant base twice.
#[derive(Debug, Clone, Copy)]
struct Gate {
    exit: Option<usize>,
    entry: Option<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCurve(msg.into())
}

fn pendant_base(r: &Ribbon, c: &PolygonComplex, point: &str) -> Result<usize> {
    let edge = c
        .orbifold_points
        .get(point)
        .ok_or_else(|| invalid(format!("unknown orbifold point {point}")))?;
    Ok(r.dart(edge, 0).expect("pendant edge has darts"))
}

fn mark_gate(r: &Ribbon, c: &PolygonComplex, m: &Mark) -> Result<Gate> {
    match m {
        Mark::Cross { edge, sign } => {
            let d0 = r.dart(edge, 0).ok_or_else(|| invalid(format!("unknown edge {edge}")))?;
            if r.is_pendant(d0) {
                return Err(invalid(format!("edge {edge} ends at an orbifold point")));
            }
            let (exit, entry) = match sign {
                Sign::Plus => (d0, d0 ^ 1),
                Sign::Minus => (d0 ^ 1, d0),
            };
            Ok(Gate {
                exit: Some(exit),
                entry: Some(entry),
            })
        }
        Mark::Through(w) | Mark::Around(w, _) => {
            let base = pendant_base(r, c, w)?;
            Ok(Gate {
                exit: Some(base),
                entry: Some(base),
            })
        }
    }
}

/// The gates of a curve in order, checking that its endpoints sit in the
/// regions where it starts and ends.
fn gates(r: &Ribbon, c: &PolygonComplex, curve: &Curve) -> Result<Vec<Gate>> {
    let mut out: Vec<Gate> = Vec::new();
    let region_name = |d: usize| r.vertices[r.vertex_of(d)].name.as_str();
    if let CurveShape::Open {
        start: Endpoint::Orbifold(w, _),
        ..
    } = &curve.shape
    {
        out.push(Gate {
            exit: None,
            entry: Some(pendant_base(r, c, w)?),
        });
    }
    for m in &curve.marks {
        out.push(mark_gate(r, c, m)?);
    }
    match &curve.shape {
        CurveShape::Closed => {
            if out.is_empty() {
                return Err(invalid("a closed curve needs at least one event"));
            }
        }
        CurveShape::Open { start, end } => {
            if let Endpoint::Orbifold(w, _) = end {
                out.push(Gate {
                    exit: Some(pendant_base(r, c, w)?),
                    entry: None,
                });
            }
            if out.is_empty() {
                return Err(invalid("an open curve between marked points needs a crossing"));
            }
            if let Endpoint::Marked(x) = start {
                match out[0].exit {
                    Some(d) if region_name(d) == x => {}
                    _ => return Err(invalid(format!("the curve does not start at {x}"))),
                }
            }
            if let Endpoint::Marked(y) = end {
                match out[out.len() - 1].entry {
                    Some(d) if region_name(d) == y => {}
                    _ => return Err(invalid(format!("the curve does not end at {y}"))),
                }
            }
        }
    }
    Ok(out)
}

/// Gates, and the (entry, exit) darts bounding each segment inside a region.
type Segments = (Vec<Gate>, Vec<(usize, usize)>);

fn segments(r: &Ribbon, c: &PolygonComplex, curve: &Curve) -> Result<Segments> {
    let g = gates(r, c, curve)?;
    let n = g.len();
    let count = match curve.shape {
        CurveShape::Closed => n,
        CurveShape::Open { .. } => n - 1,
    };
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let x = g[i].entry.expect("inner gate");
        let y = g[(i + 1) % n].exit.expect("inner gate");
        if r.vertex_of(x) != r.vertex_of(y) {
            return Err(invalid(format!("events {} and {} are not in one region", i + 1, i + 2)));
        }
        let v = &r.vertices[r.vertex_of(x)];
        if v.kind != VertexKind::Boundary {
            return Err(Error::InteriorRegion(v.name.clone()));
        }
        if x == y {
            return Err(invalid(format!("the curve turns back after event {}", i + 1)));
        }
        out.push((x, y));
    }
    Ok((g, out))
}

/// Grading change along a segment.
fn step(r: &Ribbon, (x, y): (usize, usize)) -> i64 {
    if r.position(x) < r.position(y) {
        -1
    } else {
        1
    }
}

/// Checks that the events of `curve` are consistent with `d`.
pub fn validate_curve(d: &PolygonComplex, curve: &Curve) -> Result<()> {
    segments(&d.ribbon()?, d, curve).map(|_| ())
}

/// Grades `curve`, starting from `f0` at its first event.
pub fn grade(d: &PolygonComplex, curve: &Curve, f0: i64) -> Result<GradedCurve> {
    let r = d.ribbon()?;
    let (gates, segs) = segments(&r, d, curve)?;
    let steps: Vec<i64> = segs.iter().map(|&s| step(&r, s)).collect();
    let lead = usize::from(gates.first().is_some_and(|g| g.exit.is_none()));
    let mut grading = Vec::with_capacity(curve.marks.len());
    let mut f = f0;
    for k in 0..curve.marks.len() {
        if k > 0 {
            f += steps[lead + k - 1];
        }
        grading.push(f);
    }
    let defect = match curve.shape {
        CurveShape::Closed => steps.iter().sum(),
        CurveShape::Open { .. } => 0,
    };
    Ok(GradedCurve {
        curve: curve.clone(),
        grading,
        defect,
    })
}

pub fn winding_number(d: &PolygonComplex, curve: &Curve) -> Result<i64> {
    if curve.shape != CurveShape::Closed {
        return Err(invalid("the winding number needs a closed curve"));
    }
    Ok(grade(d, curve, 0)?.defect)
}

/// Skein normal form: orbifold events become `around(ω, +)`, then
/// adjacent inverse crossings and adjacent events at one orbifold point
/// cancel, cyclically for closed curves.
pub fn skein_normalize(curve: &Curve) -> Curve {
    let mut stack: Vec<Mark> = Vec::new();
    for m in &curve.marks {
        let m = match m {
            Mark::Through(w) | Mark::Around(w, _) => Mark::Around(w.clone(), Sign::Plus),
            other => other.clone(),
        };
        if stack.last().is_some_and(|top| top.cancels(&m)) {
            stack.pop();
        } else {
            stack.push(m);
        }
    }
    if curve.shape == CurveShape::Closed {
        while stack.len() >= 2 && stack[0].cancels(&stack[stack.len() - 1]) {
            stack.pop();
            stack.remove(0);
        }
    }
    Curve {
        shape: curve.shape.clone(),
        marks: stack,
    }
}

/// A presentation together with a model of it, matched arrow by arrow.
pub struct CurveModel<'a> {
    p: &'a Presentation,
    complex: &'a PolygonComplex,
    ribbon: Ribbon,
    dart_of_arrow: BTreeMap<String, usize>,
    arrow_of_dart: BTreeMap<usize, String>,
    edge_of_vertex: BTreeMap<String, String>,
}

impl<'a> CurveModel<'a> {
    /// Fails unless `d` is a model of `p` with the same vertex ids.
    pub fn new(p: &'a Presentation, d: &'a PolygonComplex) -> Result<Self> {
        let ribbon = d.ribbon()?;
        let (q, corners) = read_presentation_with_corners(d, &ribbon)?;
        let matching = arrow_matching(p, &q)
            .ok_or_else(|| Error::Precondition("the complex is not a model of the presentation".into()))?;
        let dart_of_corner: BTreeMap<&String, usize> = corners.iter().map(|(&d, a)| (a, d)).collect();
        let mut dart_of_arrow = BTreeMap::new();
        let mut arrow_of_dart = BTreeMap::new();
        for (a, image) in &matching {
            if let Some(&dart) = dart_of_corner.get(image) {
                dart_of_arrow.insert(a.clone(), dart);
                arrow_of_dart.insert(dart, a.clone());
            }
        }
        let edge_of_vertex = d.edges().into_iter().map(|e| (d.label(&e), e)).collect();
        Ok(Self {
            p,
            complex: d,
            ribbon,
            dart_of_arrow,
            arrow_of_dart,
            edge_of_vertex,
        })
    }

    fn edge(&self, v: &str) -> &str {
        &self.edge_of_vertex[v]
    }

    fn point_at(&self, v: &str) -> Option<&str> {
        self.complex.orbifold_point_on(self.edge(v))
    }

    /// Entry and exit darts of a letter.
    fn letter_darts(&self, l: &HomotopyLetter) -> Result<(usize, usize)> {
        let r = &self.ribbon;
        let darts: Vec<usize> = l.path.iter().map(|a| self.dart_of_arrow[a]).collect();
        for w in darts.windows(2) {
            if r.next(w[0]) != Some(w[1]) {
                return Err(Error::InvalidString("letter is not a path in one fan".into()));
            }
        }
        let first = darts[0];
        let after = r.next(darts[darts.len() - 1]).expect("arrow has a successor");
        Ok(match l.direction {
            Direction::Direct => (first, after),
            Direction::Inverse => (after, first),
        })
    }

    /// Event at vertex `v` between a segment leaving by `exit` and the next
    /// one entering by `entry`.
    fn junction(&self, v: &str, exit: usize, entry: usize) -> Result<Mark> {
        if let Some(w) = self.point_at(v) {
            return Ok(Mark::Around(w.to_string(), Sign::Plus));
        }
        if entry != self.ribbon.twin(exit) {
            return Err(Error::InvalidString(format!(
                "letters do not meet across {}",
                self.edge(v)
            )));
        }
        let sign = if self.ribbon.darts[exit].end == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        Ok(Mark::cross(self.edge(v), sign))
    }

    fn region(&self, d: usize) -> String {
        self.ribbon.vertices[self.ribbon.vertex_of(d)].name.clone()
    }

    /// The graded curve of a string or band, graded from 0.
    pub fn string_to_curve(&self, w: &HomotopyWord) -> Result<GradedCurve> {
        let verdict = crate::strings::validate_word(self.p, w);
        if !verdict.ok() {
            return Err(Error::InvalidString(verdict.to_string()));
        }
        let curve = match w {
            HomotopyWord::String(s) => self.open_curve(s)?,
            HomotopyWord::Band(b) => self.closed_curve(b)?,
        };
        grade(self.complex, &curve, 0)
    }

    fn walk_vertex(&self, d: usize) -> String {
        self.complex.label(&self.ribbon.darts[d].edge)
    }

    fn open_curve(&self, s: &HomotopyString) -> Result<Curve> {
        if s.letters.is_empty() {
            let v = &s.start;
            let e = self.edge(v);
            return Ok(match (self.point_at(v), s.ends[0]) {
                (Some(w), Some(tag)) => Curve {
                    shape: CurveShape::Open {
                        start: Endpoint::Marked(self.region(self.ribbon.dart(e, 0).expect("dart"))),
                        end: Endpoint::Orbifold(w.to_string(), tag),
                    },
                    marks: Vec::new(),
                },
                _ => Curve {
                    shape: CurveShape::Open {
                        start: Endpoint::Marked(self.region(self.ribbon.dart(e, 0).expect("dart"))),
                        end: Endpoint::Marked(self.region(self.ribbon.dart(e, 1).expect("dart"))),
                    },
                    marks: vec![Mark::cross(e, Sign::Plus)],
                },
            });
        }
        let darts = s
            .letters
            .iter()
            .map(|l| self.letter_darts(l))
            .collect::<Result<Vec<_>>>()?;
        let mut marks = Vec::new();
        let (first_entry, _) = darts[0];
        let start_vertex = self.walk_vertex(first_entry);
        let start = match (self.point_at(&start_vertex), s.ends[0]) {
            (Some(w), Some(tag)) => Endpoint::Orbifold(w.to_string(), tag),
            _ => {
                let outside = self.ribbon.twin(first_entry);
                marks.push(self.junction(&start_vertex, outside, first_entry)?);
                Endpoint::Marked(self.region(outside))
            }
        };
        for i in 0..darts.len() - 1 {
            let (exit, entry) = (darts[i].1, darts[i + 1].0);
            marks.push(self.junction(&self.walk_vertex(exit), exit, entry)?);
        }
        let (_, last_exit) = darts[darts.len() - 1];
        let end_vertex = self.walk_vertex(last_exit);
        let end = match (self.point_at(&end_vertex), s.ends[1]) {
            (Some(w), Some(tag)) => Endpoint::Orbifold(w.to_string(), tag),
            _ => {
                let outside = self.ribbon.twin(last_exit);
                marks.push(self.junction(&end_vertex, last_exit, outside)?);
                Endpoint::Marked(self.region(outside))
            }
        };
        Ok(Curve {
            shape: CurveShape::Open { start, end },
            marks,
        })
    }

    fn closed_curve(&self, b: &HomotopyBand) -> Result<Curve> {
        let darts = b
            .letters
            .iter()
            .map(|l| self.letter_darts(l))
            .collect::<Result<Vec<_>>>()?;
        let n = darts.len();
        let marks = (0..n)
            .map(|i| {
                let (exit, entry) = (darts[i].1, darts[(i + 1) % n].0);
                self.junction(&self.walk_vertex(exit), exit, entry)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Curve {
            shape: CurveShape::Closed,
            marks,
        })
    }

    fn letter(&self, (x, y): (usize, usize)) -> Result<HomotopyLetter> {
        let r = &self.ribbon;
        let fan = &r.vertices[r.vertex_of(x)].darts;
        let (i, j) = (r.position(x), r.position(y));
        let (range, direction) = if i < j {
            (i..j, Direction::Direct)
        } else {
            (j..i, Direction::Inverse)
        };
        let path = fan[range]
            .iter()
            .map(|d| {
                self.arrow_of_dart
                    .get(d)
                    .cloned()
                    .ok_or_else(|| invalid("segment sweeps a corner with no arrow"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HomotopyLetter { path, direction })
    }

    /// The canonical string or band of a graded curve.
    pub fn curve_to_string(&self, g: &GradedCurve) -> Result<HomotopyWord> {
        let curve = &g.curve;
        let (gates, segs) = segments(&self.ribbon, self.complex, curve)?;
        let steps: Vec<i64> = segs.iter().map(|&s| step(&self.ribbon, s)).collect();
        let letters = segs.iter().map(|&s| self.letter(s)).collect::<Result<Vec<_>>>()?;
        let word = match &curve.shape {
            CurveShape::Closed => {
                let winding: i64 = steps.iter().sum();
                if winding != 0 {
                    return Err(Error::NonzeroWinding(winding));
                }
                let band = HomotopyBand { letters };
                let verdict = validate_band(self.p, &band);
                if !verdict.ok() {
                    return Err(invalid(verdict.to_string()));
                }
                HomotopyWord::Band(band.canonicalize())
            }
            CurveShape::Open { start, end } => {
                let tag = |e: &Endpoint| match e {
                    Endpoint::Orbifold(_, t) => Some(*t),
                    Endpoint::Marked(_) => None,
                };
                let first = &gates[0];
                let start_vertex = self.walk_vertex(first.entry.or(first.exit).expect("gate"));
                let mut ends = [tag(start), tag(end)];
                if letters.is_empty() {
                    let t = ends[0].or(ends[1]);
                    ends = [t, t];
                }
                let string = HomotopyString {
                    start: start_vertex,
                    letters,
                    ends,
                };
                let verdict = validate_string(self.p, &string);
                if !verdict.ok() {
                    return Err(invalid(verdict.to_string()));
                }
                HomotopyWord::String(string.canonicalize(self.p))
            }
        };
        Ok(word)
    }
}
