//! Homotopy strings and bands.
//!
//! A homotopy letter is a nonzero path of the gentle part read forwards
//! (direct) or backwards (inverse). Consecutive letters obey these
//! junction rules:
//!
//! * two direct letters meet in a relation `(last(p), first(q))`;
//! * two inverse letters `p⁻¹ q⁻¹` meet in a relation `(last(q), first(p))`;
//! * `p q⁻¹` requires `last(p) ≠ last(q)`;
//! * `p⁻¹ q` requires `first(p) ≠ first(q)`.
//!
//! Bands are cyclic, primitive, and have as many direct as inverse letters.
//! An end of a string at a vertex with a special loop carries a tag `±`;
//! a trivial string at such a vertex carries one tag (stored on both ends).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Direct,
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Direct => Direction::Inverse,
            Direction::Inverse => Direction::Direct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomotopyLetter {
    pub path: Vec<String>,
    pub direction: Direction,
}

impl HomotopyLetter {
    pub fn direct(path: &[&str]) -> Self {
        Self {
            path: path.iter().map(|s| s.to_string()).collect(),
            direction: Direction::Direct,
        }
    }

    pub fn inverse(path: &[&str]) -> Self {
        Self {
            path: path.iter().map(|s| s.to_string()).collect(),
            direction: Direction::Inverse,
        }
    }

    fn inverted(&self) -> Self {
        Self {
            path: self.path.clone(),
            direction: self.direction.flip(),
        }
    }

    /// Walk start and end vertex.
    fn ends<'a>(&self, p: &'a Presentation) -> Option<(&'a str, &'a str)> {
        let q = p.quiver();
        let s = q.arrow(self.path.first()?)?.source.as_str();
        let t = q.arrow(self.path.last()?)?.target.as_str();
        Some(match self.direction {
            Direction::Direct => (s, t),
            Direction::Inverse => (t, s),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomotopyString {
    /// Start vertex of the walk; the only data of a trivial string.
    pub start: String,
    pub letters: Vec<HomotopyLetter>,
    pub ends: [Option<Sign>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomotopyBand {
    pub letters: Vec<HomotopyLetter>,
}

/// Either kind of combinatorial word indexing an indecomposable object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HomotopyWord {
    String(HomotopyString),
    Band(HomotopyBand),
}

fn letter_ok(p: &Presentation, l: &HomotopyLetter) -> std::result::Result<(), String> {
    let q = p.quiver();
    if l.path.is_empty() {
        return Err("empty letter".into());
    }
    for a in &l.path {
        if q.arrow(a).is_none() || p.is_special(a) {
            return Err(format!("{a} is not an ordinary arrow"));
        }
    }
    for w in l.path.windows(2) {
        if q.arrow(&w[0]).expect("checked").target != q.arrow(&w[1]).expect("checked").source {
            return Err(format!("{} and {} are not composable", w[0], w[1]));
        }
        if p.is_relation(&w[0], &w[1]) {
            return Err(format!("path contains the relation {}{}", w[0], w[1]));
        }
    }
    Ok(())
}

/// Junction rule between consecutive letters that already share their
/// walk vertex.
pub(crate) fn junction_ok(p: &Presentation, x: &HomotopyLetter, y: &HomotopyLetter) -> bool {
    let first = |l: &HomotopyLetter| l.path[0].clone();
    let last = |l: &HomotopyLetter| l.path[l.path.len() - 1].clone();
    match (x.direction, y.direction) {
        (Direction::Direct, Direction::Direct) => p.is_relation(&last(x), &first(y)),
        (Direction::Inverse, Direction::Inverse) => p.is_relation(&last(y), &first(x)),
        (Direction::Direct, Direction::Inverse) => last(x) != last(y),
        (Direction::Inverse, Direction::Direct) => first(x) != first(y),
    }
}

fn check_sequence(p: &Presentation, letters: &[HomotopyLetter], cyclic: bool, verdict: &mut Verdict) {
    for (i, l) in letters.iter().enumerate() {
        if let Err(e) = letter_ok(p, l) {
            verdict.push("letter", format!("letter {}: {e}", i + 1));
        }
    }
    if !verdict.ok() {
        return;
    }
    let n = letters.len();
    let pairs = if cyclic { n } else { n.saturating_sub(1) };
    for i in 0..pairs {
        let (x, y) = (&letters[i], &letters[(i + 1) % n]);
        let (_, end) = x.ends(p).expect("valid letter");
        let (start, _) = y.ends(p).expect("valid letter");
        if end != start {
            verdict.push(
                "walk",
                format!("letter {} ends at {end} but the next starts at {start}", i + 1),
            );
        } else if !junction_ok(p, x, y) {
            verdict.push("junction", format!("junction after letter {} at vertex {end}", i + 1));
        }
    }
}

pub fn validate_string(p: &Presentation, s: &HomotopyString) -> Verdict {
    let mut verdict = Verdict::default();
    if !p.quiver().has_vertex(&s.start) {
        verdict.push("walk", format!("unknown vertex {}", s.start));
        return verdict;
    }
    check_sequence(p, &s.letters, false, &mut verdict);
    if !verdict.ok() {
        return verdict;
    }
    let (first, last) = match (s.letters.first(), s.letters.last()) {
        (Some(f), Some(l)) => (f.ends(p).expect("valid").0, l.ends(p).expect("valid").1),
        _ => (s.start.as_str(), s.start.as_str()),
    };
    if first != s.start {
        verdict.push("walk", format!("string starts at {first}, not {}", s.start));
    }
    for (k, v) in [first, last].into_iter().enumerate() {
        let special = p.special_at(v).is_some();
        if special != s.ends[k].is_some() {
            verdict.push(
                "decoration",
                format!(
                    "end {} at vertex {v} {} a tag",
                    k + 1,
                    if special { "needs" } else { "takes no" }
                ),
            );
        }
    }
    if s.letters.is_empty() && s.ends[0] != s.ends[1] {
        verdict.push("decoration", "a trivial string carries a single tag");
    }
    verdict
}

pub fn validate_band(p: &Presentation, b: &HomotopyBand) -> Verdict {
    let mut verdict = Verdict::default();
    if b.letters.is_empty() {
        verdict.push("walk", "empty band");
        return verdict;
    }
    check_sequence(p, &b.letters, true, &mut verdict);
    let direct = b.letters.iter().filter(|l| l.direction == Direction::Direct).count();
    let inverse = b.letters.len() - direct;
    if direct == 0 || inverse == 0 {
        verdict.push("band-letters", "a band needs direct and inverse letters");
    } else if direct != inverse {
        verdict.push("grading", format!("{direct} direct against {inverse} inverse letters"));
    }
    if !is_primitive(&b.letters) {
        verdict.push("primitive", "the band is a proper power");
    }
    verdict
}

pub fn validate_word(p: &Presentation, w: &HomotopyWord) -> Verdict {
    match w {
        HomotopyWord::String(s) => validate_string(p, s),
        HomotopyWord::Band(b) => validate_band(p, b),
    }
}

fn is_primitive<T: PartialEq>(letters: &[T]) -> bool {
    let n = letters.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| (0..n).any(|i| letters[i] != letters[(i + d) % n]))
}

impl HomotopyString {
    pub fn trivial(v: impl Into<String>, tag: Option<Sign>) -> Self {
        Self {
            start: v.into(),
            letters: Vec::new(),
            ends: [tag, tag],
        }
    }

    /// The same string read backwards.
    pub fn reversed(&self, p: &Presentation) -> Self {
        let start = match self.letters.last() {
            Some(l) => l.ends(p).map(|(_, t)| t.to_string()).unwrap_or_default(),
            None => self.start.clone(),
        };
        Self {
            start,
            letters: self.letters.iter().rev().map(HomotopyLetter::inverted).collect(),
            ends: [self.ends[1], self.ends[0]],
        }
    }

    fn key(&self) -> (&Vec<HomotopyLetter>, &String, &[Option<Sign>; 2]) {
        (&self.letters, &self.start, &self.ends)
    }

    /// The smaller of the string and its reverse.
    pub fn canonicalize(&self, p: &Presentation) -> Self {
        let r = self.reversed(p);
        if r.key() < self.key() {
            r
        } else {
            self.clone()
        }
    }
}

impl HomotopyBand {
    pub fn reversed(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(HomotopyLetter::inverted).collect(),
        }
    }

    /// Minimal rotation of the band or of its reverse.
    pub fn canonicalize(&self) -> Self {
        let mut best = self.letters.clone();
        for word in [self.letters.clone(), self.reversed().letters] {
            for k in 0..word.len() {
                let mut rotated = word.clone();
                rotated.rotate_left(k);
                if rotated < best {
                    best = rotated;
                }
            }
        }
        Self { letters: best }
    }
}

impl HomotopyWord {
    pub fn canonicalize(&self, p: &Presentation) -> Self {
        match self {
            HomotopyWord::String(s) => HomotopyWord::String(s.canonicalize(p)),
            HomotopyWord::Band(b) => HomotopyWord::Band(b.canonicalize()),
        }
    }
}

/// All homotopy letters with paths of length at most `max_path_len`.
pub fn letters(p: &Presentation, max_path_len: usize) -> Vec<HomotopyLetter> {
    let q = p.quiver();
    let mut paths: Vec<Vec<String>> = Vec::new();
    let mut frontier: Vec<Vec<String>> = q
        .arrows()
        .filter(|(a, _)| !p.is_special(a))
        .map(|(a, _)| vec![a.to_string()])
        .collect();
    for _ in 0..max_path_len {
        let mut longer = Vec::new();
        for path in &frontier {
            let last = path.last().expect("nonempty");
            for b in p.ordinary_outgoing(&q.arrow(last).expect("arrow").target) {
                if !p.is_relation(last, b) {
                    let mut next = path.clone();
                    next.push(b.to_string());
                    longer.push(next);
                }
            }
        }
        paths.append(&mut frontier);
        frontier = longer;
    }
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        for direction in [Direction::Direct, Direction::Inverse] {
            out.push(HomotopyLetter {
                path: path.clone(),
                direction,
            });
        }
    }
    out
}

fn tag_choices(special: bool) -> Vec<Option<Sign>> {
    if special {
        vec![Some(Sign::Plus), Some(Sign::Minus)]
    } else {
        vec![None]
    }
}

/// Canonical strings with at most `max_letters` letters, each of path
/// length at most `max_path_len`, trivial strings included.
pub fn enumerate_strings(p: &Presentation, max_letters: usize, max_path_len: usize) -> Vec<HomotopyString> {
    let alphabet = letters(p, max_path_len);
    let mut found = BTreeSet::new();
    for v in p.quiver().vertices() {
        for tag in tag_choices(p.special_at(v).is_some()) {
            found.insert(HomotopyString::trivial(v, tag));
        }
    }
    let mut stack: Vec<Vec<usize>> = (0..alphabet.len()).map(|i| vec![i]).collect();
    while let Some(word) = stack.pop() {
        let seq: Vec<HomotopyLetter> = word.iter().map(|&i| alphabet[i].clone()).collect();
        let (start, _) = seq[0].ends(p).expect("letter");
        let (_, end) = seq[seq.len() - 1].ends(p).expect("letter");
        for s in tag_choices(p.special_at(start).is_some()) {
            for e in tag_choices(p.special_at(end).is_some()) {
                let string = HomotopyString {
                    start: start.to_string(),
                    letters: seq.clone(),
                    ends: [s, e],
                };
                found.insert(string.canonicalize(p));
            }
        }
        if word.len() == max_letters {
            continue;
        }
        let last = &seq[seq.len() - 1];
        for (i, l) in alphabet.iter().enumerate() {
            if l.ends(p).expect("letter").0 == end && junction_ok(p, last, l) {
                let mut longer = word.clone();
                longer.push(i);
                stack.push(longer);
            }
        }
    }
    found.into_iter().collect()
}

/// Canonical primitive bands with at most `max_letters` letters.
pub fn enumerate_bands(p: &Presentation, max_letters: usize, max_path_len: usize) -> Vec<HomotopyBand> {
    let alphabet = letters(p, max_path_len);
    let mut found = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..alphabet.len()).map(|i| vec![i]).collect();
    while let Some(word) = stack.pop() {
        let first = &alphabet[word[0]];
        let last = &alphabet[word[word.len() - 1]];
        let (start, _) = first.ends(p).expect("letter");
        let (_, end) = last.ends(p).expect("letter");
        if end == start && junction_ok(p, last, first) {
            let band = HomotopyBand {
                letters: word.iter().map(|&i| alphabet[i].clone()).collect(),
            };
            let direct = band.letters.iter().filter(|l| l.direction == Direction::Direct).count();
            if 2 * direct == band.letters.len() && is_primitive(&band.letters) {
                found.insert(band.canonicalize());
            }
        }
        if word.len() == max_letters {
            continue;
        }
        for (i, l) in alphabet.iter().enumerate() {
            if l.ends(p).expect("letter").0 == end && junction_ok(p, last, l) {
                let mut longer = word.clone();
                longer.push(i);
                stack.push(longer);
            }
        }
    }
    found.into_iter().collect()
}

/// Fails with [`Error::InvalidString`] unless the word is valid.
pub fn require_valid(p: &Presentation, w: &HomotopyWord) -> Result<()> {
    let verdict = validate_word(p, w);
    if verdict.ok() {
        Ok(())
    } else {
        Err(Error::InvalidString(verdict.to_string()))
    }
}
