//! Oracles and corpora shared by the integration tests. Everything here is
//! written against definitions, not against the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use orbidiss::text::parse_dissection;
use orbidiss::{
    grade, validate_band, validate_string, Curve, CurveShape, Direction, Endpoint, HomotopyBand, HomotopyLetter,
    HomotopyString, Mark, PolygonComplex, Presentation, Sign,
};

const ARROW_IDS: [&str; 4] = ["a", "b", "c", "d"];

/// One presentation of the exhaustive corpus in plain data.
#[derive(Debug, Clone)]
pub struct Small {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<(usize, usize)>,
    pub special: Option<usize>,
}

impl Small {
    pub fn build(&self) -> Presentation {
        let names: Vec<String> = (1..=self.vertices).map(|v| v.to_string()).collect();
        let vs: Vec<&str> = names.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| (ARROW_IDS[i], vs[s], vs[t]))
            .collect();
        let rels: Vec<(&str, &str)> = self
            .relations
            .iter()
            .map(|&(x, y)| (ARROW_IDS[x], ARROW_IDS[y]))
            .collect();
        let special: Vec<&str> = self.special.iter().map(|&i| ARROW_IDS[i]).collect();
        Presentation::from_parts(&vs, &arrows, &rels, &special).expect("well formed")
    }

    fn ordinary(&self, i: usize) -> bool {
        self.special != Some(i)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            for &(s, t) in &self.arrows {
                if s == v {
                    stack.push(t);
                }
                if t == v {
                    stack.push(s);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}

fn multisets(types: usize, size: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(prefix.clone());
    if prefix.len() == size {
        return;
    }
    for t in min..types {
        prefix.push(t);
        multisets(types, size, t, prefix, out);
        prefix.pop();
    }
}

/// Every presentation with at most 3 vertices, 4 arrows and one special
/// loop, up to the order in which parallel arrows are named.
pub fn exhaustive_small() -> Vec<Small> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let types: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
        let mut shapes = Vec::new();
        multisets(types.len(), 4, 0, &mut Vec::new(), &mut shapes);
        for shape in shapes {
            let arrows: Vec<(usize, usize)> = shape.iter().map(|&i| types[i]).collect();
            let mut specials = vec![None];
            specials.extend((0..arrows.len()).filter(|&i| arrows[i].0 == arrows[i].1).map(Some));
            for special in specials {
                let mut small = Small {
                    vertices: n,
                    arrows: arrows.clone(),
                    relations: Vec::new(),
                    special,
                };
                let pairs: Vec<(usize, usize)> = (0..arrows.len())
                    .flat_map(|x| (0..arrows.len()).map(move |y| (x, y)))
                    .filter(|&(x, y)| arrows[x].1 == arrows[y].0 && small.ordinary(x) && small.ordinary(y))
                    .collect();
                for mask in 0u32..(1 << pairs.len()) {
                    small.relations = (0..pairs.len())
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| pairs[k])
                        .collect();
                    out.push(small.clone());
                }
            }
        }
    }
    out
}

/// Locally gentle, vertex by vertex: at most two arrows in and two out, and
/// the in-by-out incidence of relations is a partial permutation whose
/// complement (on composable pairs) is one too.
pub fn oracle_locally_gentle(s: &Small) -> bool {
    if s.special.is_some() {
        return false;
    }
    locally_gentle_with(s.vertices, &s.arrows, &s.relations.iter().copied().collect())
}

fn locally_gentle_with(vertices: usize, arrows: &[(usize, usize)], rel: &BTreeSet<(usize, usize)>) -> bool {
    for v in 0..vertices {
        let ins: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].1 == v).collect();
        let outs: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].0 == v).collect();
        if ins.len() > 2 || outs.len() > 2 {
            return false;
        }
        let matrix: Vec<Vec<bool>> = ins
            .iter()
            .map(|&x| outs.iter().map(|&y| rel.contains(&(x, y))).collect())
            .collect();
        for row in &matrix {
            let ones = row.iter().filter(|&&b| b).count();
            if ones > 1 || row.len() - ones > 1 {
                return false;
            }
        }
        for j in 0..outs.len() {
            let ones = matrix.iter().filter(|row| row[j]).count();
            if ones > 1 || matrix.len() - ones > 1 {
                return false;
            }
        }
    }
    true
}

/// Skew-gentle: declaring each special loop an ordinary loop squaring to
/// zero yields a locally gentle presentation, and no special vertex is
/// left without ordinary arrows.
pub fn oracle_skew_gentle(s: &Small) -> bool {
    let mut rel: BTreeSet<(usize, usize)> = s.relations.iter().copied().collect();
    if let Some(e) = s.special {
        rel.insert((e, e));
        let v = s.arrows[e].0;
        let lonely = (0..s.arrows.len()).all(|i| i == e || (s.arrows[i].0 != v && s.arrows[i].1 != v));
        if lonely {
            return false;
        }
    }
    locally_gentle_with(s.vertices, &s.arrows, &rel)
}

/// Hand-built complexes, written in the dissection format.
pub fn hand_built_complexes() -> Vec<(&'static str, PolygonComplex)> {
    let texts: [(&str, &str); 12] = [
        ("single arc", "poly p1: x+ b1\npoly p2: x- b2\nlabel x = 1\n"),
        ("triangle fan", "poly p1: x+ b1\npoly p2: x- y+ b2\npoly p3: y- b3\nlabel x = 1\nlabel y = 2\n"),
        (
            "annulus",
            "poly p1: x+ y- b1\npoly p2: x- y+ b2\nlabel x = 1\nlabel y = 2\n",
        ),
        (
            "square with a diagonal fan",
            "poly p1: u+ b1\npoly p2: u- v+ w+ b2\npoly p3: v- b3\npoly p4: w- b4\nlabel u = 1\nlabel v = 2\nlabel w = 3\n",
        ),
        (
            "punctured polygon",
            "poly p1: x+ b1\npoly p2: y- b2\npoly p3: z- b3\npoly p4: x- y+ z+\nlabel x = 1\nlabel y = 2\nlabel z = 3\n",
        ),
        ("loop arc", "poly p1: x+ x- b1\nlabel x = 1\n"),
        (
            "chain of four",
            "poly p1: e1+ b1\npoly p2: e1- e2+ b2\npoly p3: e2- e3+ b3\npoly p4: e3- e4+ b4\npoly p5: e4- b5\nlabel e1 = 1\nlabel e2 = 2\nlabel e3 = 3\nlabel e4 = 4\n",
        ),
        (
            "annulus with a spoke",
            "poly p1: x+ y- z+ b1\npoly p2: x- y+ b2\npoly p3: z- b3\nlabel x = 1\nlabel y = 2\nlabel z = 3\n",
        ),
        (
            "two triangles",
            "poly p1: x+ y+ b1\npoly p2: x- b2\npoly p3: y- b3\nlabel x = 1\nlabel y = 2\n",
        ),
        ("monogon with orbifold point", "poly p1: g x+ b1\npoly p2: x- b2\norbifold w1 on g\nlabel g = 1\nlabel x = 2\n"),
        (
            "two orbifold points",
            "poly p1: g x+ b1\npoly p2: x- h b2\norbifold w1 on g\norbifold w2 on h\nlabel g = 1\nlabel x = 2\nlabel h = 3\n",
        ),
        (
            "orbifold point beside a fan",
            "poly p1: x+ b1\npoly p2: x- g y+ b2\npoly p3: y- b3\norbifold w1 on g\nlabel x = 1\nlabel g = 2\nlabel y = 3\n",
        ),
    ];
    texts
        .into_iter()
        .map(|(name, text)| (name, parse_dissection(text).expect("hand-built complex parses")))
        .collect()
}

/// Nonzero paths of ordinary arrows with 1 to `max_len` arrows.
pub fn oracle_paths(p: &Presentation, max_len: usize) -> Vec<Vec<String>> {
    let q = p.quiver();
    let ordinary: Vec<String> = q
        .arrows()
        .map(|(a, _)| a.to_string())
        .filter(|a| !p.is_special(a))
        .collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &layer {
            for a in &ordinary {
                if let Some(last) = path.last() {
                    if q.arrow(last).unwrap().target != q.arrow(a).unwrap().source || p.is_relation(last, a) {
                        continue;
                    }
                }
                let mut longer = path.clone();
                longer.push(a.clone());
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn oracle_letters(p: &Presentation, max_len: usize) -> Vec<HomotopyLetter> {
    oracle_paths(p, max_len)
        .into_iter()
        .flat_map(|path| {
            [Direction::Direct, Direction::Inverse].map(|direction| HomotopyLetter {
                path: path.clone(),
                direction,
            })
        })
        .collect()
}

fn sequences(alphabet: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..alphabet {
                let mut longer = w.clone();
                longer.push(i);
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All valid strings found by filtering every letter sequence (and every
/// tag choice) through `validate_string`, canonicalized.
pub fn brute_force_strings(p: &Presentation, max_letters: usize, max_path: usize) -> BTreeSet<HomotopyString> {
    let letters = oracle_letters(p, max_path);
    let tags = [None, Some(Sign::Plus), Some(Sign::Minus)];
    let mut found = BTreeSet::new();
    for v in p.quiver().vertices() {
        for t in tags {
            let s = HomotopyString::trivial(v, t);
            if validate_string(p, &s).ok() {
                found.insert(s.canonicalize(p));
            }
        }
    }
    for word in sequences(letters.len(), max_letters) {
        let seq: Vec<HomotopyLetter> = word.iter().map(|&i| letters[i].clone()).collect();
        let first = &seq[0];
        let arrow = p.quiver().arrow(match first.direction {
            Direction::Direct => &first.path[0],
            Direction::Inverse => &first.path[first.path.len() - 1],
        });
        let start = match first.direction {
            Direction::Direct => arrow.unwrap().source.clone(),
            Direction::Inverse => arrow.unwrap().target.clone(),
        };
        for s in tags {
            for e in tags {
                let string = HomotopyString {
                    start: start.clone(),
                    letters: seq.clone(),
                    ends: [s, e],
                };
                if validate_string(p, &string).ok() {
                    found.insert(string.canonicalize(p));
                }
            }
        }
    }
    found
}

/// All valid bands among every cyclic letter sequence, canonicalized.
pub fn brute_force_bands(p: &Presentation, max_letters: usize, max_path: usize) -> BTreeSet<HomotopyBand> {
    let letters = oracle_letters(p, max_path);
    sequences(letters.len(), max_letters)
        .into_iter()
        .map(|w| HomotopyBand {
            letters: w.iter().map(|&i| letters[i].clone()).collect(),
        })
        .filter(|b| validate_band(p, b).ok())
        .map(|b| b.canonicalize())
        .collect()
}

fn reverse_closed(marks: &[Mark]) -> Vec<Mark> {
    marks
        .iter()
        .rev()
        .map(|m| match m {
            Mark::Cross { edge, sign } => Mark::cross(edge.clone(), sign.flip()),
            other => other.clone(),
        })
        .collect()
}

/// Least rotation of the marks or of the reversed marks.
pub fn closed_key(marks: &[Mark]) -> Vec<Mark> {
    let mut best = marks.to_vec();
    for w in [marks.to_vec(), reverse_closed(marks)] {
        for k in 0..w.len() {
            let mut r = w.clone();
            r.rotate_left(k);
            best = best.min(r);
        }
    }
    best
}

fn primitive(marks: &[Mark]) -> bool {
    let n = marks.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| (0..n).any(|i| marks[i] != marks[(i + d) % n]))
}

/// Every closed curve of crossings only, with at most `max` crossings, that
/// `grade` accepts on `d`; primitive, listed once up to rotation and
/// reversal.
pub fn closed_curves(d: &PolygonComplex, max: usize) -> Vec<Curve> {
    let pendants = d.pendant_edges();
    let alphabet: Vec<Mark> = d
        .edges()
        .into_iter()
        .filter(|e| !pendants.contains(e))
        .flat_map(|e| [Mark::cross(e.clone(), Sign::Plus), Mark::cross(e, Sign::Minus)])
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for word in sequences(alphabet.len(), max) {
        let marks: Vec<Mark> = word.iter().map(|&i| alphabet[i].clone()).collect();
        if !primitive(&marks) {
            continue;
        }
        let curve = Curve {
            shape: CurveShape::Closed,
            marks,
        };
        if grade(d, &curve, 0).is_ok() && seen.insert(closed_key(&curve.marks)) {
            out.push(curve);
        }
    }
    out
}

/// Marks encoded as small integers for the skein move search: crossings
/// `2k` / `2k + 1` are edge `k` with sign `+` / `-`; orbifold events are
/// `100 + 10 * point + kind` with kind 0 through, 1 around `+`, 2 around `-`.
pub fn encode(m: &Mark) -> u16 {
    let index = |s: &str| s[1..].parse::<u16>().unwrap();
    match m {
        Mark::Cross { edge, sign } => 2 * index(edge) + u16::from(*sign == Sign::Minus),
        Mark::Through(w) => 100 + 10 * index(w),
        Mark::Around(w, Sign::Plus) => 101 + 10 * index(w),
        Mark::Around(w, Sign::Minus) => 102 + 10 * index(w),
    }
}

fn is_orbifold(x: u16) -> bool {
    x >= 100
}

fn cancel(x: u16, y: u16) -> bool {
    if is_orbifold(x) && is_orbifold(y) {
        (x - 100) / 10 == (y - 100) / 10
    } else if !is_orbifold(x) && !is_orbifold(y) {
        x / 2 == y / 2 && x != y
    } else {
        false
    }
}

/// Every single skein move: normalize one orbifold event to `around +`, or
/// delete one cancelling adjacent pair (cyclically for closed curves).
fn moves(word: &[u16], closed: bool) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    for (i, &x) in word.iter().enumerate() {
        if is_orbifold(x) && (x - 100) % 10 != 1 {
            let mut w = word.to_vec();
            w[i] = x - (x - 100) % 10 + 1;
            out.push(w);
        }
    }
    let n = word.len();
    for i in 0..n {
        let j = i + 1;
        if j < n && cancel(word[i], word[j]) {
            let mut w = word.to_vec();
            w.drain(i..=j);
            out.push(w);
        }
    }
    if closed && n >= 2 && cancel(word[n - 1], word[0]) {
        out.push(word[1..n - 1].to_vec());
    }
    out
}

fn rotation_key(w: &[u16]) -> Vec<u16> {
    (0..w.len().max(1))
        .map(|k| {
            let mut r = w.to_vec();
            if !r.is_empty() {
                r.rotate_left(k);
            }
            r
        })
        .min()
        .unwrap()
}

/// Terminal words reachable by any order of skein moves; closed words are
/// compared up to rotation.
pub struct SkeinSearch {
    memo: HashMap<(bool, Vec<u16>), BTreeSet<Vec<u16>>>,
}

impl SkeinSearch {
    pub fn new() -> Self {
        Self { memo: HashMap::new() }
    }

    pub fn normal_forms(&mut self, word: &[u16], closed: bool) -> BTreeSet<Vec<u16>> {
        if let Some(hit) = self.memo.get(&(closed, word.to_vec())) {
            return hit.clone();
        }
        let next = moves(word, closed);
        let result = if next.is_empty() {
            BTreeSet::from([if closed { rotation_key(word) } else { word.to_vec() }])
        } else {
            let mut all = BTreeSet::new();
            for w in next {
                all.extend(self.normal_forms(&w, closed));
            }
            all
        };
        self.memo.insert((closed, word.to_vec()), result.clone());
        result
    }
}

/// Curves with up to `max_crossings` crossings of `e1` and `e2` and up to
/// `max_orbifold` events at `w1` (any kind) and `w2`, every interleaving,
/// open and closed.
pub fn skein_corpus(max_crossings: usize, max_orbifold: usize) -> Vec<Curve> {
    let crossings = [
        Mark::cross("e1", Sign::Plus),
        Mark::cross("e1", Sign::Minus),
        Mark::cross("e2", Sign::Plus),
        Mark::cross("e2", Sign::Minus),
    ];
    let events = [
        Mark::Through("w1".into()),
        Mark::Around("w1".into(), Sign::Plus),
        Mark::Around("w1".into(), Sign::Minus),
        Mark::Around("w2".into(), Sign::Plus),
    ];
    let mut out = Vec::new();
    let mut cross_words = vec![Vec::new()];
    cross_words.extend(sequences(crossings.len(), max_crossings));
    let mut event_words = vec![Vec::new()];
    event_words.extend(sequences(events.len(), max_orbifold));
    for cw in &cross_words {
        for ew in &event_words {
            let n = cw.len() + ew.len();
            // choose which positions hold orbifold events
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != ew.len() {
                    continue;
                }
                let (mut ci, mut ei) = (0, 0);
                let marks: Vec<Mark> = (0..n)
                    .map(|k| {
                        if mask >> k & 1 == 1 {
                            ei += 1;
                            events[ew[ei - 1]].clone()
                        } else {
                            ci += 1;
                            crossings[cw[ci - 1]].clone()
                        }
                    })
                    .collect();
                for shape in [
                    CurveShape::Closed,
                    CurveShape::Open {
                        start: Endpoint::Marked("m1".into()),
                        end: Endpoint::Marked("m2".into()),
                    },
                ] {
                    out.push(Curve {
                        shape,
                        marks: marks.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Counts of each kind, for reporting.
pub fn tally<K: Ord + Clone>(items: impl IntoIterator<Item = K>) -> BTreeMap<K, usize> {
    let mut m = BTreeMap::new();
    for k in items {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}
