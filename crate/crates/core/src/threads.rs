//! Permitted and forbidden threads of a locally gentle presentation, and
//! the dimension of the algebra.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::validate::is_locally_gentle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadKind {
    /// Consecutive arrows compose to a nonzero path.
    Permitted,
    /// Consecutive arrows form a relation.
    Forbidden,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadShape {
    Linear,
    Cyclic,
}

/// A maximal walk whose consecutive compositions all avoid (permitted) or
/// all lie in (forbidden) the relations.
///
/// Trivial threads have no letters; they carry the vertex and a side
/// marker (0 or 1) distinguishing the two trivial threads a vertex
/// without arrows has.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Thread {
    pub kind: ThreadKind,
    pub shape: ThreadShape,
    pub letters: Vec<String>,
    pub trivial: Option<(String, u8)>,
}

impl Thread {
    /// Vertices visited, one entry per visit. Linear threads of `k` arrows
    /// visit `k + 1` vertices, cyclic ones `k`.
    pub fn visits(&self, p: &Presentation) -> Vec<String> {
        if let Some((v, _)) = &self.trivial {
            return vec![v.clone()];
        }
        let q = p.quiver();
        let mut out: Vec<String> = self
            .letters
            .iter()
            .map(|a| q.arrow(a).expect("thread arrow").source.clone())
            .collect();
        if self.shape == ThreadShape::Linear {
            let last = self.letters.last().expect("nontrivial thread");
            out.push(q.arrow(last).expect("thread arrow").target.clone());
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial.is_some()
    }
}

/// All threads of one kind, split by shape.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ThreadSet {
    pub linear: Vec<Thread>,
    pub cyclic: Vec<Thread>,
}

impl ThreadSet {
    pub fn iter(&self) -> impl Iterator<Item = &Thread> {
        self.linear.iter().chain(self.cyclic.iter())
    }

    pub fn len(&self) -> usize {
        self.linear.len() + self.cyclic.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Threads {
    pub permitted: ThreadSet,
    pub forbidden: ThreadSet,
}

fn continuation<'a>(p: &'a Presentation, a: &str, kind: ThreadKind) -> Option<&'a str> {
    let target = &p.quiver().arrow(a)?.target;
    p.quiver()
        .outgoing(target)
        .find(|b| p.is_relation(a, b) == (kind == ThreadKind::Forbidden))
}

fn has_predecessor(p: &Presentation, b: &str, kind: ThreadKind) -> bool {
    let source = &p.quiver().arrow(b).expect("arrow").source;
    p.quiver()
        .incoming(source)
        .any(|a| p.is_relation(a, b) == (kind == ThreadKind::Forbidden))
}

fn thread_set(p: &Presentation, kind: ThreadKind) -> Result<ThreadSet> {
    let q = p.quiver();
    let mut used = BTreeSet::new();
    let mut set = ThreadSet::default();
    for (a, _) in q.arrows() {
        if has_predecessor(p, a, kind) {
            continue;
        }
        let mut letters = vec![a.to_string()];
        used.insert(a.to_string());
        let mut cur = a;
        while let Some(b) = continuation(p, cur, kind) {
            if !used.insert(b.to_string()) {
                return Err(Error::Precondition(format!("arrow {b} reached twice")));
            }
            letters.push(b.to_string());
            cur = b;
        }
        set.linear.push(Thread {
            kind,
            shape: ThreadShape::Linear,
            letters,
            trivial: None,
        });
    }
    for (a, _) in q.arrows() {
        if used.contains(a) {
            continue;
        }
        // smallest id first, so each cycle is stored at its minimal rotation
        let mut letters = vec![a.to_string()];
        used.insert(a.to_string());
        let mut cur = a;
        loop {
            let b = continuation(p, cur, kind)
                .ok_or_else(|| Error::Precondition(format!("arrow {cur} has no continuation")))?;
            if b == a {
                break;
            }
            if !used.insert(b.to_string()) {
                return Err(Error::Precondition(format!("arrow {b} reached twice")));
            }
            letters.push(b.to_string());
            cur = b;
        }
        set.cyclic.push(Thread {
            kind,
            shape: ThreadShape::Cyclic,
            letters,
            trivial: None,
        });
    }
    let mut count: BTreeMap<String, usize> = q.vertices().map(|v| (v.to_string(), 0)).collect();
    for t in set.iter() {
        for v in t.visits(p) {
            *count.get_mut(&v).expect("vertex") += 1;
        }
    }
    for (v, n) in count {
        if n > 2 {
            return Err(Error::Precondition(format!("vertex {v} lies on {n} threads")));
        }
        for side in n..2 {
            set.linear.push(Thread {
                kind,
                shape: ThreadShape::Linear,
                letters: Vec::new(),
                trivial: Some((v.clone(), side as u8)),
            });
        }
    }
    Ok(set)
}

/// Permitted and forbidden threads (linear, trivial and cyclic).
///
/// Every vertex ends up with exactly two memberships of each kind.
pub fn threads(p: &Presentation) -> Result<Threads> {
    let verdict = is_locally_gentle(p);
    if !verdict.ok() {
        return Err(Error::Precondition(format!("not locally gentle: {verdict}")));
    }
    Ok(Threads {
        permitted: thread_set(p, ThreadKind::Permitted)?,
        forbidden: thread_set(p, ThreadKind::Forbidden)?,
    })
}

/// Number of nonzero paths (trivial paths included), or `None` when the
/// algebra is infinite dimensional.
pub fn dimension(p: &Presentation) -> Result<Option<usize>> {
    let t = threads(p)?;
    if !t.permitted.cyclic.is_empty() {
        return Ok(None);
    }
    let q = p.quiver();
    // nonzero paths starting with `a`; finite because there is no permitted cycle
    fn count(p: &Presentation, a: &str, memo: &mut BTreeMap<String, usize>) -> usize {
        if let Some(&n) = memo.get(a) {
            return n;
        }
        let n = 1 + continuation(p, a, ThreadKind::Permitted)
            .map(|b| count(p, b, memo))
            .unwrap_or(0);
        memo.insert(a.to_string(), n);
        n
    }
    let mut memo = BTreeMap::new();
    let paths: usize = q.arrows().map(|(a, _)| count(p, a, &mut memo)).sum();
    Ok(Some(q.vertex_count() + paths))
}
