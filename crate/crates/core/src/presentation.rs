//! Quivers with quadratic monomial relations and special loops.
//!
//! A path `ab` always means "traverse `a`, then `b`", so a relation pair
//! `(a, b)` requires `t(a) = s(b)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub source: String,
    pub target: String,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite directed multigraph. Ids of vertices and arrows live in
/// separate namespaces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: BTreeSet<String>,
    arrows: BTreeMap<String, Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<()> {
        let id = id.into();
        if !self.vertices.insert(id.clone()) {
            return Err(Error::DuplicateId(id));
        }
        Ok(())
    }

    pub fn add_arrow(
        &mut self,
        id: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Result<()> {
        let (id, source, target) = (id.into(), source.into(), target.into());
        for v in [&source, &target] {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        if self.arrows.contains_key(&id) {
            return Err(Error::DuplicateId(id));
        }
        self.arrows.insert(id, Arrow { source, target });
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn arrows(&self) -> impl Iterator<Item = (&str, &Arrow)> + '_ {
        self.arrows.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.get(id)
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertices.contains(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// Arrows starting at `v`, in id order.
    pub fn outgoing<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.arrows
            .iter()
            .filter(move |(_, a)| a.source == v)
            .map(|(k, _)| k.as_str())
    }

    /// Arrows ending at `v`, in id order.
    pub fn incoming<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.arrows
            .iter()
            .filter(move |(_, a)| a.target == v)
            .map(|(k, _)| k.as_str())
    }

    /// True when the underlying undirected graph is connected (and nonempty).
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.vertices.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([first.as_str()]);
        let mut stack = vec![first.as_str()];
        while let Some(v) = stack.pop() {
            for a in self.arrows.values() {
                let other = if a.source == v {
                    &a.target
                } else if a.target == v {
                    &a.source
                } else {
                    continue;
                };
                if seen.insert(other.as_str()) {
                    stack.push(other.as_str());
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// The algebra `KQ/I`: a quiver, a set of length-two monomial relations and
/// a set of special loops `ε` (each carrying the implicit relation `ε² = ε`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Presentation {
    quiver: Quiver,
    relations: BTreeSet<(String, String)>,
    special: BTreeSet<String>,
}

impl Presentation {
    /// Checks the structural invariants: relations are composable pairs,
    /// special arrows are loops, special loops occur in no relation.
    pub fn new(
        quiver: Quiver,
        relations: impl IntoIterator<Item = (String, String)>,
        special: impl IntoIterator<Item = String>,
    ) -> Result<Self> {
        let relations: BTreeSet<_> = relations.into_iter().collect();
        let special: BTreeSet<_> = special.into_iter().collect();
        for (a, b) in &relations {
            let arrow_a = quiver.arrow(a).ok_or_else(|| Error::UnknownArrow(a.clone()))?;
            let arrow_b = quiver.arrow(b).ok_or_else(|| Error::UnknownArrow(b.clone()))?;
            if arrow_a.target != arrow_b.source {
                return Err(Error::NotComposable(a.clone(), b.clone()));
            }
        }
        for e in &special {
            let arrow = quiver.arrow(e).ok_or_else(|| Error::UnknownArrow(e.clone()))?;
            if !arrow.is_loop() {
                return Err(Error::SpecialNotLoop(e.clone()));
            }
            if relations.iter().any(|(a, b)| a == e || b == e) {
                return Err(Error::SpecialInRelation(e.clone()));
            }
        }
        Ok(Self {
            quiver,
            relations,
            special,
        })
    }

    /// Shorthand used by fixtures and tests.
    pub fn from_parts(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
        special: &[&str],
    ) -> Result<Self> {
        let mut quiver = Quiver::new();
        for v in vertices {
            quiver.add_vertex(*v)?;
        }
        for (id, s, t) in arrows {
            quiver.add_arrow(*id, *s, *t)?;
        }
        Self::new(
            quiver,
            relations.iter().map(|(a, b)| (a.to_string(), b.to_string())),
            special.iter().map(|s| s.to_string()),
        )
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &BTreeSet<(String, String)> {
        &self.relations
    }

    pub fn special(&self) -> &BTreeSet<String> {
        &self.special
    }

    pub fn is_relation(&self, a: &str, b: &str) -> bool {
        // avoids allocating a key pair
        self.relations
            .range((a.to_string(), String::new())..)
            .take_while(|(x, _)| x == a)
            .any(|(_, y)| y == b)
    }

    pub fn is_special(&self, arrow: &str) -> bool {
        self.special.contains(arrow)
    }

    /// The special loop at `v`, if any.
    pub fn special_at(&self, v: &str) -> Option<&str> {
        self.special
            .iter()
            .find(|e| self.quiver.arrow(e).is_some_and(|a| a.source == v))
            .map(String::as_str)
    }

    /// The presentation with special loops deleted: the underlying gentle
    /// part `KQ'/I'`.
    pub fn underlying(&self) -> Presentation {
        let mut quiver = Quiver::new();
        for v in self.quiver.vertices() {
            quiver.add_vertex(v).expect("vertex ids are unique");
        }
        for (id, a) in self.quiver.arrows() {
            if !self.is_special(id) {
                quiver
                    .add_arrow(id, a.source.clone(), a.target.clone())
                    .expect("copied arrow is valid");
            }
        }
        Presentation {
            quiver,
            relations: self.relations.clone(),
            special: BTreeSet::new(),
        }
    }

    /// Ordinary (non-special) arrows starting at `v`.
    pub fn ordinary_outgoing<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.quiver.outgoing(v).filter(|a| !self.is_special(a))
    }

    /// Ordinary (non-special) arrows ending at `v`.
    pub fn ordinary_incoming<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.quiver.incoming(v).filter(|a| !self.is_special(a))
    }

    /// Composable pairs `(a, b)` of ordinary arrows, `t(a) = s(b)`.
    pub fn composable_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (a, arrow) in self.quiver.arrows() {
            if self.is_special(a) {
                continue;
            }
            for b in self.ordinary_outgoing(&arrow.target) {
                out.push((a.to_string(), b.to_string()));
            }
        }
        out
    }
}

/// Outcome of a validator: the list of violated rules, empty when valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<String>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, rule: &str, detail: impl fmt::Display) {
        self.violations.push(format!("{rule}: {detail}"));
    }

    /// Whether any violation carries the given rule code.
    pub fn has(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.split(':').next() == Some(rule))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "ok")
        } else {
            write!(f, "{}", self.violations.join("; "))
        }
    }
}
