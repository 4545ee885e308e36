//! The fan structure around each graph vertex of a polygon complex.
//!
//! Every edge has two darts (its two ends). Polygons are read as
//! counterclockwise walks; a corner where the walk arrives along dart `d`
//! and leaves along dart `d'` puts `d` immediately before `d'` in the fan
//! of their common vertex. Fans are listed in that order, so consecutive
//! darts in a fan correspond to arrows of the algebra and a fan is a
//! permitted thread. For a pendant edge, end 0 is the base and end 1 the
//! orbifold point.

use std::collections::BTreeMap;

use crate::complex::{PolygonComplex, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: String,
    pub end: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    /// On the boundary: the fan is linear, bounded by boundary segments.
    Boundary,
    /// Interior puncture: the fan is cyclic.
    Interior,
    /// Orbifold point of order two, the tip of a pendant edge.
    Orbifold,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonVertex {
    pub name: String,
    pub kind: VertexKind,
    pub darts: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Ribbon {
    pub darts: Vec<Dart>,
    pub vertices: Vec<RibbonVertex>,
    index: BTreeMap<(String, u8), usize>,
    pendant: Vec<bool>,
    vertex_of: Vec<usize>,
    position: Vec<usize>,
}

/// Dart along which a counterclockwise walk arrives at the end of `side`.
pub(crate) fn arrive(side: &Side) -> Option<(&str, u8)> {
    match side {
        Side::Internal { edge, forward } => Some((edge, u8::from(*forward))),
        Side::Pendant(edge) => Some((edge, 0)),
        Side::BoundarySegment(_) => None,
    }
}

/// Dart along which a counterclockwise walk leaves at the start of `side`.
pub(crate) fn leave(side: &Side) -> Option<(&str, u8)> {
    match side {
        Side::Internal { edge, forward } => Some((edge, u8::from(!*forward))),
        Side::Pendant(edge) => Some((edge, 0)),
        Side::BoundarySegment(_) => None,
    }
}

impl Ribbon {
    pub fn new(c: &PolygonComplex) -> Result<Self> {
        let pendants = c.pendant_edges();
        let mut darts = Vec::new();
        let mut pendant = Vec::new();
        for e in c.edges() {
            for end in 0..2 {
                darts.push(Dart { edge: e.clone(), end });
                pendant.push(pendants.contains(&e));
            }
        }
        let index: BTreeMap<_, _> = darts
            .iter()
            .enumerate()
            .map(|(i, d)| ((d.edge.clone(), d.end), i))
            .collect();
        let n = darts.len();
        let mut next = vec![None; n];
        let mut before = vec![0usize; n];
        let mut after = vec![0usize; n];
        let mut first = vec![false; n];
        let mut last = vec![false; n];
        let lookup = |d: (&str, u8)| -> Result<usize> {
            index
                .get(&(d.0.to_string(), d.1))
                .copied()
                .ok_or_else(|| Error::InvalidComplex(format!("unknown edge {}", d.0)))
        };
        for poly in &c.polygons {
            let m = poly.sides.len();
            for i in 0..m {
                let (s, t) = (&poly.sides[i], &poly.sides[(i + 1) % m]);
                match (arrive(s), leave(t)) {
                    (Some(x), Some(y)) => {
                        let (x, y) = (lookup(x)?, lookup(y)?);
                        next[x] = Some(y);
                        after[x] += 1;
                        before[y] += 1;
                    }
                    (None, Some(y)) => {
                        let y = lookup(y)?;
                        first[y] = true;
                        before[y] += 1;
                    }
                    (Some(x), None) => {
                        let x = lookup(x)?;
                        last[x] = true;
                        after[x] += 1;
                    }
                    (None, None) => {
                        return Err(Error::InvalidComplex(format!(
                            "polygon {} has two consecutive boundary segments",
                            poly.id
                        )))
                    }
                }
            }
        }
        for i in 0..n {
            let tip = pendant[i] && darts[i].end == 1;
            let expected = usize::from(!tip);
            if before[i] != expected || after[i] != expected {
                return Err(Error::InvalidComplex(format!(
                    "end {} of edge {} is not glued consistently",
                    darts[i].end, darts[i].edge
                )));
            }
        }
        let mut vertex_of = vec![usize::MAX; n];
        let mut position = vec![0; n];
        let mut vertices = Vec::new();
        fn place(
            fan: Vec<usize>,
            kind: VertexKind,
            name: String,
            vertices: &mut Vec<RibbonVertex>,
            vertex_of: &mut [usize],
            position: &mut [usize],
        ) {
            for (k, &d) in fan.iter().enumerate() {
                vertex_of[d] = vertices.len();
                position[d] = k;
            }
            vertices.push(RibbonVertex { name, kind, darts: fan });
        }
        let mut boundary_count = 0;
        for start in (0..n).filter(|&d| first[d]) {
            let mut fan = vec![start];
            let mut cur = start;
            while !last[cur] {
                cur = next[cur].expect("counted");
                if fan.len() > n {
                    return Err(Error::InvalidComplex("fan does not terminate".into()));
                }
                fan.push(cur);
            }
            boundary_count += 1;
            place(
                fan,
                VertexKind::Boundary,
                format!("m{boundary_count}"),
                &mut vertices,
                &mut vertex_of,
                &mut position,
            );
        }
        let mut interior_count = 0;
        for start in 0..n {
            let tip = pendant[start] && darts[start].end == 1;
            if tip || vertex_of[start] != usize::MAX {
                continue;
            }
            let mut fan = vec![start];
            let mut cur = next[start].expect("counted");
            while cur != start {
                if vertex_of[cur] != usize::MAX || fan.len() > n {
                    return Err(Error::InvalidComplex("inconsistent cyclic fan".into()));
                }
                fan.push(cur);
                cur = next[cur].expect("counted");
            }
            interior_count += 1;
            place(
                fan,
                VertexKind::Interior,
                format!("q{interior_count}"),
                &mut vertices,
                &mut vertex_of,
                &mut position,
            );
        }
        for (point, edge) in &c.orbifold_points {
            let tip = *index
                .get(&(edge.clone(), 1))
                .ok_or_else(|| Error::InvalidComplex(format!("orbifold point {point} on unknown edge")))?;
            place(
                vec![tip],
                VertexKind::Orbifold,
                point.clone(),
                &mut vertices,
                &mut vertex_of,
                &mut position,
            );
        }
        if vertex_of.contains(&usize::MAX) {
            return Err(Error::InvalidComplex("pendant edge without orbifold point".into()));
        }
        Ok(Self {
            darts,
            vertices,
            index,
            pendant,
            vertex_of,
            position,
        })
    }

    pub fn dart(&self, edge: &str, end: u8) -> Option<usize> {
        self.index.get(&(edge.to_string(), end)).copied()
    }

    pub fn twin(&self, d: usize) -> usize {
        d ^ 1
    }

    pub fn is_pendant(&self, d: usize) -> bool {
        self.pendant[d]
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vertex_of[d]
    }

    /// Index of dart `d` within its vertex's fan.
    pub fn position(&self, d: usize) -> usize {
        self.position[d]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Fan successor of `d`, wrapping around for cyclic fans.
    pub fn next(&self, d: usize) -> Option<usize> {
        let v = &self.vertices[self.vertex_of[d]];
        let k = self.position[d];
        match v.kind {
            VertexKind::Boundary => v.darts.get(k + 1).copied(),
            VertexKind::Interior => Some(v.darts[(k + 1) % v.darts.len()]),
            VertexKind::Orbifold => None,
        }
    }

    pub fn count(&self, kind: VertexKind) -> usize {
        self.vertices.iter().filter(|v| v.kind == kind).count()
    }
}
