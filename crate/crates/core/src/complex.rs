//! Dissected surfaces and orbifolds as polygon-gluing complexes.
//!
//! Each polygon is a counterclockwise cyclic list of sides. An internal
//! edge appears on exactly two sides with opposite directions; a pendant
//! edge to an orbifold point appears once, standing for the out-and-back
//! walk around it; a boundary segment appears once.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::presentation::Verdict;
use crate::ribbon::{arrive, leave, Ribbon, VertexKind};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// An internal edge, walked from end 0 to end 1 when `forward`.
    Internal {
        edge: String,
        forward: bool,
    },
    BoundarySegment(String),
    /// A pendant edge ending at an orbifold point.
    Pendant(String),
}

impl Side {
    pub fn internal(edge: impl Into<String>, forward: bool) -> Self {
        Side::Internal {
            edge: edge.into(),
            forward,
        }
    }

    pub fn edge(&self) -> Option<&str> {
        match self {
            Side::Internal { edge, .. } | Side::Pendant(edge) => Some(edge),
            Side::BoundarySegment(_) => None,
        }
    }

    fn reversed(&self) -> Self {
        match self {
            Side::Internal { edge, forward } => Side::internal(edge.clone(), !forward),
            other => other.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    pub id: String,
    pub sides: Vec<Side>,
}

impl Polygon {
    pub fn boundary_sides(&self) -> usize {
        self.sides
            .iter()
            .filter(|s| matches!(s, Side::BoundarySegment(_)))
            .count()
    }

    /// A polygon containing an orbifold point.
    pub fn is_generalised(&self) -> bool {
        self.sides.iter().any(|s| matches!(s, Side::Pendant(_)))
    }

    /// Interior polygons carry a puncture of the dual graph.
    pub fn is_interior(&self) -> bool {
        self.boundary_sides() == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PolygonComplex {
    pub polygons: Vec<Polygon>,
    /// Edge id to quiver vertex id.
    pub labels: BTreeMap<String, String>,
    /// Orbifold point id to the pendant edge ending there.
    pub orbifold_points: BTreeMap<String, String>,
}

impl PolygonComplex {
    /// All edge ids (internal and pendant), sorted.
    pub fn edges(&self) -> BTreeSet<String> {
        self.polygons
            .iter()
            .flat_map(|p| p.sides.iter().filter_map(Side::edge))
            .map(str::to_string)
            .collect()
    }

    pub fn pendant_edges(&self) -> BTreeSet<String> {
        self.orbifold_points.values().cloned().collect()
    }

    pub fn orbifold_point_on(&self, edge: &str) -> Option<&str> {
        self.orbifold_points
            .iter()
            .find(|(_, e)| *e == edge)
            .map(|(w, _)| w.as_str())
    }

    /// Quiver vertex of an edge: its label, or the edge id itself.
    pub fn label(&self, edge: &str) -> String {
        self.labels.get(edge).cloned().unwrap_or_else(|| edge.to_string())
    }

    pub fn ribbon(&self) -> Result<Ribbon> {
        Ribbon::new(self)
    }

    /// Same complex seen in the mirror: every walk reversed.
    pub fn reflected(&self) -> PolygonComplex {
        PolygonComplex {
            polygons: self
                .polygons
                .iter()
                .map(|p| Polygon {
                    id: p.id.clone(),
                    sides: p.sides.iter().rev().map(Side::reversed).collect(),
                })
                .collect(),
            labels: self.labels.clone(),
            orbifold_points: self.orbifold_points.clone(),
        }
    }
}

/// Gluing invariants plus the polygon dichotomy: every polygon has exactly
/// one boundary segment, or none (then it carries one interior puncture
/// of the dual graph).
pub fn validate_complex(c: &PolygonComplex) -> Verdict {
    let mut verdict = Verdict::default();
    if c.polygons.is_empty() {
        verdict.push("empty-complex", "no polygons");
        return verdict;
    }
    let mut ids = BTreeSet::new();
    let mut internal: BTreeMap<&str, Vec<bool>> = BTreeMap::new();
    let mut pendant: BTreeMap<&str, usize> = BTreeMap::new();
    let mut segments: BTreeMap<&str, usize> = BTreeMap::new();
    for p in &c.polygons {
        if !ids.insert(p.id.as_str()) {
            verdict.push("duplicate-id", &p.id);
        }
        if p.sides.iter().all(|s| matches!(s, Side::BoundarySegment(_))) {
            verdict.push("empty-polygon", format!("polygon {} has no edges", p.id));
        }
        if p.boundary_sides() > 1 {
            verdict.push(
                "polygon-dichotomy",
                format!("polygon {} has {} boundary segments", p.id, p.boundary_sides()),
            );
        }
        for s in &p.sides {
            match s {
                Side::Internal { edge, forward } => internal.entry(edge).or_default().push(*forward),
                Side::Pendant(edge) => *pendant.entry(edge).or_default() += 1,
                Side::BoundarySegment(b) => *segments.entry(b).or_default() += 1,
            }
        }
    }
    for (e, dirs) in &internal {
        if pendant.contains_key(e) {
            verdict.push("pendant", format!("edge {e} is both internal and pendant"));
        } else if dirs.len() != 2 {
            verdict.push("gluing", format!("internal edge {e} is used {} time(s)", dirs.len()));
        } else if dirs[0] == dirs[1] {
            verdict.push("gluing", format!("edge {e} is glued without reversing orientation"));
        }
    }
    let declared = c.pendant_edges();
    for (e, n) in &pendant {
        if *n != 1 {
            verdict.push("pendant", format!("pendant edge {e} is used {n} times"));
        }
        if !declared.contains(*e) {
            verdict.push("pendant", format!("pendant edge {e} has no orbifold point"));
        }
    }
    for (w, e) in &c.orbifold_points {
        if !pendant.contains_key(e.as_str()) {
            verdict.push(
                "pendant",
                format!("orbifold point {w} sits on {e}, which is not a pendant side"),
            );
        }
    }
    if declared.len() != c.orbifold_points.len() {
        verdict.push("pendant", "two orbifold points on one edge");
    }
    for (b, n) in segments {
        if n != 1 {
            verdict.push("boundary", format!("boundary segment {b} is used {n} times"));
        }
    }
    for e in c.labels.keys() {
        if !internal.contains_key(e.as_str()) && !pendant.contains_key(e.as_str()) {
            verdict.push("label", format!("label on unknown edge {e}"));
        }
    }
    if !verdict.ok() {
        return verdict;
    }
    if let Err(e) = Ribbon::new(c) {
        verdict.push("gluing", e);
        return verdict;
    }
    if !is_connected(c) {
        verdict.push("disconnected", "the complex is not connected");
    }
    verdict
}

fn is_connected(c: &PolygonComplex) -> bool {
    let mut by_edge: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, p) in c.polygons.iter().enumerate() {
        for e in p.sides.iter().filter_map(Side::edge) {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut seen = vec![false; c.polygons.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for e in c.polygons[i].sides.iter().filter_map(Side::edge) {
            for &j in &by_edge[e] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn require_valid(c: &PolygonComplex) -> Result<Ribbon> {
    let verdict = validate_complex(c);
    if !verdict.ok() {
        return Err(Error::InvalidComplex(verdict.to_string()));
    }
    Ribbon::new(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologyReport {
    /// `V - E` of the embedded graph, orbifold points and pendants included.
    pub euler_characteristic: i64,
    pub boundary_components: usize,
    pub genus: usize,
    pub boundary_marked_points: usize,
    pub interior_marked_points: usize,
    pub dual_interior_points: usize,
    pub orbifold_points: usize,
}

/// Topological invariants of the surface underlying a valid complex.
///
/// The graph retraction does not see the punctures of interior polygons,
/// so the genus solves `χ = 2 - 2g - b - |P*|`.
pub fn topology(c: &PolygonComplex) -> Result<TopologyReport> {
    let ribbon = require_valid(c)?;
    let v = ribbon.vertices.len() as i64;
    let e = c.edges().len() as i64;
    let chi = v - e;
    // boundary segment: from the vertex reached before it to the vertex left after it
    let mut succ: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &c.polygons {
        let m = p.sides.len();
        for i in 0..m {
            if let Side::BoundarySegment(_) = p.sides[i] {
                let from = arrive(&p.sides[(i + m - 1) % m]).expect("edge before boundary");
                let to = leave(&p.sides[(i + 1) % m]).expect("edge after boundary");
                let from = ribbon.vertex_of(ribbon.dart(from.0, from.1).expect("dart"));
                let to = ribbon.vertex_of(ribbon.dart(to.0, to.1).expect("dart"));
                succ.insert(from, to);
            }
        }
    }
    let mut components = 0;
    let mut seen = BTreeSet::new();
    for &start in succ.keys() {
        if seen.contains(&start) {
            continue;
        }
        components += 1;
        let mut cur = start;
        while seen.insert(cur) {
            cur = succ[&cur];
        }
    }
    let dual_interior = c.polygons.iter().filter(|p| p.is_interior()).count();
    let twice_genus = 2 - chi - components as i64 - dual_interior as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::InvalidComplex(format!(
            "inconsistent Euler characteristic {chi}"
        )));
    }
    Ok(TopologyReport {
        euler_characteristic: chi,
        boundary_components: components,
        genus: (twice_genus / 2) as usize,
        boundary_marked_points: ribbon.count(VertexKind::Boundary),
        interior_marked_points: ribbon.count(VertexKind::Interior),
        dual_interior_points: dual_interior,
        orbifold_points: c.orbifold_points.len(),
    })
}

/// The dissection by the dual graph: one polygon per (non-orbifold) graph
/// vertex, one dual edge per edge, with the same id and label. Pendant
/// edges dualize to pendant edges ending at the same orbifold point.
pub fn dualize(c: &PolygonComplex) -> Result<PolygonComplex> {
    let ribbon = require_valid(c)?;
    let mut polygons = Vec::new();
    for v in &ribbon.vertices {
        if v.kind == VertexKind::Orbifold {
            continue;
        }
        let k = polygons.len() + 1;
        let mut sides: Vec<Side> = v
            .darts
            .iter()
            .rev()
            .map(|&d| {
                let dart = &ribbon.darts[d];
                if ribbon.is_pendant(d) {
                    Side::Pendant(dart.edge.clone())
                } else {
                    Side::internal(dart.edge.clone(), dart.end == 1)
                }
            })
            .collect();
        if v.kind == VertexKind::Boundary {
            sides.push(Side::BoundarySegment(format!("b{k}")));
        }
        polygons.push(Polygon {
            id: format!("p{k}"),
            sides,
        });
    }
    Ok(PolygonComplex {
        polygons,
        labels: c.labels.clone(),
        orbifold_points: c.orbifold_points.clone(),
    })
}

const POLY: i64 = -1;
const BOUNDARY: i64 = -2;
const PENDANT: i64 = -3;
const INTERNAL: i64 = -4;

fn code_from(c: &PolygonComplex, occurrences: &BTreeMap<&str, Vec<(usize, usize)>>, start: (usize, usize)) -> Vec<i64> {
    let mut code = Vec::new();
    let mut names: BTreeMap<&str, (i64, bool)> = BTreeMap::new();
    let mut queued = vec![false; c.polygons.len()];
    let mut queue = VecDeque::from([start]);
    queued[start.0] = true;
    while let Some((pi, rot)) = queue.pop_front() {
        let sides = &c.polygons[pi].sides;
        code.push(POLY);
        for k in 0..sides.len() {
            let side = &sides[(rot + k) % sides.len()];
            match side {
                Side::BoundarySegment(_) => code.push(BOUNDARY),
                Side::Pendant(e) => {
                    let n = names.len() as i64;
                    let (id, _) = *names.entry(e).or_insert((n, true));
                    code.extend([PENDANT, id]);
                }
                Side::Internal { edge, forward } => {
                    let n = names.len() as i64;
                    let (id, first) = *names.entry(edge).or_insert((n, *forward));
                    code.extend([INTERNAL, id, i64::from(first == *forward)]);
                    for &(pj, pos) in &occurrences[edge.as_str()] {
                        if !queued[pj] {
                            queued[pj] = true;
                            queue.push_back((pj, pos));
                        }
                    }
                }
            }
        }
    }
    code
}

/// A relabeling- and rotation-invariant code of a connected complex.
/// Edge labels are ignored.
pub fn canonical_code(c: &PolygonComplex) -> Vec<i64> {
    let mut occurrences: BTreeMap<&str, Vec<(usize, usize)>> = BTreeMap::new();
    for (pi, p) in c.polygons.iter().enumerate() {
        for (k, s) in p.sides.iter().enumerate() {
            if let Some(e) = s.edge() {
                occurrences.entry(e).or_default().push((pi, k));
            }
        }
    }
    let mut best: Option<Vec<i64>> = None;
    for (pi, p) in c.polygons.iter().enumerate() {
        for rot in 0..p.sides.len() {
            let code = code_from(c, &occurrences, (pi, rot));
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Isomorphism up to relabeling of polygons, edges and segments and
/// rotation of polygon walks. With `allow_reflection` one global
/// orientation reversal is also allowed.
pub fn complexes_isomorphic(a: &PolygonComplex, b: &PolygonComplex, allow_reflection: bool) -> bool {
    let ca = canonical_code(a);
    ca == canonical_code(b) || (allow_reflection && ca == canonical_code(&b.reflected()))
}
