//! Gentle algebras and dissected surfaces.
//!
//! Edges of the dissection are the vertices of the quiver, graph vertices
//! are the permitted threads (linear ones on the boundary, cyclic ones in
//! the interior) and polygons are the forbidden threads (linear ones with
//! one boundary segment, cyclic ones around an interior puncture of the
//! dual graph). Permitted threads are laid out along the fans of
//! [`Ribbon`](crate::ribbon::Ribbon), so tracing the counterclockwise
//! polygon walks recovers the forbidden threads.

use std::collections::BTreeMap;

use crate::complex::{validate_complex, Polygon, PolygonComplex, Side};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Quiver};
use crate::resolution;
use crate::ribbon::{Ribbon, VertexKind};
use crate::threads::{dimension, threads};
use crate::validate::is_locally_gentle;

/// Edge id used for quiver vertex `v`.
pub fn edge_id(v: &str) -> String {
    format!("e{v}")
}

/// Dart indices: vertex `k` (in id order) owns darts `2k` and `2k + 1`.
struct Fans {
    linear: Vec<Vec<usize>>,
    next: Vec<Option<usize>>,
    last: Vec<bool>,
}

fn build_fans(p: &Presentation, vertex_index: &BTreeMap<&str, usize>) -> Result<Fans> {
    let t = threads(p)?;
    let n = 2 * vertex_index.len();
    let mut used = vec![0u8; vertex_index.len()];
    let mut fan_of = |visits: Vec<String>| -> Vec<usize> {
        visits
            .iter()
            .map(|v| {
                let k = vertex_index[v.as_str()];
                let d = 2 * k + used[k] as usize;
                used[k] += 1;
                d
            })
            .collect()
    };
    let linear: Vec<Vec<usize>> = t.permitted.linear.iter().map(|th| fan_of(th.visits(p))).collect();
    let cyclic: Vec<Vec<usize>> = t.permitted.cyclic.iter().map(|th| fan_of(th.visits(p))).collect();
    let mut next = vec![None; n];
    let mut last = vec![false; n];
    for fan in &linear {
        for w in fan.windows(2) {
            next[w[0]] = Some(w[1]);
        }
        last[*fan.last().expect("nonempty fan")] = true;
    }
    for fan in &cyclic {
        for i in 0..fan.len() {
            next[fan[i]] = Some(fan[(i + 1) % fan.len()]);
        }
    }
    Ok(Fans { linear, next, last })
}

/// The surface dissection of a locally gentle presentation.
pub fn gentle_to_dissection(p: &Presentation) -> Result<PolygonComplex> {
    let verdict = is_locally_gentle(p);
    if !verdict.ok() {
        return Err(Error::Precondition(format!("not locally gentle: {verdict}")));
    }
    if !p.quiver().is_connected() {
        return Err(Error::Precondition("the quiver is not connected".into()));
    }
    let vertices: Vec<&str> = p.quiver().vertices().collect();
    let vertex_index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let fans = build_fans(p, &vertex_index)?;
    let side = |d: usize| Side::internal(edge_id(vertices[d / 2]), d.is_multiple_of(2));
    let mut left = vec![false; 2 * vertices.len()];
    let mut polygons = Vec::new();
    let mut segments = 0;
    for fan in &fans.linear {
        let mut sides = Vec::new();
        let mut cur = fan[0];
        loop {
            left[cur] = true;
            sides.push(side(cur));
            let arrived = cur ^ 1;
            if fans.last[arrived] {
                break;
            }
            cur = fans.next[arrived].expect("dart is not last");
        }
        segments += 1;
        sides.push(Side::BoundarySegment(format!("b{segments}")));
        polygons.push(sides);
    }
    for start in 0..left.len() {
        if left[start] {
            continue;
        }
        let mut sides = Vec::new();
        let mut cur = start;
        while !left[cur] {
            left[cur] = true;
            sides.push(side(cur));
            cur = fans.next[cur ^ 1].expect("interior walk");
        }
        polygons.push(sides);
    }
    let complex = PolygonComplex {
        polygons: polygons
            .into_iter()
            .enumerate()
            .map(|(i, sides)| Polygon {
                id: format!("p{}", i + 1),
                sides,
            })
            .collect(),
        labels: vertices.iter().map(|v| (edge_id(v), v.to_string())).collect(),
        orbifold_points: BTreeMap::new(),
    };
    debug_assert!(validate_complex(&complex).ok(), "{}", validate_complex(&complex));
    Ok(complex)
}

/// Reads the algebra off a valid complex: one vertex per edge, one arrow
/// per corner between two edges, one relation per pair of consecutive
/// corners of a polygon, one special loop per pendant edge.
pub(crate) fn read_presentation(c: &PolygonComplex, ribbon: &Ribbon) -> Result<Presentation> {
    read_presentation_with_corners(c, ribbon).map(|(p, _)| p)
}

/// As [`read_presentation`], also returning the arrow read off each dart
/// `d` (the corner from `d` to its fan successor).
pub(crate) fn read_presentation_with_corners(
    c: &PolygonComplex,
    ribbon: &Ribbon,
) -> Result<(Presentation, BTreeMap<usize, String>)> {
    let mut quiver = Quiver::new();
    let mut vertex_of_edge = BTreeMap::new();
    for e in c.edges() {
        let v = c.label(&e);
        quiver.add_vertex(v.clone())?;
        vertex_of_edge.insert(e, v);
    }
    let mut arrow_of_dart = BTreeMap::new();
    for d in 0..ribbon.darts.len() {
        if let Some(d2) = ribbon.next(d) {
            let id = format!("c{}", arrow_of_dart.len() + 1);
            quiver.add_arrow(
                id.clone(),
                vertex_of_edge[&ribbon.darts[d].edge].clone(),
                vertex_of_edge[&ribbon.darts[d2].edge].clone(),
            )?;
            arrow_of_dart.insert(d, id);
        }
    }
    let mut relations = Vec::new();
    for (&d, a) in &arrow_of_dart {
        let d2 = ribbon.next(d).expect("arrow");
        // the polygon walk continues along the edge of d2 (around the tip for pendants)
        let w = if ribbon.is_pendant(d2) { d2 } else { ribbon.twin(d2) };
        if let Some(b) = arrow_of_dart.get(&w) {
            relations.push((a.clone(), b.clone()));
        }
    }
    let mut special = Vec::new();
    for (k, edge) in c.pendant_edges().iter().enumerate() {
        let id = format!("s{}", k + 1);
        let v = vertex_of_edge[edge].clone();
        quiver.add_arrow(id.clone(), v.clone(), v)?;
        special.push(id);
    }
    Ok((Presentation::new(quiver, relations, special)?, arrow_of_dart))
}

/// Inverse of [`gentle_to_dissection`] on complexes without orbifold points.
pub fn dissection_to_gentle(c: &PolygonComplex) -> Result<Presentation> {
    let verdict = validate_complex(c);
    if !verdict.ok() {
        return Err(Error::InvalidComplex(verdict.to_string()));
    }
    if !c.orbifold_points.is_empty() {
        return Err(Error::Precondition("the complex has orbifold points".into()));
    }
    read_presentation(c, &c.ribbon()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessReport {
    pub finite_dimensional: bool,
    pub finite_global_dimension: bool,
    /// `|P|`: interior vertices of the dissection.
    pub interior_points: usize,
    /// `|P*|`: interior polygons.
    pub dual_interior_points: usize,
    /// Global dimension from explicit projective resolutions, when computed
    /// (finite dimensional presentations with at most three vertices).
    pub resolution_global_dimension: Option<Option<usize>>,
    pub agree: bool,
}

/// Cross-checks finite dimension against `P = ∅` and finite global
/// dimension against `P* = ∅`.
pub fn finiteness_checks(p: &Presentation) -> Result<FinitenessReport> {
    let finite_dimensional = dimension(p)?.is_some();
    let finite_global_dimension = threads(p)?.forbidden.cyclic.is_empty();
    let c = gentle_to_dissection(p)?;
    let ribbon = c.ribbon()?;
    let interior_points = ribbon.count(VertexKind::Interior);
    let dual_interior_points = c.polygons.iter().filter(|q| q.is_interior()).count();
    let resolution_global_dimension =
        (finite_dimensional && p.quiver().vertex_count() <= 3).then(|| resolution::global_dimension(p));
    let mut agree =
        finite_dimensional == (interior_points == 0) && finite_global_dimension == (dual_interior_points == 0);
    if let Some(gl) = resolution_global_dimension {
        agree &= gl.is_some() == finite_global_dimension;
    }
    Ok(FinitenessReport {
        finite_dimensional,
        finite_global_dimension,
        interior_points,
        dual_interior_points,
        resolution_global_dimension,
        agree,
    })
}
