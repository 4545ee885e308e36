//! Skew-gentle algebras and orbifold dissections.
//!
//! Each special loop at `v` turns the edge of `v`, which cuts out a digon
//! of the gentle model, into a pendant edge: the digon collapses, the two
//! endpoints of the edge merge into one marked point, and the edge now
//! joins that point to a new orbifold point of order two sitting in the
//! polygon on the other side.

use crate::complex::{complexes_isomorphic, dualize, validate_complex, PolygonComplex, Side};
use crate::error::{Error, Result};
use crate::koszul::quadratic_dual;
use crate::presentation::{Presentation, Verdict};
use crate::surface::{edge_id, gentle_to_dissection, read_presentation};
use crate::validate::is_skew_gentle;

fn is_digon_of(sides: &[Side], edge: &str) -> bool {
    matches!(sides, [Side::Internal { edge: e, .. }, Side::BoundarySegment(_)] if e == edge)
}

pub fn skewgentle_to_orbifold(p: &Presentation) -> Result<PolygonComplex> {
    let verdict = is_skew_gentle(p);
    if !verdict.ok() {
        return Err(Error::Precondition(format!("not skew-gentle: {verdict}")));
    }
    let mut c = gentle_to_dissection(&p.underlying())?;
    for (k, e) in p.special().iter().enumerate() {
        let v = &p.quiver().arrow(e).expect("special arrow").source;
        let edge = edge_id(v);
        let digons: Vec<usize> = (0..c.polygons.len())
            .filter(|&i| is_digon_of(&c.polygons[i].sides, &edge))
            .collect();
        let [digon] = digons[..] else {
            return Err(Error::NoDigon(e.clone()));
        };
        c.polygons.remove(digon);
        let side = c
            .polygons
            .iter_mut()
            .flat_map(|poly| poly.sides.iter_mut())
            .find(|s| matches!(s, Side::Internal { edge: x, .. } if *x == edge))
            .ok_or_else(|| Error::NoDigon(e.clone()))?;
        *side = Side::Pendant(edge.clone());
        c.orbifold_points.insert(format!("w{}", k + 1), edge);
    }
    let verdict = validate_complex(&c);
    if !verdict.ok() {
        return Err(Error::InvalidComplex(verdict.to_string()));
    }
    Ok(c)
}

pub fn orbifold_to_skewgentle(c: &PolygonComplex) -> Result<Presentation> {
    let verdict = validate_complex(c);
    if !verdict.ok() {
        return Err(Error::InvalidComplex(verdict.to_string()));
    }
    read_presentation(c, &c.ribbon()?)
}

/// The model of `A^!` is the model of `A` with the dissection and its dual
/// graph exchanged, with the same orbifold points. Orientation-preserving.
pub fn koszul_dissection_check(p: &Presentation) -> Verdict {
    koszul_dissection_check_up_to(p, false)
}

/// As [`koszul_dissection_check`], optionally identifying mirror images.
pub fn koszul_dissection_check_up_to(p: &Presentation, allow_reflection: bool) -> Verdict {
    let mut verdict = Verdict::default();
    let sides = quadratic_dual(p)
        .and_then(|d| skewgentle_to_orbifold(&d))
        .and_then(|left| Ok((left, dualize(&skewgentle_to_orbifold(p)?)?)));
    match sides {
        Ok((left, right)) => {
            if left.orbifold_points.len() != right.orbifold_points.len() {
                verdict.push("koszul-orbifold-points", "|Ω| differs between the two sides");
            }
            if !complexes_isomorphic(&left, &right, allow_reflection) {
                verdict.push("koszul-dissection", "model of A! is not the dual dissection");
            }
        }
        Err(e) => verdict.push("koszul-dissection", e),
    }
    verdict
}
