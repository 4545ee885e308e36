//! Quadratic (Koszul) duals of skew-gentle presentations.

use crate::error::{Error, Result};
use crate::iso::isomorphic;
use crate::presentation::{Presentation, Quiver, Verdict};
use crate::validate::is_skew_gentle;

/// Name of the dual arrow of `a`.
pub fn dual_arrow(a: &str) -> String {
    format!("{a}*")
}

/// The quadratic dual on the opposite quiver.
///
/// Arrow `a: v -> w` becomes `a*: w -> v`; special loops stay special.
/// For a composable pair `(a, b)` through an ordinary vertex, `(b*, a*)` is
/// a dual relation iff `(a, b)` is not a relation. Through a vertex
/// carrying a special loop the relation status is kept: there the
/// orthogonal complement is taken inside the two-dimensional space spanned
/// by the paths through `ε` and `1 - ε`, which sends the one relation
/// `ab = 0` to one relation again.
pub fn quadratic_dual(p: &Presentation) -> Result<Presentation> {
    let verdict = is_skew_gentle(p);
    if !verdict.ok() {
        return Err(Error::Precondition(format!("not skew-gentle: {verdict}")));
    }
    let mut quiver = Quiver::new();
    for v in p.quiver().vertices() {
        quiver.add_vertex(v)?;
    }
    for (a, arrow) in p.quiver().arrows() {
        quiver.add_arrow(dual_arrow(a), arrow.target.clone(), arrow.source.clone())?;
    }
    let mut relations = Vec::new();
    for (a, b) in p.composable_pairs() {
        let through = &p.quiver().arrow(&a).expect("arrow").target;
        let related = p.is_relation(&a, &b);
        let dual_related = if p.special_at(through).is_some() {
            related
        } else {
            !related
        };
        if dual_related {
            relations.push((dual_arrow(&b), dual_arrow(&a)));
        }
    }
    let special = p.special().iter().map(|e| dual_arrow(e));
    Presentation::new(quiver, relations, special)
}

/// `A^!!` is isomorphic to `A`.
pub fn double_dual_check(p: &Presentation) -> Verdict {
    let mut verdict = Verdict::default();
    match quadratic_dual(p).and_then(|d| quadratic_dual(&d)) {
        Ok(dd) if isomorphic(&dd, p) => {}
        Ok(_) => verdict.push("double-dual", "A!! is not isomorphic to A"),
        Err(e) => verdict.push("double-dual", e),
    }
    verdict
}
