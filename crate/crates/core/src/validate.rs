//! Gentle, locally gentle and skew-gentle validators.

use crate::presentation::{Presentation, Verdict};
use crate::threads::dimension;

/// The four local conditions of a locally gentle presentation.
///
/// Special loops are not allowed here; pass [`Presentation::underlying`]
/// when checking the gentle part of a skew-gentle presentation.
pub fn is_locally_gentle(p: &Presentation) -> Verdict {
    let mut verdict = Verdict::default();
    if !p.special().is_empty() {
        verdict.push("has-special-loops", "locally gentle check expects S = ∅");
    }
    let q = p.quiver();
    for v in q.vertices() {
        let out = q.outgoing(v).count();
        let inc = q.incoming(v).count();
        if out > 2 {
            verdict.push("out-degree", format!("more than 2 arrows start at vertex {v}"));
        }
        if inc > 2 {
            verdict.push("in-degree", format!("more than 2 arrows end at vertex {v}"));
        }
    }
    for (a, arrow) in q.arrows() {
        let (mut kept, mut killed) = (0, 0);
        for b in q.outgoing(&arrow.target) {
            if p.is_relation(a, b) {
                killed += 1;
            } else {
                kept += 1;
            }
        }
        if kept > 1 {
            verdict.push(
                "permitted-successor",
                format!("arrow {a} has {kept} successors outside I"),
            );
        }
        if killed > 1 {
            verdict.push("forbidden-successor", format!("arrow {a} has {killed} successors in I"));
        }
        let (mut kept, mut killed) = (0, 0);
        for b in q.incoming(&arrow.source) {
            if p.is_relation(b, a) {
                killed += 1;
            } else {
                kept += 1;
            }
        }
        if kept > 1 {
            verdict.push(
                "permitted-predecessor",
                format!("arrow {a} has {kept} predecessors outside I"),
            );
        }
        if killed > 1 {
            verdict.push(
                "forbidden-predecessor",
                format!("arrow {a} has {killed} predecessors in I"),
            );
        }
    }
    verdict
}

/// Locally gentle and finite dimensional.
pub fn is_gentle(p: &Presentation) -> Verdict {
    let mut verdict = is_locally_gentle(p);
    if verdict.ok() && dimension(p).expect("locally gentle").is_none() {
        verdict.push("permitted-cycle", "the algebra is infinite dimensional");
    }
    verdict
}

/// Skew-gentle check: the gentle part is locally gentle, at most one
/// special loop per vertex, and every special vertex is a single-arrow
/// source, a single-arrow sink, or the transit point of exactly one
/// relation `ab` with `t(a) = s(b)`.
///
/// A special loop at a vertex without ordinary arrows is rejected with the
/// `special-isolated` code.
pub fn is_skew_gentle(p: &Presentation) -> Verdict {
    let mut verdict = is_locally_gentle(&p.underlying());
    let q = p.quiver();
    for e in p.special() {
        let arrow = q.arrow(e).expect("special arrow exists");
        if !arrow.is_loop() {
            verdict.push("special-not-loop", e);
            continue;
        }
        if p.relations().iter().any(|(a, b)| a == e || b == e) {
            verdict.push("special-in-relation", e);
        }
    }
    for v in q.vertices() {
        let specials: Vec<_> = p
            .special()
            .iter()
            .filter(|e| q.arrow(e).is_some_and(|a| a.source == v))
            .collect();
        if specials.is_empty() {
            continue;
        }
        if specials.len() > 1 {
            verdict.push(
                "special-multiple",
                format!("{} special loops at vertex {v}", specials.len()),
            );
        }
        let out: Vec<_> = p.ordinary_outgoing(v).collect();
        let inc: Vec<_> = p.ordinary_incoming(v).collect();
        let allowed = match (inc.as_slice(), out.as_slice()) {
            ([], []) => {
                verdict.push("special-isolated", format!("vertex {v} has no ordinary arrows"));
                continue;
            }
            ([], [_]) | ([_], []) => true,
            ([a], [b]) => p.is_relation(a, b),
            _ => false,
        };
        if !allowed {
            verdict.push(
                "special-vertex",
                format!("vertex {v} is neither a single-arrow source, a single-arrow sink nor a relation transit"),
            );
        }
    }
    verdict
}
