//! Global dimension of a finite dimensional monomial algebra from explicit
//! minimal projective resolutions, computed on the path basis.
//!
//! For a monomial algebra every syzygy of a simple module is a direct sum
//! of right ideals `gA` generated by paths. The kernel of `P_{t(g)} → gA`,
//! `q ↦ gq`, is spanned by the paths `q` with `gq = 0`; its minimal
//! generators are the prefix-minimal such paths.

use std::collections::BTreeMap;

use crate::presentation::Presentation;

struct PathAlgebra<'a> {
    p: &'a Presentation,
    /// Nonzero nontrivial paths, grouped by start vertex.
    paths_from: BTreeMap<String, Vec<Vec<String>>>,
}

impl<'a> PathAlgebra<'a> {
    fn new(p: &'a Presentation) -> Option<Self> {
        let q = p.quiver();
        let bound = q.arrow_count() * q.vertex_count() + 2;
        let mut paths_from: BTreeMap<String, Vec<Vec<String>>> =
            q.vertices().map(|v| (v.to_string(), Vec::new())).collect();
        let mut stack: Vec<Vec<String>> = q.arrows().map(|(a, _)| vec![a.to_string()]).collect();
        while let Some(path) = stack.pop() {
            if path.len() > bound {
                return None;
            }
            let first = q.arrow(&path[0]).expect("arrow");
            let last = q.arrow(path.last().expect("nonempty")).expect("arrow");
            for (b, _) in q.arrows().filter(|(_, b)| b.source == last.target) {
                if !p.is_relation(path.last().expect("nonempty"), b) {
                    let mut longer = path.clone();
                    longer.push(b.to_string());
                    stack.push(longer);
                }
            }
            paths_from.get_mut(&first.source).expect("vertex").push(path);
        }
        Some(Self { p, paths_from })
    }

    fn is_zero(&self, path: &[String]) -> bool {
        path.windows(2).any(|w| self.p.is_relation(&w[0], &w[1]))
    }

    fn target(&self, path: &[String]) -> &str {
        &self
            .p
            .quiver()
            .arrow(path.last().expect("nonempty"))
            .expect("arrow")
            .target
    }

    /// Minimal generators of the kernel of `P_{t(g)} → gA`.
    fn syzygy(&self, g: &[String]) -> Vec<Vec<String>> {
        let kernel: Vec<&Vec<String>> = self.paths_from[self.target(g)]
            .iter()
            .filter(|q| {
                let product: Vec<String> = g.iter().chain(q.iter()).cloned().collect();
                self.is_zero(&product)
            })
            .collect();
        kernel
            .iter()
            .filter(|q| !kernel.iter().any(|r| r.len() < q.len() && q.starts_with(r)))
            .map(|q| (*q).clone())
            .collect()
    }

    /// Projective dimension of `gA`; `None` when infinite.
    fn pd(&self, g: &[String], memo: &mut BTreeMap<Vec<String>, Option<Option<usize>>>) -> Option<usize> {
        match memo.get(g) {
            Some(Some(v)) => return *v,
            Some(None) => return None, // revisited while resolving: periodic
            None => {}
        }
        memo.insert(g.to_vec(), None);
        let mut best = Some(0);
        for q in self.syzygy(g) {
            best = match (best, self.pd(&q, memo)) {
                (Some(b), Some(d)) => Some(b.max(d + 1)),
                _ => None,
            };
        }
        memo.insert(g.to_vec(), Some(best));
        best
    }
}

/// Global dimension of a finite dimensional presentation with monomial
/// relations; `None` when infinite. Special loops are ignored.
pub fn global_dimension(p: &Presentation) -> Option<usize> {
    let p = p.underlying();
    let algebra = PathAlgebra::new(&p)?;
    let mut memo = BTreeMap::new();
    let mut gl = 0;
    for v in p.quiver().vertices() {
        // rad P_v = ⊕ bA over arrows b starting at v
        for (b, _) in p.quiver().arrows().filter(|(_, a)| a.source == v) {
            gl = gl.max(1 + algebra.pd(&[b.to_string()], &mut memo)?);
        }
    }
    Some(gl)
}
