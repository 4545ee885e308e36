//! Isomorphism of presentations by backtracking over arrow bijections.

use std::collections::BTreeMap;

use crate::presentation::Presentation;

struct Search<'a> {
    p: &'a Presentation,
    q: &'a Presentation,
    p_arrows: Vec<&'a str>,
    q_arrows: Vec<&'a str>,
    vmap: BTreeMap<&'a str, &'a str>,
    vinv: BTreeMap<&'a str, &'a str>,
    amap: Vec<Option<usize>>,
    used: Vec<bool>,
    fixed_vertices: bool,
}

impl<'a> Search<'a> {
    fn bind(&mut self, x: &'a str, y: &'a str, undo: &mut Vec<&'a str>) -> bool {
        match (self.vmap.get(x), self.vinv.get(y)) {
            (Some(&m), _) => m == y,
            (None, Some(_)) => false,
            (None, None) => {
                if self.fixed_vertices && x != y {
                    return false;
                }
                self.vmap.insert(x, y);
                self.vinv.insert(y, x);
                undo.push(x);
                true
            }
        }
    }

    fn relations_agree(&self, i: usize) -> bool {
        let j = self.amap[i].expect("mapped");
        let (a, fa) = (self.p_arrows[i], self.q_arrows[j]);
        (0..=i).all(|k| {
            let Some(l) = self.amap[k] else { return true };
            let (b, fb) = (self.p_arrows[k], self.q_arrows[l]);
            self.p.is_relation(a, b) == self.q.is_relation(fa, fb)
                && self.p.is_relation(b, a) == self.q.is_relation(fb, fa)
        })
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.p_arrows.len() {
            return true;
        }
        let a = self.p_arrows[i];
        let arrow = self.p.quiver().arrow(a).expect("arrow");
        for j in 0..self.q_arrows.len() {
            if self.used[j] {
                continue;
            }
            let b = self.q_arrows[j];
            if self.p.is_special(a) != self.q.is_special(b) {
                continue;
            }
            let target = self.q.quiver().arrow(b).expect("arrow");
            let mut undo = Vec::new();
            let ok = self.bind(&arrow.source, &target.source, &mut undo)
                && self.bind(&arrow.target, &target.target, &mut undo);
            if ok {
                self.amap[i] = Some(j);
                self.used[j] = true;
                if self.relations_agree(i) && self.run(i + 1) {
                    return true;
                }
                self.amap[i] = None;
                self.used[j] = false;
            }
            for x in undo {
                let y = self.vmap.remove(x).expect("bound");
                self.vinv.remove(y);
            }
        }
        false
    }
}

fn search(p: &Presentation, q: &Presentation, fixed_vertices: bool) -> Option<BTreeMap<String, String>> {
    let (pq, qq) = (p.quiver(), q.quiver());
    if pq.vertex_count() != qq.vertex_count()
        || pq.arrow_count() != qq.arrow_count()
        || p.relations().len() != q.relations().len()
        || p.special().len() != q.special().len()
    {
        return None;
    }
    let mut s = Search {
        p,
        q,
        p_arrows: pq.arrows().map(|(a, _)| a).collect(),
        q_arrows: qq.arrows().map(|(a, _)| a).collect(),
        vmap: BTreeMap::new(),
        vinv: BTreeMap::new(),
        amap: vec![None; pq.arrow_count()],
        used: vec![false; qq.arrow_count()],
        fixed_vertices,
    };
    if !s.run(0) {
        return None;
    }
    // isolated vertices are interchangeable
    if fixed_vertices && pq.vertices().ne(qq.vertices()) {
        return None;
    }
    Some(
        s.p_arrows
            .iter()
            .zip(&s.amap)
            .map(|(a, j)| (a.to_string(), s.q_arrows[j.expect("complete")].to_string()))
            .collect(),
    )
}

/// Whether a bijective relabeling of vertices and arrows carries `p` to `q`
/// preserving sources, targets, relations and special loops.
pub fn isomorphic(p: &Presentation, q: &Presentation) -> bool {
    search(p, q, false).is_some()
}

/// An arrow bijection `p → q` that is the identity on vertex ids, if one
/// exists. Used to identify two presentations of the same algebra that
/// differ only in arrow names.
pub fn arrow_matching(p: &Presentation, q: &Presentation) -> Option<BTreeMap<String, String>> {
    search(p, q, true)
}
