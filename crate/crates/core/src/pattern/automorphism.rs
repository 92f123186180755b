//! Automorphisms of small graphs.
//!
//! `|Aut(F)|` is computed along a stabiliser chain: the product over `i` of
//! the orbit size of vertex `i` under the automorphisms fixing `0..i`. Each
//! orbit member is certified by finding one automorphism with a prescribed
//! partial assignment, so highly symmetric patterns never enumerate the whole
//! group.

use crate::graph::Graph;

struct Extender<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    taken: Vec<bool>,
}

impl Extender<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        if self.g.degree(v) != self.g.degree(w) || self.taken[w] {
            return false;
        }
        (0..self.g.n()).all(|u| match self.image[u] {
            Some(x) => self.g.has_edge(v, u) == self.g.has_edge(w, x) && (u != v || x == w),
            None => true,
        })
    }

    fn extend(&mut self, idx: usize) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return true;
        };
        if self.image[v].is_some() {
            return self.extend(idx + 1);
        }
        for w in 0..self.g.n() {
            if self.consistent(v, w) {
                self.image[v] = Some(w);
                self.taken[w] = true;
                if self.extend(idx + 1) {
                    return true;
                }
                self.image[v] = None;
                self.taken[w] = false;
            }
        }
        false
    }
}

/// Visit order: repeatedly take the vertex with the most already-ordered
/// neighbours, so adjacency constraints bite early.
fn connectivity_order(g: &Graph, first: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &v in first {
        if !placed[v] {
            placed[v] = true;
            order.push(v);
        }
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = g.neighbors(v).filter(|&u| placed[u]).count();
                (back, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Is there an automorphism of `g` extending the partial map `fixed`?
pub fn exists_automorphism(g: &Graph, fixed: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut ext = Extender {
        g,
        order: Vec::new(),
        image: vec![None; n],
        taken: vec![false; n],
    };
    for &(v, w) in fixed {
        if ext.image[v] == Some(w) {
            continue;
        }
        if ext.image[v].is_some() || !ext.consistent(v, w) {
            return false;
        }
        ext.image[v] = Some(w);
        ext.taken[w] = true;
    }
    let firsts: Vec<usize> = fixed.iter().map(|&(v, _)| v).collect();
    ext.order = connectivity_order(g, &firsts);
    ext.extend(0)
}

/// `|Aut(G)|`, the number of adjacency-preserving bijections `V(G) -> V(G)`.
pub fn automorphism_count(g: &Graph) -> u64 {
    let mut fixed = Vec::with_capacity(g.n());
    let mut total: u64 = 1;
    for v in 0..g.n() {
        let mut orbit = 0u64;
        let mut trial = fixed.clone();
        trial.push((v, v));
        for w in 0..g.n() {
            *trial.last_mut().unwrap() = (v, w);
            if exists_automorphism(g, &trial) {
                orbit += 1;
            }
        }
        total *= orbit;
        fixed.push((v, v));
    }
    total
}

/// Representatives of the orbits of `Aut(G)` on arcs `(a, b)`, taken in the
/// order: edges lexicographically, `(u, v)` before `(v, u)`. Each entry is the
/// first arc of its orbit in that order.
pub fn arc_orbit_representatives(g: &Graph) -> Vec<(usize, usize)> {
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for e in g.edges() {
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            let known = reps
                .iter()
                .any(|&(ra, rb)| exists_automorphism(g, &[(ra, a), (rb, b)]));
            if !known {
                reps.push((a, b));
            }
        }
    }
    reps
}
