//! Backtracking subgraph matcher.
//!
//! Pattern vertices are placed in a fixed plan order; the candidates for a
//! vertex are the common host neighbours of its already-placed pattern
//! neighbours, filtered by degree and tried in ascending (degree, index)
//! order. An optional extra host edge can be treated as present, which lets
//! the bootstrap engine test `G + e` without cloning `G`.

use std::ops::ControlFlow;

use super::{CopyWitness, Pattern, Plan};
use crate::error::{Error, Result};
use crate::graph::{iter_bits, Edge, Graph};

const UNSET: usize = usize::MAX;

pub(crate) struct Matcher<'a> {
    g: &'a Graph,
    extra: Option<Edge>,
    pat: &'a Pattern,
    map: Vec<usize>,
    used: Vec<u64>,
    cand_bufs: Vec<Vec<usize>>,
    acc: Vec<u64>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(g: &'a Graph, pat: &'a Pattern, extra: Option<Edge>) -> Self {
        Matcher {
            g,
            extra,
            pat,
            map: vec![UNSET; pat.s()],
            used: vec![0; g.words()],
            cand_bufs: vec![Vec::new(); pat.s()],
            acc: vec![0; g.words()],
        }
    }

    #[inline]
    fn host_degree(&self, x: usize) -> usize {
        self.g.degree(x) + self.extra.is_some_and(|e| e.contains(x)) as usize
    }

    #[inline]
    fn host_adjacent(&self, x: usize, y: usize) -> bool {
        self.g.has_edge(x, y) || self.extra == Some(Edge::new(x, y))
    }

    #[inline]
    fn mark(&mut self, x: usize, on: bool) {
        if on {
            self.used[x / 64] |= 1 << (x % 64);
        } else {
            self.used[x / 64] &= !(1 << (x % 64));
        }
    }

    fn fill_candidates(&mut self, p: usize, back: &[usize], out: &mut Vec<usize>) {
        out.clear();
        let n = self.g.n();
        let need = self.pat.graph().degree(p);
        if back.is_empty() {
            out.extend((0..n).filter(|&x| self.used[x / 64] >> (x % 64) & 1 == 0));
        } else {
            for w in self.acc.iter_mut() {
                *w = !0;
            }
            for &q in back {
                let x = self.map[q];
                let row = self.g.row(x);
                for (w, a) in self.acc.iter_mut().enumerate() {
                    let mut r = row[w];
                    if let Some(e) = self.extra {
                        if e.u() == x && e.v() / 64 == w {
                            r |= 1 << (e.v() % 64);
                        } else if e.v() == x && e.u() / 64 == w {
                            r |= 1 << (e.u() % 64);
                        }
                    }
                    *a &= r;
                }
            }
            for (a, u) in self.acc.iter_mut().zip(&self.used) {
                *a &= !u;
            }
            out.extend(iter_bits(&self.acc).take_while(|&x| x < n));
        }
        out.retain(|&x| self.host_degree(x) >= need);
        out.sort_by_key(|&x| (self.host_degree(x), x));
    }

    fn search<F>(&mut self, plan: &Plan, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == plan.order.len() {
            return visit(&self.map);
        }
        let p = plan.order[depth];
        if self.map[p] != UNSET {
            return self.search(plan, depth + 1, visit);
        }
        let mut cands = std::mem::take(&mut self.cand_bufs[depth]);
        self.fill_candidates(p, &plan.back[depth], &mut cands);
        let mut flow = ControlFlow::Continue(());
        for &x in &cands {
            self.map[p] = x;
            self.mark(x, true);
            flow = self.search(plan, depth + 1, visit);
            self.mark(x, false);
            self.map[p] = UNSET;
            if flow.is_break() {
                break;
            }
        }
        self.cand_bufs[depth] = cands;
        flow
    }

    /// Runs the unanchored search, calling `visit` on every embedding.
    pub(crate) fn for_each<F>(&mut self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.pat.s() > self.g.n() {
            return;
        }
        let plan = &self.pat.free_plan;
        let _ = self.search(plan, 0, &mut visit);
    }

    /// First embedding whose image contains host edge `{x, y}` as the image
    /// of a pattern edge, trying arc-orbit representatives in order.
    pub(crate) fn first_through(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        if self.pat.s() > self.g.n() || !self.host_adjacent(x, y) {
            return None;
        }
        let pat = self.pat;
        for (a, b, plan) in &pat.arc_plans {
            let pg = pat.graph();
            if self.host_degree(x) < pg.degree(*a) || self.host_degree(y) < pg.degree(*b) {
                continue;
            }
            self.map[*a] = x;
            self.map[*b] = y;
            self.mark(x, true);
            self.mark(y, true);
            let mut found = None;
            let _ = self.search(plan, 2, &mut |m: &[usize]| {
                found = Some(m.to_vec());
                ControlFlow::Break(())
            });
            self.mark(x, false);
            self.mark(y, false);
            self.map[*a] = UNSET;
            self.map[*b] = UNSET;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Witness of a copy of `pat` in `g + e` that uses `e`; `e` need not be in `g`.
pub(crate) fn find_copy_through(g: &Graph, pat: &Pattern, e: Edge) -> Option<Vec<usize>> {
    let extra = (!g.contains_edge(e)).then_some(e);
    Matcher::new(g, pat, extra).first_through(e.u(), e.v())
}

/// Does `g` contain a copy of `pat` (as a subgraph, not necessarily induced)?
pub fn contains_copy(g: &Graph, pat: &Pattern) -> bool {
    find_copy(g, pat).is_some()
}

/// The first copy of `pat` in `g` under the deterministic search order.
pub fn find_copy(g: &Graph, pat: &Pattern) -> Option<CopyWitness> {
    if g.edge_count() < pat.t() {
        return None;
    }
    let mut found = None;
    Matcher::new(g, pat, None).for_each(|m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found.map(|mapping| CopyWitness { mapping })
}

/// A copy of `pat` in `g` whose image contains the edge `e` of `g`.
pub fn copy_through_edge(g: &Graph, pat: &Pattern, e: Edge) -> Result<Option<CopyWitness>> {
    if e.v() >= g.n() || !g.contains_edge(e) {
        return Err(Error::Parameter(format!("{e} is not an edge of the graph")));
    }
    Ok(Matcher::new(g, pat, None)
        .first_through(e.u(), e.v())
        .map(|mapping| CopyWitness { mapping }))
}

/// Number of injective edge-preserving maps `V(F) -> V(G)`.
pub fn count_embeddings(g: &Graph, pat: &Pattern) -> u64 {
    let mut count = 0u64;
    Matcher::new(g, pat, None).for_each(|_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// `X_F(G)`: the number of subgraphs of `g` isomorphic to `pat`.
pub fn count_copies(g: &Graph, pat: &Pattern) -> u64 {
    count_embeddings(g, pat) / pat.aut()
}
