//! Exact `wsat(G, F)` by iterative deepening over edge subsets.
//!
//! For `k = lower_bound_general(G, F), k + 1, ...` the `k`-subsets of `E(G)`
//! are enumerated in colexicographic order (largest edge index first) by a
//! depth-first search. A branch is cut when
//!
//! * some vertex can no longer reach degree `min{d_G(v), δ(F) - 1}` with the
//!   edges still available below the current index, or
//! * the edge just chosen completes a copy of `F` (supersets stay non-free).
//!
//! Surviving `k`-subsets are tested for percolation. The first success is
//! optimal because every smaller `k` was exhausted.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{
    check_pattern_size, lower_bound_general, Certificate, Method, SearchBudget, WsatResult,
};
use crate::bootstrap::{closure, percolates, ActivationTrace};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::pattern::{contains_copy, find_copy_through, Pattern};

enum Level {
    Found(Graph),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    pat: &'a Pattern,
    edges: Vec<Edge>,
    need: Vec<u32>,
    /// `avail[c * n + v]`: edges with index `< c` incident to `v`.
    avail: Vec<u16>,
    budget: SearchBudget,
    started: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, pat: &'a Pattern, budget: SearchBudget) -> Self {
        let n = g.n();
        let edges = g.edges();
        let floor = pat.delta() as u32 - 1;
        let need = (0..n).map(|v| (g.degree(v) as u32).min(floor)).collect();
        let mut avail = vec![0u16; (edges.len() + 1) * n];
        for (c, e) in edges.iter().enumerate() {
            let (prev, next) = avail.split_at_mut((c + 1) * n);
            next[..n].copy_from_slice(&prev[c * n..]);
            next[e.u()] += 1;
            next[e.v()] += 1;
        }
        Search {
            g,
            pat,
            edges,
            need,
            avail,
            budget,
            started: Instant::now(),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_time = visited.is_multiple_of(1024)
            && self.started.elapsed().as_secs_f64() > self.budget.max_seconds;
        if visited > self.budget.max_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    /// Can `h + edges[c]` still be completed with `r - 1` edges of index `< c`?
    fn feasible(&self, h: &Graph, c: usize, r: usize) -> bool {
        let n = self.g.n();
        let e = self.edges[c];
        let below = &self.avail[c * n..(c + 1) * n];
        let mut total_deficit = 0usize;
        for (v, &avail) in below.iter().enumerate() {
            let have = h.degree(v) as u32 + e.contains(v) as u32;
            let need = self.need[v];
            if have >= need {
                continue;
            }
            let deficit = (need - have) as usize;
            if deficit > avail as usize || deficit > r - 1 {
                return false;
            }
            total_deficit += deficit;
        }
        total_deficit <= 2 * (r - 1)
    }

    fn leaf(&self, h: &Graph) -> ControlFlow<Option<Graph>> {
        if (0..self.g.n()).any(|v| (h.degree(v) as u32) < self.need[v]) {
            return ControlFlow::Continue(());
        }
        match percolates(self.g, self.pat, h) {
            Ok(true) => ControlFlow::Break(Some(h.clone())),
            _ => ControlFlow::Continue(()),
        }
    }

    /// `Break(Some)` on success, `Break(None)` when the budget ran out.
    fn dfs(&self, h: &mut Graph, r: usize, hi: usize) -> ControlFlow<Option<Graph>> {
        if !self.tick() {
            return ControlFlow::Break(None);
        }
        if r == 0 {
            return self.leaf(h);
        }
        for c in (r - 1)..hi {
            self.branch(h, r, c)?;
        }
        ControlFlow::Continue(())
    }

    fn branch(&self, h: &mut Graph, r: usize, c: usize) -> ControlFlow<Option<Graph>> {
        if !self.feasible(h, c, r) {
            return ControlFlow::Continue(());
        }
        let e = self.edges[c];
        if find_copy_through(h, self.pat, e).is_some() {
            return ControlFlow::Continue(());
        }
        h.add_edge(e.u(), e.v());
        let flow = self.dfs(h, r - 1, c);
        h.remove_edge(e.u(), e.v());
        flow
    }

    fn level(&self, k: usize, workers: usize) -> Level {
        let m = self.edges.len();
        let empty = Graph::empty(self.g.n());
        let outcome = |flow: ControlFlow<Option<Graph>>| match flow {
            ControlFlow::Break(Some(h)) => Some(Level::Found(h)),
            ControlFlow::Break(None) => Some(Level::OutOfBudget),
            ControlFlow::Continue(()) => None,
        };
        if k == 0 {
            let mut h = empty;
            return outcome(self.dfs(&mut h, 0, 0)).unwrap_or(Level::Exhausted);
        }
        let top = |c: usize| {
            if !self.tick() {
                return Some(Level::OutOfBudget);
            }
            let mut h = empty.clone();
            outcome(self.branch(&mut h, k, c))
        };
        let found = if workers <= 1 {
            (k - 1..m).find_map(top)
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                Ok(pool) => pool.install(|| (k - 1..m).into_par_iter().find_map_first(top)),
                Err(_) => (k - 1..m).find_map(top),
            }
        };
        found.unwrap_or(Level::Exhausted)
    }
}

/// Exact `wsat(G, F)` on one thread.
pub fn wsat_exact(g: &Graph, pattern: &Pattern, budget: SearchBudget) -> Result<WsatResult> {
    wsat_exact_with_workers(g, pattern, budget, 1)
}

/// Exact `wsat(G, F)`, splitting each level's top branch across `workers`
/// threads. The value does not depend on `workers`; the lowest-indexed
/// successful branch wins, so the certificate does not either.
///
/// A host without copies of `F` is its own unique weakly saturated subgraph,
/// which also covers hosts with fewer vertices than the pattern.
pub fn wsat_exact_with_workers(
    g: &Graph,
    pattern: &Pattern,
    budget: SearchBudget,
    workers: usize,
) -> Result<WsatResult> {
    check_pattern_size(pattern)?;
    let m = g.edge_count() as u64;
    if !contains_copy(g, pattern) {
        return Ok(WsatResult {
            lower: m,
            upper: m,
            exact: Some(m),
            certificate: Some(Certificate {
                graph: g.clone(),
                trace: ActivationTrace::default(),
            }),
            method: Method::ExactSearch,
            budget_exhausted: false,
            nodes: 0,
        });
    }

    let lb = lower_bound_general(g, pattern)?;
    let search = Search::new(g, pattern, budget);
    for k in lb..=m {
        match search.level(k as usize, workers) {
            Level::Found(h) => {
                let run = closure(g, pattern, &h)?;
                if !run.percolates {
                    return Err(Error::Invariant(
                        "search accepted a graph whose closure is not the host".into(),
                    ));
                }
                return Ok(WsatResult {
                    lower: k,
                    upper: k,
                    exact: Some(k),
                    certificate: Some(Certificate {
                        graph: h,
                        trace: run.trace,
                    }),
                    method: Method::ExactSearch,
                    budget_exhausted: false,
                    nodes: search.nodes.load(Ordering::Relaxed),
                });
            }
            Level::Exhausted => {}
            Level::OutOfBudget => {
                return Ok(WsatResult {
                    lower: k,
                    upper: m,
                    exact: None,
                    certificate: None,
                    method: Method::Bound,
                    budget_exhausted: true,
                    nodes: search.nodes.load(Ordering::Relaxed),
                });
            }
        }
    }
    Err(Error::Invariant(
        "no weakly saturated subgraph found up to |E(G)| edges".into(),
    ))
}
