//! The `F`-bootstrap process inside a host graph.
//!
//! Starting from a spanning subgraph of the host, any missing host edge that
//! would lie in a copy of `F` is added, until no such edge remains. Addability
//! only grows as edges are added, so the final graph (the `F`-closure) does
//! not depend on the order edges are examined in.
//!
//! The fixpoint is driven by a FIFO work queue of candidate host edges. After
//! an edge `uv` is added, only candidates with an endpoint within distance
//! `diam(F)` of `{u, v}` are re-queued: a new copy through a candidate `xy`
//! that uses `uv` connects an endpoint of `uv` to an endpoint of `xy` by a
//! path of at most `diam(F)` copy edges, none of which is `xy`. Disconnected
//! patterns have no such locality, and every missing edge is re-queued.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::pattern::{contains_copy, find_copy_through, CopyWitness, Pattern};

/// One activation: the added edge and a copy of `F` that uses it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub edge: Edge,
    pub witness: CopyWitness,
}

/// Ordered activations certifying a run of the bootstrap process.
///
/// Serialises as a JSON array of `{"edge": [u, v], "witness": [g_1, ..., g_s]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ActivationTrace {
    pub steps: Vec<TraceStep>,
}

impl ActivationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.steps.iter().map(|s| s.edge)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub closure: Graph,
    pub trace: ActivationTrace,
    /// The closure is the whole host.
    pub percolates: bool,
}

/// Host edges with a dense `(u, v) -> index` table.
struct HostIndex {
    n: usize,
    edges: Vec<Edge>,
    index: Vec<u32>,
}

impl HostIndex {
    fn new(host: &Graph) -> Self {
        let n = host.n();
        let edges = host.edges();
        let mut index = vec![u32::MAX; n * n];
        for (i, e) in edges.iter().enumerate() {
            index[e.u() * n + e.v()] = i as u32;
            index[e.v() * n + e.u()] = i as u32;
        }
        HostIndex { n, edges, index }
    }

    #[inline]
    fn of(&self, u: usize, v: usize) -> usize {
        self.index[u * self.n + v] as usize
    }
}

struct Engine<'a> {
    host: &'a Graph,
    pat: &'a Pattern,
    idx: HostIndex,
    current: Graph,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    dist: Vec<usize>,
    bfs: VecDeque<usize>,
}

impl<'a> Engine<'a> {
    fn new(host: &'a Graph, pat: &'a Pattern, seed: &Graph) -> Result<Self> {
        if !seed.is_spanning_subgraph_of(host) {
            return Err(Error::Precondition(
                "seed must be a spanning subgraph of the host".into(),
            ));
        }
        let idx = HostIndex::new(host);
        let m = idx.edges.len();
        Ok(Engine {
            host,
            pat,
            idx,
            current: seed.clone(),
            queue: VecDeque::with_capacity(m),
            queued: vec![false; m],
            dist: vec![usize::MAX; host.n()],
            bfs: VecDeque::new(),
        })
    }

    fn push(&mut self, i: usize) {
        if !self.queued[i] && !self.current.contains_edge(self.idx.edges[i]) {
            self.queued[i] = true;
            self.queue.push_back(i);
        }
    }

    fn requeue_around(&mut self, e: Edge) {
        let Some(radius) = self.pat.diameter() else {
            for i in 0..self.idx.edges.len() {
                self.push(i);
            }
            return;
        };
        let mut reached = Vec::new();
        for &src in &[e.u(), e.v()] {
            self.dist[src] = 0;
            self.bfs.push_back(src);
        }
        while let Some(x) = self.bfs.pop_front() {
            reached.push(x);
            let d = self.dist[x];
            if d == radius {
                continue;
            }
            for y in self.current.neighbors(x) {
                if self.dist[y] == usize::MAX {
                    self.dist[y] = d + 1;
                    self.bfs.push_back(y);
                }
            }
        }
        for &x in &reached {
            self.dist[x] = usize::MAX;
        }
        for &x in &reached {
            let host = self.host;
            for y in host.neighbors(x) {
                if !self.current.has_edge(x, y) {
                    let i = self.idx.of(x, y);
                    self.push(i);
                }
            }
        }
    }

    fn run(&mut self, order: &[usize], mut on_add: impl FnMut(Edge, Vec<usize>)) {
        for &i in order {
            self.push(i);
        }
        let target = self.host.edge_count();
        while let Some(i) = self.queue.pop_front() {
            self.queued[i] = false;
            let e = self.idx.edges[i];
            if self.current.contains_edge(e) {
                continue;
            }
            if let Some(w) = find_copy_through(&self.current, self.pat, e) {
                self.current.add_edge(e.u(), e.v());
                on_add(e, w);
                if self.current.edge_count() == target {
                    break;
                }
                self.requeue_around(e);
            }
        }
    }
}

fn order_indices(host: &Graph, idx: &HostIndex, order: &[Edge]) -> Result<Vec<usize>> {
    order
        .iter()
        .map(|e| {
            if e.v() < host.n() && host.contains_edge(*e) {
                Ok(idx.of(e.u(), e.v()))
            } else {
                Err(Error::Parameter(format!("{e} is not a host edge")))
            }
        })
        .collect()
}

/// The `F`-closure of `seed` inside `host`, with one witness per added edge.
///
/// Candidates are first examined in lexicographic edge order.
pub fn closure(host: &Graph, pattern: &Pattern, seed: &Graph) -> Result<ClosureResult> {
    closure_with_order(host, pattern, seed, &host.edges())
}

/// As [`closure`], but the initial scan visits host edges in `order`
/// (edges of the host not listed are never examined unless re-queued).
pub fn closure_with_order(
    host: &Graph,
    pattern: &Pattern,
    seed: &Graph,
    order: &[Edge],
) -> Result<ClosureResult> {
    let mut engine = Engine::new(host, pattern, seed)?;
    let order = order_indices(host, &engine.idx, order)?;
    let mut steps = Vec::new();
    engine.run(&order, |edge, mapping| {
        steps.push(TraceStep {
            edge,
            witness: CopyWitness { mapping },
        })
    });
    let closure = engine.current;
    Ok(ClosureResult {
        percolates: closure.edge_count() == host.edge_count(),
        closure,
        trace: ActivationTrace { steps },
    })
}

/// Whether the closure of `seed` is the whole host, without recording a trace.
pub fn percolates(host: &Graph, pattern: &Pattern, seed: &Graph) -> Result<bool> {
    let mut engine = Engine::new(host, pattern, seed)?;
    if engine.current.edge_count() == host.edge_count() {
        return Ok(true);
    }
    let order: Vec<usize> = (0..engine.idx.edges.len()).collect();
    engine.run(&order, |_, _| {});
    Ok(engine.current.edge_count() == host.edge_count())
}

/// `h` is weakly `(host, F)`-saturated: `F`-free, and its closure is `host`.
pub fn is_weakly_saturated(host: &Graph, pattern: &Pattern, h: &Graph) -> Result<bool> {
    if !h.is_spanning_subgraph_of(host) {
        return Err(Error::Precondition(
            "candidate must be a spanning subgraph of the host".into(),
        ));
    }
    Ok(!contains_copy(h, pattern) && percolates(host, pattern, h)?)
}

/// Why a trace was rejected. `step` is the 0-based index of the first bad
/// step, or `None` when the seed itself is unacceptable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFailure {
    pub step: Option<usize>,
    pub reason: String,
}

impl std::fmt::Display for TraceFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => write!(f, "{}", self.reason),
        }
    }
}

/// Replays `trace` from `seed`, checking every step independently of the
/// closure engine.
pub fn check_trace(
    host: &Graph,
    pattern: &Pattern,
    seed: &Graph,
    trace: &ActivationTrace,
) -> std::result::Result<(), TraceFailure> {
    if !seed.is_spanning_subgraph_of(host) {
        return Err(TraceFailure {
            step: None,
            reason: "seed is not a spanning subgraph of the host".into(),
        });
    }
    let mut current = seed.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        let fail = |reason: String| TraceFailure {
            step: Some(i),
            reason,
        };
        let e = step.edge;
        if e.is_loop() || e.v() >= host.n() || !host.contains_edge(e) {
            return Err(fail(format!("{e} is not a host edge")));
        }
        if current.contains_edge(e) {
            return Err(fail(format!("{e} is already present")));
        }
        current.add_edge(e.u(), e.v());
        if !step.witness.is_valid_in(&current, pattern) {
            return Err(fail("witness is not a copy of the pattern".into()));
        }
        if !step.witness.uses_edge(pattern, e) {
            return Err(fail(format!("witness does not use {e}")));
        }
    }
    Ok(())
}

pub fn verify_trace(
    host: &Graph,
    pattern: &Pattern,
    seed: &Graph,
    trace: &ActivationTrace,
) -> bool {
    check_trace(host, pattern, seed, trace).is_ok()
}
