//! Target patterns `F` and everything that searches for copies of them.
//!
//! A copy is a (not necessarily induced) subgraph isomorphic to `F`,
//! witnessed by an injective map `V(F) -> V(G)` sending edges to edges.

mod automorphism;
mod matcher;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{density_m, density_mu, Edge, Graph, Rational};

pub use automorphism::{arc_orbit_representatives, automorphism_count, exists_automorphism};
pub(crate) use matcher::find_copy_through;
pub use matcher::{contains_copy, copy_through_edge, count_copies, count_embeddings, find_copy};

/// Hard cap on pattern size for normalisation (density enumeration and the
/// automorphism count in `u64` both stay exact up to here).
pub const PATTERN_MAX_VERTICES: usize = 20;

/// Image of each pattern vertex, in pattern-vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CopyWitness {
    pub mapping: Vec<usize>,
}

impl CopyWitness {
    /// Injective, in range, and every pattern edge lands on an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph, pattern: &Pattern) -> bool {
        if self.mapping.len() != pattern.s() || self.mapping.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let mut sorted = self.mapping.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        pattern
            .edges()
            .iter()
            .all(|e| g.has_edge(self.mapping[e.u()], self.mapping[e.v()]))
    }

    /// Host edges covered by the copy.
    pub fn image_edges(&self, pattern: &Pattern) -> Vec<Edge> {
        pattern
            .edges()
            .iter()
            .map(|e| Edge::new(self.mapping[e.u()], self.mapping[e.v()]))
            .collect()
    }

    pub fn uses_edge(&self, pattern: &Pattern, e: Edge) -> bool {
        self.image_edges(pattern).contains(&e)
    }
}

/// Assignment order for the backtracking matcher: `order[i]` is the pattern
/// vertex placed at depth `i`, and `back[i]` lists its pattern neighbours
/// placed earlier.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub(crate) order: Vec<usize>,
    pub(crate) back: Vec<Vec<usize>>,
}

impl Plan {
    fn new(g: &Graph, first: &[usize]) -> Plan {
        let n = g.n();
        let mut placed = vec![false; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for &v in first {
            placed[v] = true;
            order.push(v);
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
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                order[..i]
                    .iter()
                    .copied()
                    .filter(|&u| g.has_edge(u, v))
                    .collect()
            })
            .collect();
        Plan { order, back }
    }
}

/// A normalised pattern with its invariants cached.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    edges: Vec<Edge>,
    delta: usize,
    max_deg: usize,
    m_f: Rational,
    mu_f: Rational,
    aut: u64,
    diameter: Option<usize>,
    pub(crate) free_plan: Plan,
    /// One anchored plan per arc orbit: `(a, b, plan)` with `a, b` first.
    pub(crate) arc_plans: Vec<(usize, usize, Plan)>,
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Pattern {
    /// Strips isolated vertices (they never change `wsat`) and caches the
    /// invariants. Remaining vertices keep their relative order.
    pub fn normalize(f: &Graph) -> Result<Pattern> {
        if f.edge_count() == 0 {
            return Err(Error::Parameter(
                "pattern must have at least one edge".into(),
            ));
        }
        let keep: Vec<usize> = (0..f.n()).filter(|&v| f.degree(v) > 0).collect();
        if keep.len() > PATTERN_MAX_VERTICES {
            return Err(Error::PatternTooLarge {
                s: keep.len(),
                limit: PATTERN_MAX_VERTICES,
            });
        }
        let graph = f.induced(&keep);
        let arc_plans = arc_orbit_representatives(&graph)
            .into_iter()
            .map(|(a, b)| (a, b, Plan::new(&graph, &[a, b])))
            .collect();
        Ok(Pattern {
            edges: graph.edges(),
            delta: graph.min_degree(),
            max_deg: graph.max_degree(),
            m_f: density_m(&graph)?,
            mu_f: density_mu(&graph)?,
            aut: automorphism_count(&graph),
            diameter: graph.diameter(),
            free_plan: Plan::new(&graph, &[]),
            arc_plans,
            graph,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `s = |V(F)|`.
    pub fn s(&self) -> usize {
        self.graph.n()
    }

    /// `t = |E(F)|`.
    pub fn t(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `δ(F)`, at least 1 after normalisation.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// `Δ(F)`.
    pub fn max_degree(&self) -> usize {
        self.max_deg
    }

    /// `m(F)`.
    pub fn m(&self) -> Rational {
        self.m_f
    }

    /// `mu(F)`.
    pub fn mu(&self) -> Rational {
        self.mu_f
    }

    /// `|Aut(F)|`.
    pub fn aut(&self) -> u64 {
        self.aut
    }

    /// Diameter when `F` is connected.
    pub fn diameter(&self) -> Option<usize> {
        self.diameter
    }

    /// Checks that every cached invariant matches a fresh recomputation.
    pub fn is_consistent(&self) -> bool {
        let g = &self.graph;
        g.validate()
            && self.edges == g.edges()
            && self.delta == g.min_degree()
            && self.delta >= 1
            && self.max_deg == g.max_degree()
            && density_m(g).ok() == Some(self.m_f)
            && density_mu(g).ok() == Some(self.mu_f)
            && automorphism_count(g) == self.aut
            && g.diameter() == self.diameter
    }
}
