//! Explicit weakly saturated graphs. Every construction is checked with the
//! bootstrap engine before it is returned; a graph that fails the check is
//! reported as an error, never handed back.

use serde::Serialize;

use crate::bootstrap::{closure, is_weakly_saturated, ActivationTrace};
use crate::error::{Error, Result};
use crate::graph::{find_clique, greedy_clique_partition, Edge, Graph, Seed};
use crate::pattern::{contains_copy, Pattern};
use crate::solver::greedy_upper_bound;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Saturator {
    pub graph: Graph,
    /// Saturation trace from `graph` to the host.
    pub trace: ActivationTrace,
    /// Edges contributed by the cores.
    pub core_edges: usize,
    /// The cliques the construction was built around.
    pub parts: Vec<Vec<usize>>,
    /// Edges removed afterwards to make the graph pattern-free.
    pub pruned_edges: usize,
}

fn first_unreachable(host: &Graph, reached: &Graph) -> Option<Edge> {
    host.edges()
        .into_iter()
        .find(|e| !reached.contains_edge(*e))
}

/// Checks `h` inside `host` and returns the saturation trace.
fn certify(host: &Graph, pattern: &Pattern, h: &Graph) -> Result<ActivationTrace> {
    if contains_copy(h, pattern) {
        return Err(Error::ConstructionFailed(
            "constructed graph contains a copy of the pattern".into(),
        ));
    }
    let run = closure(host, pattern, h)?;
    match first_unreachable(host, &run.closure) {
        None => Ok(run.trace),
        Some(e) => Err(Error::ConstructionFailed(format!(
            "host edge {e} is never activated ({} of {} host edges unreachable)",
            host.edge_count() - run.closure.edge_count(),
            host.edge_count()
        ))),
    }
}

/// Makes a percolating `h` pattern-free by reverse-delete inside `h` itself.
/// Every deleted edge comes back through the copy it was deleted from, so the
/// closure of the result still contains `h`.
fn prune(h: Graph, pattern: &Pattern, seed: Seed) -> Result<(Graph, usize)> {
    if !contains_copy(&h, pattern) {
        return Ok((h, 0));
    }
    let before = h.edge_count();
    let reduced = greedy_upper_bound(&h, pattern, seed)?
        .certificate
        .expect("greedy always returns a certificate")
        .graph;
    let removed = before - reduced.edge_count();
    Ok((reduced, removed))
}

/// Weakly saturated core of `host[part]` from the greedy search, with edges
/// mapped back to host labels.
fn greedy_core(host: &Graph, pattern: &Pattern, part: &[usize], seed: Seed) -> Result<Vec<Edge>> {
    let local = host.induced(part);
    let core = greedy_upper_bound(&local, pattern, seed)?
        .certificate
        .expect("greedy always returns a certificate")
        .graph;
    Ok(core
        .edges()
        .into_iter()
        .map(|e| Edge::new(part[e.u()], part[e.v()]))
        .collect())
}

/// Saturator of `K_n`: `core` on the clique `Ω = {0, .., m-1}` plus, for every
/// other vertex, edges to the `δ-1` lowest vertices of `Ω`.
///
/// The result has `(δ-1)(n-m) + |E(core)|` edges. With `F = K_s`,
/// `m = s - 2` and `core = K_{s-2}` this is the join of `K_{s-2}` with an
/// independent set.
pub fn construct_complete_host_saturator(
    n: usize,
    pattern: &Pattern,
    m: usize,
    core: &Graph,
) -> Result<Saturator> {
    let reach = pattern.delta() - 1;
    if m > n {
        return Err(Error::Parameter(format!("clique size {m} exceeds n = {n}")));
    }
    if m < reach {
        return Err(Error::Parameter(format!(
            "clique size {m} is below δ(F) - 1 = {reach}"
        )));
    }
    if core.n() != m {
        return Err(Error::Parameter(format!(
            "core has {} vertices, expected {m}",
            core.n()
        )));
    }
    if !is_weakly_saturated(&Graph::complete(m), pattern, core)? {
        return Err(Error::ConstructionFailed(format!(
            "core is not weakly saturated in K_{m}"
        )));
    }
    let mut h = Graph::empty(n);
    for e in core.edges() {
        h.add_edge(e.u(), e.v());
    }
    for v in m..n {
        for w in 0..reach {
            h.add_edge(v, w);
        }
    }
    let trace = certify(&Graph::complete(n), pattern, &h)?;
    Ok(Saturator {
        graph: h,
        trace,
        core_edges: core.edge_count(),
        parts: vec![(0..m).collect()],
        pruned_edges: 0,
    })
}

/// Saturator of an arbitrary host built around an `m`-clique `Ω`:
///
/// * a greedy weakly saturated core inside `Ω`;
/// * for each common neighbour `v` of `Ω`, edges to the `δ-1` lowest
///   vertices of `Ω`;
/// * for every other vertex `v`, edges to the `δ-1` lowest vertices adjacent
///   to `v` and to all of `Ω`.
///
/// Vertex choices are by ascending index; whether they work is decided by
/// the closure check.
pub fn construct_random_host_saturator(
    g: &Graph,
    pattern: &Pattern,
    m: usize,
    seed: Seed,
) -> Result<Saturator> {
    let reach = pattern.delta() - 1;
    if m == 0 || m < reach {
        return Err(Error::Parameter(format!(
            "clique size {m} must be positive and at least δ(F) - 1 = {reach}"
        )));
    }
    let omega = find_clique(g, m)
        .ok_or_else(|| Error::StructureAbsent(format!("no clique of size {m} in the host")))?;
    let core = greedy_core(g, pattern, &omega, seed)?;

    let mut h = Graph::empty(g.n());
    for e in &core {
        h.add_edge(e.u(), e.v());
    }
    let attached = g.common_neighbors(&omega);
    for v in 0..g.n() {
        if omega.contains(&v) {
            continue;
        }
        let targets: Vec<usize> = if attached.binary_search(&v).is_ok() {
            omega[..reach].to_vec()
        } else {
            let mut with_v = omega.clone();
            with_v.push(v);
            let near = g.common_neighbors(&with_v);
            if near.len() < reach {
                return Err(Error::StructureAbsent(format!(
                    "vertex {v} has {} neighbours adjacent to all of the clique, needs {reach}",
                    near.len()
                )));
            }
            near[..reach].to_vec()
        };
        for w in targets {
            h.add_edge(v, w);
        }
    }
    let (h, pruned_edges) = prune(h, pattern, seed.derive(1))?;
    let trace = certify(g, pattern, &h)?;
    Ok(Saturator {
        graph: h,
        trace,
        core_edges: core.len(),
        parts: vec![omega],
        pruned_edges,
    })
}

/// Saturator built on a partition of the host into cliques `V_1, .., V_m`
/// (greedy, largest first):
///
/// * `S`: the `s-2` lowest vertices of `V_1`;
/// * `S_i`: `s-1` vertices of `V_i` adjacent to all of `S` when available,
///   otherwise all such vertices topped up from `V_i \ S`;
/// * `R_i`: `s-2` lowest common neighbours of `S ∪ S_i` inside the first
///   part that has enough of them;
/// * `H`: greedy weakly saturated cores inside each part, plus the host edges
///   between `S_i` and `S ∪ R_i`.
pub fn construct_clique_partition_saturator(
    g: &Graph,
    pattern: &Pattern,
    seed: Seed,
) -> Result<Saturator> {
    let s = pattern.s();
    let parts = greedy_clique_partition(g);
    let first = parts
        .first()
        .ok_or_else(|| Error::StructureAbsent("host has no vertices".into()))?;
    if first.len() < s - 2 {
        return Err(Error::StructureAbsent(format!(
            "S: largest clique has {} vertices, needs {}",
            first.len(),
            s - 2
        )));
    }
    let big_s: Vec<usize> = first[..s - 2].to_vec();
    let near_s = g.common_neighbors(&big_s);

    let mut h = Graph::empty(g.n());
    let mut core_edges = 0;
    for (i, part) in parts.iter().enumerate() {
        let core = greedy_core(g, pattern, part, seed.derive(i as u64))?;
        core_edges += core.len();
        for e in core {
            h.add_edge(e.u(), e.v());
        }
    }

    for (i, part) in parts.iter().enumerate() {
        let label = i + 1;
        let inside: Vec<usize> = part
            .iter()
            .copied()
            .filter(|v| near_s.binary_search(v).is_ok())
            .collect();
        let s_i: Vec<usize> = if inside.len() >= s - 1 {
            inside[..s - 1].to_vec()
        } else {
            let mut chosen = inside.clone();
            chosen.extend(
                part.iter()
                    .copied()
                    .filter(|v| !big_s.contains(v) && !inside.contains(v))
                    .take(s - 1 - inside.len()),
            );
            if chosen.len() < s - 1 {
                return Err(Error::StructureAbsent(format!(
                    "S_{label}: part {label} has {} usable vertices, needs {}",
                    chosen.len(),
                    s - 1
                )));
            }
            chosen.sort_unstable();
            chosen
        };

        let mut anchor = big_s.clone();
        anchor.extend(&s_i);
        let common = g.common_neighbors(&anchor);
        let r_i = parts
            .iter()
            .find_map(|other| {
                let hits: Vec<usize> = other
                    .iter()
                    .copied()
                    .filter(|v| common.binary_search(v).is_ok())
                    .collect();
                (hits.len() >= s - 2).then(|| hits[..s - 2].to_vec())
            })
            .ok_or_else(|| {
                Error::StructureAbsent(format!(
                    "R_{label}: no part holds {} common neighbours of S ∪ S_{label}",
                    s - 2
                ))
            })?;

        for &x in &s_i {
            for &y in big_s.iter().chain(&r_i) {
                if x != y && g.has_edge(x, y) {
                    h.add_edge(x, y);
                }
            }
        }
    }

    let (h, pruned_edges) = prune(h, pattern, seed.derive(u64::MAX))?;
    let trace = certify(g, pattern, &h)?;
    Ok(Saturator {
        graph: h,
        trace,
        core_edges,
        parts,
        pruned_edges,
    })
}
