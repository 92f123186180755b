use rand::Rng;

use super::{check_pattern_size, lower_bound_general, Certificate, Method, WsatResult};
use crate::bootstrap::{ActivationTrace, TraceStep};
use crate::error::Result;
use crate::graph::{Graph, Seed};
use crate::pattern::{find_copy_through, CopyWitness, Pattern};

/// Reverse-delete: starting from `H = G`, repeatedly delete a uniformly
/// random edge that lies in a copy of `F`, until none does.
///
/// The final `H` is `F`-free, and replaying the deletions backwards adds each
/// edge into a graph that still holds the copy seen at deletion time, so the
/// reversed deletion order is a valid saturation trace.
///
/// An edge found in no copy stays that way, since deletions only destroy
/// copies. Sampling from the not-yet-rejected edges therefore picks uniformly
/// among the edges currently in a copy.
pub fn greedy_upper_bound(g: &Graph, pattern: &Pattern, seed: Seed) -> Result<WsatResult> {
    check_pattern_size(pattern)?;
    let mut rng = seed.rng();
    let mut h = g.clone();
    let mut open = g.edges();
    let mut deletions = Vec::new();
    while !open.is_empty() {
        let e = open.swap_remove(rng.gen_range(0..open.len()));
        if let Some(mapping) = find_copy_through(&h, pattern, e) {
            h.remove_edge(e.u(), e.v());
            deletions.push(TraceStep {
                edge: e,
                witness: CopyWitness { mapping },
            });
        }
    }
    deletions.reverse();

    let upper = h.edge_count() as u64;
    let lower = if g.n() >= pattern.s() {
        lower_bound_general(g, pattern)?
    } else {
        upper
    };
    Ok(WsatResult {
        lower,
        upper,
        exact: None,
        certificate: Some(Certificate {
            graph: h,
            trace: ActivationTrace { steps: deletions },
        }),
        method: Method::Greedy,
        budget_exhausted: false,
        nodes: 0,
    })
}

/// Best of `repeats` greedy runs on streams derived from `seed`; ties keep
/// the earliest run.
pub fn greedy_best_of(
    g: &Graph,
    pattern: &Pattern,
    seed: Seed,
    repeats: usize,
) -> Result<WsatResult> {
    let mut best = greedy_upper_bound(g, pattern, seed.derive(0))?;
    for i in 1..repeats.max(1) {
        let run = greedy_upper_bound(g, pattern, seed.derive(i as u64))?;
        if run.upper < best.upper {
            best = run;
        }
    }
    Ok(best)
}
