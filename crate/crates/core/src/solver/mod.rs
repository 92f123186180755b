//! Computing `wsat(G, F)`: the general lower bound, a reverse-delete greedy
//! upper bound, and exact pruned search.

mod exact;
mod greedy;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bootstrap::ActivationTrace;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;

pub use exact::{wsat_exact, wsat_exact_with_workers};
pub use greedy::{greedy_best_of, greedy_upper_bound};

/// Solver entry points refuse patterns larger than this.
pub const SOLVER_MAX_PATTERN: usize = 12;

pub(crate) fn check_pattern_size(pattern: &Pattern) -> Result<()> {
    if pattern.s() > SOLVER_MAX_PATTERN {
        return Err(Error::PatternTooLarge {
            s: pattern.s(),
            limit: SOLVER_MAX_PATTERN,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_seconds: 60.0,
        }
    }
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        if max_nodes == 0 || max_seconds.is_nan() || max_seconds <= 0.0 {
            return Err(Error::Parameter("search budget must be positive".into()));
        }
        Ok(SearchBudget {
            max_nodes,
            max_seconds,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    ExactSearch,
    Greedy,
    Bound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::ExactSearch => "exact-search",
            Method::Greedy => "greedy",
            Method::Bound => "bound",
        })
    }
}

/// A weakly saturated graph together with the trace that saturates it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    pub trace: ActivationTrace,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WsatResult {
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub certificate: Option<Certificate>,
    pub method: Method,
    /// The search stopped on its budget; only the bounds are meaningful.
    pub budget_exhausted: bool,
    /// Search nodes visited (zero for non-search methods).
    pub nodes: u64,
}

/// `ceil(min{|E(G)|, (t-1) + min{δ(G), δ(F)-1} (|V(G)| - s) / 2})`.
///
/// Every vertex of a weakly saturated `H` has degree at least
/// `min{d_G(v), δ(F)-1}`, and the first activated copy already carries
/// `t - 1` edges of `H`.
pub fn lower_bound_general(g: &Graph, pattern: &Pattern) -> Result<u64> {
    let s = pattern.s();
    if g.n() < s {
        return Err(Error::Precondition(format!(
            "host has {} vertices, pattern has {s}",
            g.n()
        )));
    }
    let slack = g.min_degree().min(pattern.delta() - 1) as u64;
    let twice = 2 * (pattern.t() as u64 - 1) + slack * (g.n() - s) as u64;
    Ok((g.edge_count() as u64).min(twice.div_ceil(2)))
}
