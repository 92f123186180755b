//! JSON payloads written by each subcommand. Fields that only appear with
//! `--json` are optional and skipped when absent.

use serde::{Deserialize, Serialize};
use wsat_core::bootstrap::TraceFailure;
use wsat_core::experiment::{Aggregate, ThresholdMarkers};
use wsat_core::formulas::FormulaValue;
use wsat_core::graph::rational_text;
use wsat_core::{ActivationTrace, Graph, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureOutput {
    pub percolates: bool,
    /// Edges added by the closure.
    pub added: usize,
    pub host_edges: usize,
    pub closure_edges: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<Graph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<ActivationTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    /// Pattern-free and percolating.
    pub weakly_saturated: bool,
    pub pattern_free: bool,
    pub percolates: bool,
    /// Present when a trace was supplied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_failure: Option<TraceFailureOutput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFailureOutput {
    pub step: Option<usize>,
    pub reason: String,
}

impl From<TraceFailure> for TraceFailureOutput {
    fn from(f: TraceFailure) -> Self {
        TraceFailureOutput {
            step: f.step,
            reason: f.reason,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaOutput {
    pub family: String,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    pub value: FormulaValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundOutput {
    pub n: u64,
    /// `(m, wsat(m, F))` when the clique bound was used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clique: Option<(u64, u64)>,
    pub upper: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructOutput {
    pub method: String,
    pub edges: usize,
    pub host_edges: usize,
    pub core_edges: usize,
    pub pruned_edges: usize,
    pub parts: usize,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<ActivationTrace>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountOutput {
    pub s: usize,
    pub t: usize,
    pub aut: u64,
    #[serde(with = "rational_text")]
    pub m: Rational,
    #[serde(with = "rational_text")]
    pub mu: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copies: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embeddings: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contains: Option<bool>,
    /// `E(X_F)` in `G(n, p)` when `--n` and `--p` are given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<f64>,
}

/// Experiment output without `--json`: the summary only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub mode: String,
    pub n: usize,
    pub trials: usize,
    pub master_seed: u64,
    pub complete_wsat: Option<u64>,
    pub markers: ThresholdMarkers,
    pub aggregates: Vec<Aggregate>,
}
