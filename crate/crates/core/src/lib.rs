//! Weak saturation in host graphs.
//!
//! A spanning subgraph `H` of a host `G` is weakly `(G, F)`-saturated when it
//! contains no copy of `F` and the missing host edges can be added one at a
//! time so that every addition creates a new copy of `F` through the added
//! edge. `wsat(G, F)` is the least edge count of such an `H`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple labelled graphs, named families, seeded `G(n, p)`
//!   sampling, the densities `m(G)` / `mu(G)` and the edge-list codec.
//! * [`pattern`]: subgraph matching, copies through a given edge,
//!   automorphism and copy counting.
//! * [`bootstrap`]: the `F`-bootstrap process (closure), weak-saturation
//!   checks and activation-trace verification.
//! * [`solver`]: exact `wsat` by pruned iterative deepening, the
//!   reverse-delete greedy upper bound and the general lower bound.
//! * [`formulas`]: closed-form values, generic bounds, explicit saturator
//!   constructions and stability profiles.
//! * [`experiment`]: seeded random-graph experiments.

pub mod bootstrap;
pub mod error;
pub mod experiment;
pub mod formulas;
pub mod graph;
pub mod pattern;
pub mod solver;

pub use bootstrap::{
    check_trace, closure, closure_with_order, is_weakly_saturated, percolates, verify_trace,
    ActivationTrace, ClosureResult, TraceFailure, TraceStep,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphFamily, Rational, Seed};
pub use pattern::{CopyWitness, Pattern};
pub use solver::{SearchBudget, WsatResult};
