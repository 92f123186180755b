//! Seeded experiments on `G(n, p)`.
//!
//! Every trial draws its graph from the seed `(master, p-index)` derived at
//! the trial index, so adding grid points or trials leaves the existing
//! trials untouched. Records are emitted sorted by `(p, trial)` and the
//! output does not depend on the worker count.

mod neighborhood;

use std::fmt;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{density_m, density_mu, rational_text, sample_gnp, Graph, Rational, Seed};
use crate::pattern::{contains_copy, count_copies, Pattern};
use crate::solver::{wsat_exact, SearchBudget};

pub use neighborhood::{neighborhood_property_check, NeighborhoodReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Exact `wsat(G, F)` compared with `wsat(K_n, F)`.
    Stability,
    /// `|E| - X_F <= wsat(G, F) <= |E|` on every trial.
    Sandwich,
    /// Common-neighbourhood statistics of each sample.
    Neighborhood,
    /// Appearance frequency of `F` and copy counts.
    Scan,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Stability => "stability",
            Mode::Sandwich => "sandwich",
            Mode::Neighborhood => "neighborhood",
            Mode::Scan => "scan",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stability" => Ok(Mode::Stability),
            "sandwich" => Ok(Mode::Sandwich),
            "neighborhood" => Ok(Mode::Neighborhood),
            "scan" => Ok(Mode::Scan),
            other => Err(Error::Parameter(format!(
                "unknown experiment mode {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    /// The pattern, before isolated vertices are stripped.
    pub pattern: Graph,
    pub n: usize,
    pub p_grid: Vec<f64>,
    pub trials: usize,
    pub master_seed: u64,
    pub mode: Mode,
    pub budget: SearchBudget,
    pub workers: usize,
    /// Subset size for the neighbourhood mode.
    pub k: usize,
    /// Subsets examined per sample in the neighbourhood mode.
    pub sample_cap: usize,
    /// Store per-trial wall-clock times. Off by default so reports are
    /// reproducible byte for byte.
    pub record_timings: bool,
}

impl ExperimentConfig {
    pub fn new(
        pattern: Graph,
        n: usize,
        p_grid: Vec<f64>,
        trials: usize,
        master_seed: u64,
        mode: Mode,
    ) -> Self {
        ExperimentConfig {
            pattern,
            n,
            p_grid,
            trials,
            master_seed,
            mode,
            budget: SearchBudget::default(),
            workers: 1,
            k: 2,
            sample_cap: 1000,
            record_timings: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Parameter("trials must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::Parameter("workers must be at least 1".into()));
        }
        if self.p_grid.is_empty() {
            return Err(Error::Parameter("p grid is empty".into()));
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::Parameter(format!("p = {p} is outside [0, 1]")));
        }
        if self.p_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(
                "p grid must be strictly increasing".into(),
            ));
        }
        Ok(())
    }

    /// Seed of trial `trial` at grid position `p_index`.
    pub fn trial_seed(&self, p_index: usize, trial: usize) -> Seed {
        Seed::new(self.master_seed, p_index as u64).derive(trial as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialStatus {
    Ok,
    BudgetExhausted,
}

impl fmt::Display for TrialStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrialStatus::Ok => "ok",
            TrialStatus::BudgetExhausted => "budget_exhausted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub p: f64,
    pub p_index: usize,
    pub trial: usize,
    /// Digest of the trial seed.
    pub seed: u64,
    pub edges: u64,
    /// Copies of `F` in the sample.
    pub x_f: Option<u64>,
    pub wsat_lower: Option<u64>,
    pub wsat_exact: Option<u64>,
    pub wsat_upper: Option<u64>,
    pub equal_to_complete: Option<bool>,
    pub contains: bool,
    pub neighborhood: Option<NeighborhoodReport>,
    pub status: TrialStatus,
    pub millis: Option<f64>,
}

/// Per-`p` summary. Means are over all trials unless noted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub p: f64,
    pub trials: usize,
    pub budget_exhausted: usize,
    /// Fraction of solved trials with `wsat(G, F) = wsat(K_n, F)`.
    pub fraction_equal: Option<f64>,
    pub mean_edges: f64,
    pub mean_x_f: Option<f64>,
    /// Mean of `X_F / |E|` (taken as 0 when `|E| = 0`).
    pub mean_x_f_ratio: Option<f64>,
    pub fraction_contains: f64,
    pub mean_fraction_large: Option<f64>,
    pub mean_fraction_with_clique: Option<f64>,
}

/// Probabilities `n^{-1/m(F)}` and `n^{-1/mu(F)}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdMarkers {
    #[serde(with = "rational_text")]
    pub m: Rational,
    #[serde(with = "rational_text")]
    pub mu: Rational,
    pub appearance: f64,
    pub dense_regime: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    /// `wsat(K_n, F)` (stability mode only).
    pub complete_wsat: Option<u64>,
    pub markers: ThresholdMarkers,
    pub records: Vec<TrialRecord>,
    pub aggregates: Vec<Aggregate>,
}

fn mean<I: Iterator<Item = f64>>(values: I) -> Option<f64> {
    let (mut sum, mut count) = (0.0, 0usize);
    for v in values {
        sum += v;
        count += 1;
    }
    (count > 0).then(|| sum / count as f64)
}

/// Aggregates of `records` per grid point, in grid order.
pub fn aggregate(p_grid: &[f64], records: &[TrialRecord]) -> Vec<Aggregate> {
    p_grid
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let rows: Vec<&TrialRecord> = records.iter().filter(|r| r.p_index == i).collect();
            let solved = || rows.iter().filter(|r| r.status == TrialStatus::Ok);
            let equal = mean(
                solved()
                    .filter_map(|r| r.equal_to_complete)
                    .map(|b| b as u8 as f64),
            );
            let all_x = rows.iter().all(|r| r.x_f.is_some());
            let ratio = |r: &&TrialRecord| {
                let x = r.x_f.unwrap_or(0) as f64;
                if r.edges == 0 {
                    0.0
                } else {
                    x / r.edges as f64
                }
            };
            let hood = |f: fn(&NeighborhoodReport) -> f64| {
                mean(rows.iter().filter_map(|r| r.neighborhood.as_ref()).map(f))
            };
            Aggregate {
                p,
                trials: rows.len(),
                budget_exhausted: rows.len() - solved().count(),
                fraction_equal: equal,
                mean_edges: mean(rows.iter().map(|r| r.edges as f64)).unwrap_or(0.0),
                mean_x_f: if all_x {
                    mean(rows.iter().filter_map(|r| r.x_f).map(|x| x as f64))
                } else {
                    None
                },
                mean_x_f_ratio: if all_x {
                    mean(rows.iter().map(ratio))
                } else {
                    None
                },
                fraction_contains: mean(rows.iter().map(|r| r.contains as u8 as f64))
                    .unwrap_or(0.0),
                mean_fraction_large: hood(|h| h.fraction_large),
                mean_fraction_with_clique: hood(|h| h.fraction_with_clique),
            }
        })
        .collect()
}

impl ExperimentReport {
    /// Whether the embedded aggregates equal a fresh recomputation.
    pub fn aggregates_consistent(&self) -> bool {
        aggregate(&self.config.p_grid, &self.records) == self.aggregates
    }

    /// One CSV row per trial with columns
    /// `p,trial,seed,edges,x_f,wsat_lower,wsat_exact,wsat_upper,equal_to_complete,status`;
    /// absent values are empty fields.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        #[derive(Serialize)]
        struct Row {
            p: f64,
            trial: usize,
            seed: u64,
            edges: u64,
            x_f: Option<u64>,
            wsat_lower: Option<u64>,
            wsat_exact: Option<u64>,
            wsat_upper: Option<u64>,
            equal_to_complete: Option<bool>,
            status: TrialStatus,
        }
        let io = |e: csv::Error| Error::Io(format!("csv output failed: {e}"));
        let mut w = csv::Writer::from_writer(out);
        for r in &self.records {
            w.serialize(Row {
                p: r.p,
                trial: r.trial,
                seed: r.seed,
                edges: r.edges,
                x_f: r.x_f,
                wsat_lower: r.wsat_lower,
                wsat_exact: r.wsat_exact,
                wsat_upper: r.wsat_upper,
                equal_to_complete: r.equal_to_complete,
                status: r.status,
            })
            .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::Io(format!("csv output failed: {e}")))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is utf-8"))
    }
}

/// `E(X_F) = (s! / |Aut(F)|) C(n, s) p^t` in `G(n, p)`.
pub fn expected_copies(n: usize, p: f64, pattern: &Pattern) -> f64 {
    let s = pattern.s();
    if n < s {
        return 0.0;
    }
    let labelled: u128 = (1..=s as u128).product::<u128>() / pattern.aut() as u128;
    let mut choose = 1.0f64;
    for i in 0..s {
        choose = choose * (n - i) as f64 / (i + 1) as f64;
    }
    labelled as f64 * choose * p.powi(pattern.t() as i32)
}

fn markers(n: usize, pattern: &Pattern) -> ThresholdMarkers {
    let at = |r: Rational| (n as f64).powf(-(*r.denom() as f64) / *r.numer() as f64);
    let (m, mu) = (pattern.m(), pattern.mu());
    ThresholdMarkers {
        m,
        mu,
        appearance: at(m),
        dense_regime: at(mu),
    }
}

struct Ctx<'a> {
    cfg: &'a ExperimentConfig,
    pattern: Pattern,
    complete_wsat: Option<u64>,
}

impl Ctx<'_> {
    fn trial(&self, p_index: usize, trial: usize) -> Result<TrialRecord> {
        let cfg = self.cfg;
        let started = Instant::now();
        let p = cfg.p_grid[p_index];
        let seed = cfg.trial_seed(p_index, trial);
        let g = sample_gnp(cfg.n, p, seed)?;
        let mut rec = TrialRecord {
            p,
            p_index,
            trial,
            seed: seed.digest(),
            edges: g.edge_count() as u64,
            x_f: None,
            wsat_lower: None,
            wsat_exact: None,
            wsat_upper: None,
            equal_to_complete: None,
            contains: contains_copy(&g, &self.pattern),
            neighborhood: None,
            status: TrialStatus::Ok,
            millis: None,
        };
        match cfg.mode {
            Mode::Stability | Mode::Sandwich => {
                let x_f = count_copies(&g, &self.pattern);
                rec.x_f = Some(x_f);
                let r = wsat_exact(&g, &self.pattern, cfg.budget)?;
                rec.wsat_lower = Some(r.lower);
                rec.wsat_upper = Some(r.upper);
                rec.wsat_exact = r.exact;
                if r.budget_exhausted {
                    rec.status = TrialStatus::BudgetExhausted;
                }
                if let Some(w) = r.exact {
                    if cfg.mode == Mode::Stability {
                        rec.equal_to_complete = self.complete_wsat.map(|c| c == w);
                    }
                    if rec.edges.saturating_sub(x_f) > w || w > rec.edges {
                        return Err(Error::Invariant(format!(
                            "sandwich violated at p = {p}, trial {trial}: |E| = {}, X_F = {x_f}, wsat = {w}",
                            rec.edges
                        )));
                    }
                }
            }
            Mode::Neighborhood => {
                rec.neighborhood = Some(neighborhood_property_check(
                    &g,
                    &self.pattern,
                    cfg.k,
                    p,
                    cfg.sample_cap,
                    seed.derive(u64::MAX),
                ));
            }
            Mode::Scan => {
                rec.x_f = Some(count_copies(&g, &self.pattern));
            }
        }
        if cfg.record_timings {
            rec.millis = Some(started.elapsed().as_secs_f64() * 1e3);
        }
        Ok(rec)
    }
}

/// Runs `cfg` in its configured mode.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let pattern = Pattern::normalize(&cfg.pattern)?;
    // Fail early on patterns the densities cannot handle.
    density_m(pattern.graph())?;
    density_mu(pattern.graph())?;

    let complete_wsat =
        if cfg.mode == Mode::Stability {
            let r = wsat_exact(&Graph::complete(cfg.n), &pattern, cfg.budget)?;
            Some(r.exact.ok_or_else(|| {
                Error::Precondition(format!("budget too small to solve K_{}", cfg.n))
            })?)
        } else {
            None
        };

    let ctx = Ctx {
        cfg,
        pattern,
        complete_wsat,
    };
    let jobs: Vec<(usize, usize)> = (0..cfg.p_grid.len())
        .flat_map(|i| (0..cfg.trials).map(move |t| (i, t)))
        .collect();
    let records: Vec<TrialRecord> = if cfg.workers == 1 {
        jobs.iter()
            .map(|&(i, t)| ctx.trial(i, t))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            jobs.par_iter()
                .map(|&(i, t)| ctx.trial(i, t))
                .collect::<Result<_>>()
        })?
    };

    let aggregates = aggregate(&cfg.p_grid, &records);
    Ok(ExperimentReport {
        config: cfg.clone(),
        complete_wsat,
        markers: markers(cfg.n, &ctx.pattern),
        records,
        aggregates,
    })
}

fn with_mode(cfg: &ExperimentConfig, mode: Mode) -> ExperimentConfig {
    ExperimentConfig {
        mode,
        ..cfg.clone()
    }
}

/// How often `wsat(G(n, p), F) = wsat(n, F)`.
pub fn stability_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment(&with_mode(cfg, Mode::Stability))
}

/// Checks `|E(G)| - X_F(G) <= wsat(G, F) <= |E(G)|` on every trial; a violation
/// is an [`Error::Invariant`].
pub fn sandwich_check(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment(&with_mode(cfg, Mode::Sandwich))
}

/// Appearance frequency of `F` along the grid, with the `n^{-1/m(F)}` and
/// `n^{-1/mu(F)}` markers.
pub fn threshold_scan(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    run_experiment(&with_mode(cfg, Mode::Scan))
}
