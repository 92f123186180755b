use serde::Serialize;
use wsat_core::bootstrap::check_trace;
use wsat_core::experiment::expected_copies;
use wsat_core::experiment::{run_experiment, ExperimentConfig, Mode};
use wsat_core::formulas::{
    closed_form_wsat, construct_clique_partition_saturator, construct_complete_host_saturator,
    construct_random_host_saturator, generic_upper_bounds, stability_profile, FormulaFamily,
    FormulaQuery, Saturator,
};
use wsat_core::pattern::{contains_copy, count_copies, count_embeddings};
use wsat_core::solver::{greedy_best_of, wsat_exact_with_workers};
use wsat_core::{closure, percolates, ActivationTrace, Graph, Seed};

use crate::output::{
    BoundOutput, ClosureOutput, ConstructOutput, CountOutput, ExperimentSummary, FormulaOutput,
    VerifyOutput,
};
use crate::{
    parse_graph_arg, parse_pattern_arg, Cli, CliError, Command, ConstructMethod, FamilyArg,
    ModeArg, Outcome, SolveMethod,
};

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(|e| CliError::Domain(format!("cannot encode output: {e}")))
}

fn pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Domain(format!("cannot encode output: {e}")))
}

fn outcome(payload: String, summary: String) -> Result<Outcome, CliError> {
    Ok(Outcome { payload, summary })
}

fn require<T>(value: Option<T>, flag: &str, why: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required {why}")))
}

pub(crate) fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let verbose = cli.global.json;
    let workers = cli.global.workers.max(1);
    match &cli.command {
        Command::Closure {
            host,
            seed,
            pattern,
            rng_seed,
        } => {
            let host = parse_graph_arg(host, *rng_seed)?;
            let start = parse_graph_arg(seed, *rng_seed)?;
            let pat = parse_pattern_arg(pattern, *rng_seed)?;
            let run = closure(&host, &pat, &start)?;
            let out = ClosureOutput {
                percolates: run.percolates,
                added: run.trace.len(),
                host_edges: host.edge_count(),
                closure_edges: run.closure.edge_count(),
                closure: verbose.then(|| run.closure.clone()),
                trace: verbose.then(|| run.trace.clone()),
            };
            let summary = format!(
                "closure: {} of {} host edges reached, {} added, percolates = {}",
                out.closure_edges, out.host_edges, out.added, out.percolates
            );
            outcome(json(&out)?, summary)
        }

        Command::Verify {
            host,
            seed,
            pattern,
            trace,
            rng_seed,
        } => {
            let host = parse_graph_arg(host, *rng_seed)?;
            let h = parse_graph_arg(seed, *rng_seed)?;
            let pat = parse_pattern_arg(pattern, *rng_seed)?;
            if !h.is_spanning_subgraph_of(&host) {
                return Err(CliError::Domain(
                    "the candidate is not a spanning subgraph of the host".into(),
                ));
            }
            let pattern_free = !contains_copy(&h, &pat);
            let perc = percolates(&host, &pat, &h)?;
            let (trace_valid, trace_failure) = match trace {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let steps: ActivationTrace = serde_json::from_str(&text).map_err(|e| {
                        CliError::Usage(format!("{}: not an activation trace: {e}", path.display()))
                    })?;
                    match check_trace(&host, &pat, &h, &steps) {
                        Ok(()) => (Some(true), None),
                        Err(f) => (Some(false), Some(f.into())),
                    }
                }
                None => (None, None),
            };
            let out = VerifyOutput {
                weakly_saturated: pattern_free && perc,
                pattern_free,
                percolates: perc,
                trace_valid,
                trace_failure,
            };
            let mut summary = format!(
                "verify: weakly saturated = {} (pattern-free {}, percolates {})",
                out.weakly_saturated, pattern_free, perc
            );
            if let Some(ok) = out.trace_valid {
                summary.push_str(&format!(", trace valid = {ok}"));
            }
            outcome(json(&out)?, summary)
        }

        Command::Solve {
            host,
            pattern,
            method,
            budget,
            greedy_repeats,
            seed,
        } => {
            let host = parse_graph_arg(host, *seed)?;
            let pat = parse_pattern_arg(pattern, *seed)?;
            let rng = Seed::new(*seed, 0);
            let mut result = match method {
                SolveMethod::Exact => {
                    let mut r = wsat_exact_with_workers(&host, &pat, budget.budget()?, workers)?;
                    if r.budget_exhausted {
                        let g = greedy_best_of(&host, &pat, rng, *greedy_repeats)?;
                        if g.upper <= r.upper {
                            r.upper = g.upper;
                            r.certificate = g.certificate;
                        }
                    }
                    r
                }
                SolveMethod::Greedy => greedy_best_of(&host, &pat, rng, *greedy_repeats)?,
            };
            let summary = match result.exact {
                Some(v) => format!("wsat = {v} ({}, {} nodes)", result.method, result.nodes),
                None => format!(
                    "{} <= wsat <= {} ({}{})",
                    result.lower,
                    result.upper,
                    result.method,
                    if result.budget_exhausted {
                        ", budget exhausted"
                    } else {
                        ""
                    }
                ),
            };
            if !verbose {
                result.certificate = None;
            }
            outcome(json(&result)?, summary)
        }

        Command::Formula {
            family,
            n,
            s,
            t,
            pattern,
            clique,
        } => {
            if let Some(pattern) = pattern {
                let pat = parse_pattern_arg(pattern, 0)?;
                let clique = match clique {
                    Some(text) => {
                        let bad = || CliError::Usage(format!("--clique {text}: expected m,w"));
                        let (m, w) = text.split_once(',').ok_or_else(bad)?;
                        Some((
                            m.trim().parse().map_err(|_| bad())?,
                            w.trim().parse().map_err(|_| bad())?,
                        ))
                    }
                    None => None,
                };
                let upper = generic_upper_bounds(*n, &pat, clique)?;
                let out = BoundOutput {
                    n: *n,
                    clique,
                    upper,
                };
                let payload = if verbose {
                    json(&out)?
                } else {
                    upper.to_string()
                };
                return outcome(payload, format!("wsat({n}, F) <= {upper}"));
            }
            let family = require(*family, "family", "unless --pattern is given")?;
            let need = |v: Option<u64>, flag: &str| require(v, flag, "for this family");
            let fam = match family {
                FamilyArg::Ks => FormulaFamily::Ks { s: need(*s, "s")? },
                FamilyArg::Ktt => FormulaFamily::Ktt { t: need(*t, "t")? },
                FamilyArg::Kst => FormulaFamily::Kst {
                    s: need(*s, "s")?,
                    t: need(*t, "t")?,
                },
                FamilyArg::K2t => FormulaFamily::K2t { t: need(*t, "t")? },
                FamilyArg::K1t => FormulaFamily::K1t { t: need(*t, "t")? },
            };
            let value = closed_form_wsat(FormulaQuery { family: fam, n: *n })?;
            let (fs, ft) = match fam {
                FormulaFamily::Ks { s } => (Some(s), None),
                FormulaFamily::Kst { s, t } => (Some(s), Some(t)),
                FormulaFamily::Ktt { t } | FormulaFamily::K2t { t } | FormulaFamily::K1t { t } => {
                    (None, Some(t))
                }
            };
            let out = FormulaOutput {
                family: format!("{family:?}").to_lowercase(),
                n: *n,
                s: fs,
                t: ft,
                value,
            };
            let payload = if verbose { json(&out)? } else { json(&value)? };
            outcome(payload, format!("wsat({n}, {fam}) = {}", json(&value)?))
        }

        Command::Construct {
            method,
            pattern,
            n,
            m,
            core,
            host,
            budget,
            seed,
        } => {
            let pat = parse_pattern_arg(pattern, *seed)?;
            let rng = Seed::new(*seed, 0);
            let (sat, host_graph): (Saturator, Graph) = match method {
                ConstructMethod::Complete => {
                    let n = require(*n, "n", "for --method complete")?;
                    let m = require(*m, "m", "for --method complete")?;
                    let core = match core {
                        Some(arg) => parse_graph_arg(arg, *seed)?,
                        None => {
                            let r = wsat_exact_with_workers(
                                &Graph::complete(m),
                                &pat,
                                budget.budget()?,
                                workers,
                            )?;
                            match r.certificate {
                                Some(c) if r.exact.is_some() => c.graph,
                                _ => {
                                    return Err(CliError::Domain(format!(
                                        "budget too small to solve a core on K_{m}"
                                    )))
                                }
                            }
                        }
                    };
                    (
                        construct_complete_host_saturator(n, &pat, m, &core)?,
                        Graph::complete(n),
                    )
                }
                ConstructMethod::Random => {
                    let g = parse_graph_arg(
                        &require(host.clone(), "host", "for --method random")?,
                        *seed,
                    )?;
                    let m = require(*m, "m", "for --method random")?;
                    (construct_random_host_saturator(&g, &pat, m, rng)?, g)
                }
                ConstructMethod::Partition => {
                    let g = parse_graph_arg(
                        &require(host.clone(), "host", "for --method partition")?,
                        *seed,
                    )?;
                    (construct_clique_partition_saturator(&g, &pat, rng)?, g)
                }
            };
            let out = ConstructOutput {
                method: format!("{method:?}").to_lowercase(),
                edges: sat.graph.edge_count(),
                host_edges: host_graph.edge_count(),
                core_edges: sat.core_edges,
                pruned_edges: sat.pruned_edges,
                parts: sat.parts.len(),
                verified: true,
                graph: verbose.then(|| sat.graph.clone()),
                trace: verbose.then(|| sat.trace.clone()),
            };
            let summary = format!(
                "construct: verified weakly saturated graph with {} of {} host edges",
                out.edges, out.host_edges
            );
            outcome(json(&out)?, summary)
        }

        Command::Profile {
            pattern,
            nmax,
            budget,
        } => {
            let pat = parse_pattern_arg(pattern, 0)?;
            let p = stability_profile(&pat, *nmax, budget.budget()?)?;
            let summary = format!(
                "profile: d_F = {}, k = {}{}",
                p.d_f,
                p.k,
                if p.partial { " (partial)" } else { "" }
            );
            outcome(json(&p)?, summary)
        }

        Command::Experiment {
            mode,
            pattern,
            n,
            pgrid,
            trials,
            seed,
            k,
            sample_cap,
            timings,
            csv,
            budget,
        } => {
            let f = parse_graph_arg(pattern, *seed)?;
            let p_grid = pgrid
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<f64>()
                        .map_err(|_| CliError::Usage(format!("--pgrid: {x:?} is not a number")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mode = match mode {
                ModeArg::Stability => Mode::Stability,
                ModeArg::Sandwich => Mode::Sandwich,
                ModeArg::Neighborhood => Mode::Neighborhood,
                ModeArg::Scan => Mode::Scan,
            };
            let mut cfg = ExperimentConfig::new(f, *n, p_grid, *trials, *seed, mode);
            cfg.budget = budget.budget()?;
            cfg.workers = workers;
            cfg.k = *k;
            cfg.sample_cap = *sample_cap;
            cfg.record_timings = *timings;
            let report = run_experiment(&cfg)?;
            if let Some(path) = csv {
                let file = std::fs::File::create(path).map_err(|e| {
                    CliError::Usage(format!("cannot write {}: {e}", path.display()))
                })?;
                report.write_csv(file)?;
            }
            let summary = report
                .aggregates
                .iter()
                .map(|a| match a.fraction_equal {
                    Some(f) => format!("p = {}: equal {f:.3}", a.p),
                    None => format!("p = {}: contains {:.3}", a.p, a.fraction_contains),
                })
                .collect::<Vec<_>>()
                .join("; ");
            let payload = if verbose {
                pretty(&report)?
            } else {
                json(&ExperimentSummary {
                    mode: mode.to_string(),
                    n: *n,
                    trials: *trials,
                    master_seed: *seed,
                    complete_wsat: report.complete_wsat,
                    markers: report.markers.clone(),
                    aggregates: report.aggregates.clone(),
                })?
            };
            outcome(payload, format!("experiment {mode}: {summary}"))
        }

        Command::Count {
            pattern,
            host,
            n,
            p,
            seed,
        } => {
            let pat = parse_pattern_arg(pattern, *seed)?;
            let mut out = CountOutput {
                s: pat.s(),
                t: pat.t(),
                aut: pat.aut(),
                m: pat.m(),
                mu: pat.mu(),
                copies: None,
                embeddings: None,
                contains: None,
                expected: None,
            };
            if let Some(h) = host {
                let g = parse_graph_arg(h, *seed)?;
                out.copies = Some(count_copies(&g, &pat));
                out.embeddings = Some(count_embeddings(&g, &pat));
                out.contains = Some(contains_copy(&g, &pat));
            }
            if let (Some(n), Some(p)) = (n, p) {
                if !(0.0..=1.0).contains(p) {
                    return Err(CliError::Usage(format!("--p {p} is outside [0, 1]")));
                }
                out.expected = Some(expected_copies(*n, *p, &pat));
            }
            let summary = match out.copies {
                Some(c) => format!("count: {c} copies, |Aut(F)| = {}", out.aut),
                None => format!(
                    "count: |Aut(F)| = {}, m = {}, mu = {}",
                    out.aut, out.m, out.mu
                ),
            };
            outcome(json(&out)?, summary)
        }
    }
}
