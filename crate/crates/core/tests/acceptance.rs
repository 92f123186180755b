//! Acceptance criteria. Each test prints one `PASS` / `FAIL` line; run with
//! `cargo test -p wsat-core --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wsat_core::experiment::{
    expected_copies, stability_experiment, threshold_scan, ExperimentConfig, Mode,
};
use wsat_core::formulas::{
    closed_form_wsat, construct_complete_host_saturator, stability_profile, upper_bound_general,
    FormulaFamily, FormulaQuery, FormulaValue,
};
use wsat_core::graph::build_named_graph;
use wsat_core::pattern::count_copies;
use wsat_core::solver::{greedy_upper_bound, lower_bound_general, wsat_exact};
use wsat_core::{
    closure, closure_with_order, is_weakly_saturated, Graph, GraphFamily, Pattern, SearchBudget,
    Seed,
};

const FORMULA_LIMIT: Duration = Duration::from_secs(120);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(60);
const COUNTING_LIMIT: Duration = Duration::from_secs(30);
const PROFILE_LIMIT: Duration = Duration::from_secs(300);
/// Allowed distance of the empirical copy mean from its expectation, in
/// standard errors of the mean.
const COUNT_TOLERANCE_SE: f64 = 5.0;
const STABILITY_FLOOR: f64 = 0.5;

fn report(id: u32, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {id} [{name}]: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn pattern(fam: GraphFamily) -> Pattern {
    Pattern::normalize(&build_named_graph(fam).unwrap()).unwrap()
}

fn exact_on_clique(n: usize, pat: &Pattern) -> u64 {
    wsat_exact(&Graph::complete(n), pat, SearchBudget::default())
        .unwrap()
        .exact
        .unwrap()
}

#[test]
fn criterion_1_formula_reproduction() {
    use FormulaFamily::*;
    let table = [
        (4, Ks { s: 3 }, 3),
        (5, Ks { s: 3 }, 4),
        (6, Ks { s: 3 }, 5),
        (5, Ks { s: 4 }, 7),
        (6, Ks { s: 4 }, 9),
        (5, K1t { t: 3 }, 3),
        (6, K1t { t: 3 }, 3),
        (5, K2t { t: 3 }, 6),
        (6, Ktt { t: 2 }, 6),
    ];
    let started = Instant::now();
    let mut mismatches = Vec::new();
    for (n, fam, expected) in table {
        let pat = Pattern::normalize(&fam.pattern_graph().unwrap()).unwrap();
        let solved = exact_on_clique(n, &pat) as i64;
        let formula = closed_form_wsat(FormulaQuery {
            family: fam,
            n: n as u64,
        })
        .unwrap();
        if solved != expected || formula != FormulaValue::Exact(expected) {
            mismatches.push(format!(
                "{fam:?} n={n}: exact {solved}, formula {formula:?}"
            ));
        }
    }
    let elapsed = started.elapsed();
    let ok = mismatches.is_empty() && elapsed < FORMULA_LIMIT;
    report(
        1,
        "formula reproduction",
        ok,
        format!(
            "{} cases, {} mismatches, {elapsed:.2?} < {FORMULA_LIMIT:?}",
            table.len(),
            mismatches.len()
        ),
    );
    assert!(ok, "{mismatches:?}");
}

#[test]
fn criterion_2_construction_soundness() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut built = 0;
    for s in 3..=4usize {
        let pat = pattern(GraphFamily::Complete { n: s });
        let core = Graph::complete(s - 2);
        for n in s..=30 {
            let expected = (s - 2) * n - (s - 1) * (s - 2) / 2;
            match construct_complete_host_saturator(n, &pat, s - 2, &core) {
                Ok(sat) => {
                    let sound = sat.graph.edge_count() == expected
                        && is_weakly_saturated(&Graph::complete(n), &pat, &sat.graph).unwrap();
                    if sound {
                        built += 1;
                    } else {
                        failures.push(format!("K_{s} n={n}: {} edges", sat.graph.edge_count()));
                    }
                }
                Err(e) => failures.push(format!("K_{s} n={n}: {e}")),
            }
        }
    }
    let elapsed = started.elapsed();
    let ok = failures.is_empty() && elapsed < CONSTRUCTION_LIMIT;
    report(
        2,
        "construction soundness",
        ok,
        format!("{built}/55 verified, {elapsed:.2?} < {CONSTRUCTION_LIMIT:?}"),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_3_closure_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut violations = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(3..=8);
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(0.7)).collect();
        let host = common::graph_from_bits(n, &bits);
        let f = loop {
            let s = rng.gen_range(2..=4);
            let bits: Vec<bool> = (0..s * (s - 1) / 2).map(|_| rng.gen_bool(0.7)).collect();
            let f = common::graph_from_bits(s, &bits);
            if f.edge_count() > 0 {
                break f;
            }
        };
        let pat = Pattern::normalize(&f).unwrap();
        let mut small = Graph::empty(n);
        let mut large = Graph::empty(n);
        for e in host.edges() {
            let r: f64 = rng.gen();
            if r < 0.2 {
                small.add_edge(e.u(), e.v());
            }
            if r < 0.45 {
                large.add_edge(e.u(), e.v());
            }
        }
        let c_small = closure(&host, &pat, &small).unwrap().closure;
        let c_large = closure(&host, &pat, &large).unwrap().closure;
        if closure(&host, &pat, &c_small).unwrap().closure != c_small {
            violations.push(format!("instance {i}: not idempotent"));
        }
        if !c_small.is_spanning_subgraph_of(&c_large) {
            violations.push(format!("instance {i}: not monotone"));
        }
        let oracle = common::naive_closure(&host, &f, &small);
        for k in 0..5 {
            let mut order = host.edges();
            order.shuffle(&mut rng);
            let c = closure_with_order(&host, &pat, &small, &order)
                .unwrap()
                .closure;
            if c != oracle {
                violations.push(format!(
                    "instance {i}: scan order {k} disagrees with the oracle"
                ));
            }
        }
    }
    let ok = violations.is_empty();
    report(
        3,
        "closure algebra",
        ok,
        format!("200 instances, {} violations", violations.len()),
    );
    assert!(ok, "{violations:?}");
}

#[test]
fn criterion_4_bound_consistency() {
    let mut violations = Vec::new();
    let mut instances = 0;
    for (name, f) in common::small_patterns() {
        let pat = Pattern::normalize(&f).unwrap();
        for n in pat.s()..=6 {
            let host = Graph::complete(n);
            let exact = exact_on_clique(n, &pat);
            let lower = lower_bound_general(&host, &pat).unwrap();
            let upper = upper_bound_general(n as u64, &pat).unwrap();
            let greedy = greedy_upper_bound(&host, &pat, Seed::new(n as u64, 4))
                .unwrap()
                .upper;
            instances += 1;
            if lower > exact || exact as i64 > upper || exact > greedy {
                violations.push(format!(
                    "{name} K_{n}: {lower} <= {exact} <= {upper}, greedy {greedy}"
                ));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let patterns = common::small_patterns();
    for i in 0..100 {
        let n = rng.gen_range(3..=7);
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(0.65)).collect();
        let host = common::graph_from_bits(n, &bits);
        let (name, f) = &patterns[i % patterns.len()];
        let pat = Pattern::normalize(f).unwrap();
        let exact = wsat_exact(&host, &pat, SearchBudget::default())
            .unwrap()
            .exact
            .unwrap();
        let edges = host.edge_count() as u64;
        let copies = count_copies(&host, &pat);
        let greedy = greedy_upper_bound(&host, &pat, Seed::new(i as u64, 5))
            .unwrap()
            .upper;
        instances += 1;
        let lower_ok = n < pat.s() || lower_bound_general(&host, &pat).unwrap() <= exact;
        if edges.saturating_sub(copies) > exact || exact > edges || exact > greedy || !lower_ok {
            violations.push(format!(
                "{name} host {i}: |E| {edges}, X_F {copies}, exact {exact}, greedy {greedy}"
            ));
        }
    }
    let ok = violations.is_empty();
    report(
        4,
        "bound consistency",
        ok,
        format!("{instances} instances, {} violations", violations.len()),
    );
    assert!(ok, "{violations:?}");
}

#[test]
fn criterion_5_counting_cross_check() {
    let started = Instant::now();
    let k3 = pattern(GraphFamily::Complete { n: 3 });
    let k6_count = count_copies(&Graph::complete(6), &k3);

    let cfg = ExperimentConfig::new(Graph::complete(3), 10, vec![0.3], 200, 5, Mode::Scan);
    let scan = threshold_scan(&cfg).unwrap();
    let xs: Vec<f64> = scan.records.iter().map(|r| r.x_f.unwrap() as f64).collect();
    let mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
    let se = (var / xs.len() as f64).sqrt();
    let expected = expected_copies(10, 0.3, &k3);
    let z = (mean - expected).abs() / se;
    let elapsed = started.elapsed();

    let ok = k6_count == 20 && z <= COUNT_TOLERANCE_SE && elapsed < COUNTING_LIMIT;
    report(
        5,
        "counting cross-check",
        ok,
        format!(
            "K_6 triangles {k6_count}; mean X_F {mean:.4} vs E {expected:.4}, {z:.2} SE <= {COUNT_TOLERANCE_SE}; {elapsed:.2?}"
        ),
    );
    assert!(ok);
}

fn baseline_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/baselines/stability_k3_n7_p095.json")
}

#[test]
fn criterion_6_stability_frequency() {
    let mut cfg = ExperimentConfig::new(
        Graph::complete(3),
        7,
        vec![0.95],
        30,
        20_240_601,
        Mode::Stability,
    );
    let first = stability_experiment(&cfg).unwrap();
    let second = stability_experiment(&cfg).unwrap();
    let text = serde_json::to_string_pretty(&first).unwrap();
    let repeatable = text == serde_json::to_string_pretty(&second).unwrap();

    let path = baseline_path();
    let (baseline_ok, note) = match std::fs::read_to_string(&path) {
        Ok(stored) => (stored == text, "baseline reproduced"),
        Err(_) => {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &text).unwrap();
            (true, "baseline recorded")
        }
    };
    let fraction = first.aggregates[0].fraction_equal.unwrap_or(0.0);

    cfg.p_grid = vec![1.0];
    cfg.trials = 5;
    let full = stability_experiment(&cfg).unwrap();
    let full_fraction = full.aggregates[0].fraction_equal;

    let ok = repeatable
        && baseline_ok
        && fraction >= STABILITY_FLOOR
        && full_fraction == Some(1.0)
        && first.aggregates[0].budget_exhausted == 0;
    report(
        6,
        "stability frequency",
        ok,
        format!(
            "fraction {fraction:.4} >= {STABILITY_FLOOR}, {note}, p=1 fraction {full_fraction:?}"
        ),
    );
    assert!(ok);
}

/// `(d_F, k, non-increasing)` of the profile scanned up to `n_max`.
fn profile(fam: GraphFamily, n_max: usize) -> (i64, usize, bool, Vec<(usize, i64)>) {
    let p = stability_profile(&pattern(fam), n_max, SearchBudget::default()).unwrap();
    assert!(!p.partial);
    let monotone = p.phi_table.windows(2).all(|w| w[0].phi >= w[1].phi);
    let table = p.phi_table.iter().map(|e| (e.n, e.phi)).collect();
    (p.d_f, p.k, monotone, table)
}

#[test]
fn criterion_7_profile_detection() {
    let started = Instant::now();
    let cases = [
        ("K_3", GraphFamily::Complete { n: 3 }, (-1, 3)),
        ("K_4", GraphFamily::Complete { n: 4 }, (-3, 4)),
        ("K_1,3", GraphFamily::Star { t: 3 }, (3, 3)),
    ];
    let mut all_ok = true;
    let mut lines = Vec::new();
    for (name, fam, (d_expected, k_expected)) in cases {
        let (d, k, monotone, table) = profile(fam, 7);
        let ok = d == d_expected && k == k_expected && monotone;
        all_ok &= ok;
        lines.push(format!(
            "{name}: (d_F, k) = ({d}, {k}), expected ({d_expected}, {k_expected}), φ non-increasing {monotone}, φ table {table:?}"
        ));
    }
    let elapsed = started.elapsed();
    all_ok &= elapsed < PROFILE_LIMIT;
    report(
        7,
        "profile detection",
        all_ok,
        format!("{}; {elapsed:.2?}", lines.join("; ")),
    );
    assert!(all_ok, "{lines:#?}");
}
