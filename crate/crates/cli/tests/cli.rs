use std::path::Path;
use std::process::{Command, Output};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use wsat_cli::output::{
    ClosureOutput, ConstructOutput, CountOutput, ExperimentSummary, FormulaOutput, VerifyOutput,
};
use wsat_core::experiment::ExperimentReport;
use wsat_core::formulas::StabilityProfile;
use wsat_core::WsatResult;

fn wsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = wsat(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

/// Parses `text` as `T`, re-emits it, and compares both sides with keys
/// sorted.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let raw: Value = serde_json::from_str(text).unwrap();
    let typed: T = serde_json::from_str(text).unwrap();
    let again: Value = serde_json::to_value(&typed).unwrap();
    assert_eq!(
        serde_json::to_string(&raw).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
    typed
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_triangle_in_k4() {
    let text = ok(&["solve", "--host", "complete:4", "--pattern", "complete:3"]);
    let r: WsatResult = round_trip(&text);
    assert_eq!(r.exact, Some(3));
    assert!(r.certificate.is_none());

    let verbose = ok(&[
        "solve",
        "--host",
        "complete:4",
        "--pattern",
        "complete:3",
        "--json",
    ]);
    let r: WsatResult = round_trip(&verbose);
    assert_eq!(r.certificate.unwrap().graph.edge_count(), 3);
}

#[test]
fn formula_prints_the_bare_value() {
    assert_eq!(
        ok(&["formula", "--family", "k2t", "--n", "6", "--t", "4"]).trim(),
        "11"
    );
    let text = ok(&[
        "formula", "--family", "kst", "--n", "20", "--s", "2", "--t", "5",
    ]);
    assert_eq!(text.trim(), r#"{"lower":26,"upper":28}"#);
    let verbose = ok(&[
        "formula", "--family", "ks", "--n", "6", "--s", "4", "--json",
    ]);
    let f: FormulaOutput = round_trip(&verbose);
    assert_eq!(f.value, wsat_core::formulas::FormulaValue::Exact(9));
    assert_eq!(
        ok(&["formula", "--pattern", "complete:3", "--n", "6"]).trim(),
        "5"
    );
}

#[test]
fn closure_of_a_star_in_k4() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "h.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let seed = write(dir.path(), "s.el", "# star\n4 3\n0 1\n0 2\n0 3\n");
    let text = ok(&[
        "closure",
        "--host",
        &host,
        "--seed",
        &seed,
        "--pattern",
        "complete:3",
    ]);
    let out: ClosureOutput = round_trip(&text);
    assert!(out.percolates);
    assert_eq!(out.added, 3);
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["percolates"], true);
    assert_eq!(value["added"], 3);
}

#[test]
fn verify_replays_a_closure_trace() {
    let dir = tempfile::tempdir().unwrap();
    let seed = write(dir.path(), "s.el", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    let text = ok(&[
        "closure",
        "--host",
        "complete:5",
        "--seed",
        &seed,
        "--pattern",
        "complete:3",
        "--json",
    ]);
    let run: ClosureOutput = round_trip(&text);
    let trace = write(
        dir.path(),
        "trace.json",
        &serde_json::to_string(&run.trace.unwrap()).unwrap(),
    );
    let checked = ok(&[
        "verify",
        "--host",
        "complete:5",
        "--seed",
        &seed,
        "--pattern",
        "complete:3",
        "--trace",
        &trace,
    ]);
    let v: VerifyOutput = round_trip(&checked);
    assert!(v.weakly_saturated);
    assert_eq!(v.trace_valid, Some(true));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"[{"edge":[0,4],"witness":[0,1,4]}]"#,
    );
    let rejected = ok(&[
        "verify",
        "--host",
        "complete:5",
        "--seed",
        &seed,
        "--pattern",
        "complete:3",
        "--trace",
        &bad,
    ]);
    let v: VerifyOutput = round_trip(&rejected);
    assert_eq!(v.trace_valid, Some(false));
    assert_eq!(v.trace_failure.unwrap().step, Some(0));
}

#[test]
fn construct_count_and_profile_round_trip() {
    let text = ok(&[
        "construct",
        "--method",
        "complete",
        "--n",
        "8",
        "--m",
        "2",
        "--pattern",
        "complete:4",
        "--core",
        "complete:2",
    ]);
    let c: ConstructOutput = round_trip(&text);
    assert_eq!(c.edges, 2 * 8 - 3);

    let text = ok(&[
        "construct",
        "--method",
        "random",
        "--host",
        "complete:8",
        "--m",
        "2",
        "--pattern",
        "complete:3",
        "--json",
    ]);
    let c: ConstructOutput = round_trip(&text);
    assert_eq!(c.edges, 7);
    assert!(c.graph.is_some());

    let text = ok(&[
        "count",
        "--pattern",
        "complete:3",
        "--host",
        "complete:6",
        "--n",
        "10",
        "--p",
        "0.5",
    ]);
    let c: CountOutput = round_trip(&text);
    assert_eq!(c.copies, Some(20));
    assert_eq!(c.expected, Some(15.0));

    let text = ok(&["profile", "--pattern", "star:3", "--nmax", "6"]);
    let p: StabilityProfile = round_trip(&text);
    assert_eq!((p.d_f, p.k), (3, 3));
}

#[test]
fn experiments_are_reproducible_and_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("trials.csv");
    let json = dir.path().join("report.json");
    let args = [
        "experiment",
        "--mode",
        "sandwich",
        "--pattern",
        "complete:3",
        "--n",
        "6",
        "--pgrid",
        "0.3,0.8",
        "--trials",
        "4",
        "--seed",
        "11",
        "--json",
    ];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let report: ExperimentReport = round_trip(&first);
    assert_eq!(report.records.len(), 8);
    assert!(report.aggregates_consistent());

    let mut with_files = args.to_vec();
    with_files.extend([
        "--csv",
        csv.to_str().unwrap(),
        "--out",
        json.to_str().unwrap(),
    ]);
    assert_eq!(ok(&with_files), "");
    let stored = std::fs::read_to_string(&json).unwrap();
    assert_eq!(stored.trim_end(), first.trim_end());
    let table = std::fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with(
        "p,trial,seed,edges,x_f,wsat_lower,wsat_exact,wsat_upper,equal_to_complete,status\n"
    ));
    assert_eq!(table.lines().count(), 9);

    let mut other_seed = args.to_vec();
    other_seed[12] = "12";
    assert_ne!(ok(&other_seed), first);

    let mut parallel = args.to_vec();
    parallel.extend(["--workers", "3"]);
    let threaded: ExperimentReport = round_trip(&ok(&parallel));
    assert_eq!(threaded.records, report.records);
    assert_eq!(threaded.aggregates, report.aggregates);

    let summary = ok(&[
        "experiment",
        "--mode",
        "scan",
        "--pattern",
        "complete:3",
        "--n",
        "10",
        "--pgrid",
        "0,1",
        "--trials",
        "3",
    ]);
    let s: ExperimentSummary = round_trip(&summary);
    assert_eq!(s.aggregates[0].fraction_contains, 0.0);
    assert_eq!(s.aggregates[1].fraction_contains, 1.0);
}

#[test]
fn gnp_arguments_follow_the_seed_flag() {
    let a = ok(&[
        "solve",
        "--host",
        "gnp:7,0.6",
        "--pattern",
        "complete:3",
        "--seed",
        "5",
    ]);
    let b = ok(&[
        "solve",
        "--host",
        "gnp:7,0.6,5",
        "--pattern",
        "complete:3",
        "--seed",
        "9",
    ]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(wsat(&["solve", "--bogus"]).status.code(), Some(2));
    assert_eq!(wsat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        wsat(&["solve", "--host", "no/such/file", "--pattern", "complete:3"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let looped = write(dir.path(), "loop.el", "3 1\n0 0\n");
    let out = wsat(&["solve", "--host", &looped, "--pattern", "complete:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(
        wsat(&[
            "experiment",
            "--mode",
            "scan",
            "--pattern",
            "complete:3",
            "--n",
            "5",
            "--pgrid",
            "0.5,0.2"
        ])
        .status
        .code(),
        Some(2)
    );

    let absent = wsat(&[
        "construct",
        "--method",
        "random",
        "--host",
        "cycle:6",
        "--m",
        "3",
        "--pattern",
        "complete:3",
    ]);
    assert_eq!(absent.status.code(), Some(1));
    assert!(stdout(&absent).is_empty());
    assert_eq!(
        wsat(&["formula", "--family", "ks", "--n", "2", "--s", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wsat(&["solve", "--host", "complete:13", "--pattern", "complete:13"])
            .status
            .code(),
        Some(1)
    );
}
