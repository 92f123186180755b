//! The `wsat` command line: argument parsing, graph arguments and dispatch.
//!
//! JSON goes to stdout (or `--out FILE`), a one-line summary to stderr.
//! Exit codes: 0 success, 1 domain error, 2 usage or input error.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use wsat_core::graph::{build_named_graph, decode_edge_list, sample_gnp};
use wsat_core::{Error, Graph, GraphFamily, Pattern, SearchBudget, Seed};

#[derive(Debug, Parser)]
#[command(
    name = "wsat",
    version,
    about = "Weak saturation numbers and graph bootstrap percolation"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Worker threads for the solver and experiments.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Verbose payload: certificates, traces and full records.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the JSON payload to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search nodes before the exact solver gives up.
    #[arg(long, default_value_t = 100_000_000)]
    pub budget_nodes: u64,
    /// Wall-clock seconds before the exact solver gives up.
    #[arg(long, default_value_t = 60.0)]
    pub budget_seconds: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, CliError> {
        SearchBudget::new(self.budget_nodes, self.budget_seconds).map_err(CliError::from)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ks,
    Ktt,
    Kst,
    K2t,
    K1t,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructMethod {
    Complete,
    Random,
    Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Stability,
    Sandwich,
    Neighborhood,
    Scan,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F-bootstrap closure of a start graph inside a host.
    Closure {
        #[arg(long)]
        host: String,
        /// Start graph.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        pattern: String,
        /// Seed for `gnp:` arguments without their own.
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
    /// Check that a graph is weakly saturated, optionally replaying a trace.
    Verify {
        #[arg(long)]
        host: String,
        /// Candidate weakly saturated graph.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        pattern: String,
        /// JSON activation trace to replay.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
    },
    /// wsat(G, F) by exact search or the greedy upper bound.
    Solve {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
        method: SolveMethod,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Greedy runs; the best is reported. Also used to tighten the upper
        /// bound when the exact search runs out of budget.
        #[arg(long, default_value_t = 10)]
        greedy_repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Closed-form wsat(n, F), or the generic upper bound for --pattern.
    Formula {
        #[arg(long, value_enum, conflicts_with = "pattern")]
        family: Option<FamilyArg>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        pattern: Option<String>,
        /// `m,w`: a clique size with its known wsat(m, F).
        #[arg(long, requires = "pattern")]
        clique: Option<String>,
    },
    /// Build and verify an explicit weakly saturated graph.
    Construct {
        #[arg(long, value_enum)]
        method: ConstructMethod,
        #[arg(long)]
        pattern: String,
        /// Size of the complete host (method `complete`).
        #[arg(long)]
        n: Option<usize>,
        /// Clique size (methods `complete` and `random`).
        #[arg(long)]
        m: Option<usize>,
        /// Core on m vertices (method `complete`); solved exactly if omitted.
        #[arg(long)]
        core: Option<String>,
        /// Host graph (methods `random` and `partition`).
        #[arg(long)]
        host: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// φ(n) = wsat(n, F) - (δ-1)n for n = s-1 ..= nmax.
    Profile {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Seeded G(n, p) experiments.
    Experiment {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated, strictly increasing probabilities.
        #[arg(long)]
        pgrid: String,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Subset size (mode `neighborhood`).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Subsets examined per sample (mode `neighborhood`).
        #[arg(long, default_value_t = 1000)]
        sample_cap: usize,
        /// Record per-trial wall-clock times.
        #[arg(long)]
        timings: bool,
        /// Also write one CSV row per trial to FILE.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Copies of F in a host, pattern invariants, or E(X_F) in G(n, p).
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: Option<String>,
        #[arg(long, requires = "p")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit code 2.
    Usage(String),
    /// The operation ran and failed; exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parameter(_) | Error::Parse { .. } | Error::Io(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn parse_gnp(params: &str, default_seed: u64) -> Result<Graph, CliError> {
    let bad = || CliError::Usage(format!("gnp:{params}: expected gnp:n,p[,seed]"));
    let fields: Vec<&str> = params.split(',').map(str::trim).collect();
    if !(2..=3).contains(&fields.len()) {
        return Err(bad());
    }
    let n: usize = fields[0].parse().map_err(|_| bad())?;
    let p: f64 = fields[1].parse().map_err(|_| bad())?;
    let seed = match fields.get(2) {
        Some(s) => s.parse().map_err(|_| bad())?,
        None => default_seed,
    };
    Ok(sample_gnp(n, p, Seed::new(seed, 0))?)
}

/// A graph argument: an edge-list file if the path exists, otherwise
/// `family:params` shorthand (see [`GraphFamily`]) or `gnp:n,p[,seed]`.
pub fn parse_graph_arg(arg: &str, default_seed: u64) -> Result<Graph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))?;
        return decode_edge_list(&text).map_err(|e| CliError::Usage(format!("{arg}: {e}")));
    }
    if let Some(params) = arg.strip_prefix("gnp:") {
        return parse_gnp(params, default_seed);
    }
    if arg.contains(':') {
        let fam: GraphFamily = arg
            .parse()
            .map_err(|e: Error| CliError::Usage(e.to_string()))?;
        return build_named_graph(fam).map_err(|e| CliError::Usage(e.to_string()));
    }
    Err(CliError::Usage(format!(
        "{arg}: no such file, and not a family:params shorthand"
    )))
}

pub fn parse_pattern_arg(arg: &str, default_seed: u64) -> Result<Pattern, CliError> {
    let g = parse_graph_arg(arg, default_seed)?;
    Pattern::normalize(&g).map_err(|e| CliError::Usage(format!("pattern {arg}: {e}")))
}

/// What a command produced: the stdout payload and a stderr summary.
pub struct Outcome {
    pub payload: String,
    pub summary: String,
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let result = commands::execute(&cli).and_then(|outcome| {
        match &cli.global.out {
            Some(path) => std::fs::write(path, format!("{}\n", outcome.payload))
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let _ = writeln!(stdout, "{}", outcome.payload);
            }
        }
        Ok(outcome.summary)
    });
    match result {
        Ok(summary) => {
            let _ = writeln!(stderr, "{summary}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
