//! Command-line front end. [`run`] is a pure function from a parsed command
//! to an exit code and rendered output, so it can be tested without a
//! process boundary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::check::{check_equitable, CheckReport, Violation};
use crate::colorer::{self, Algorithm};
use crate::criteria;
use crate::error::OracleError;
use crate::oracle::{self, DecideConfig, OracleStatus};
use crate::par::Parallelism;
use crate::types::{Coloring, KAssignment};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "equichoose",
    version,
    about = "Equitable list coloring of complete bipartite graphs K_{n,m}"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputMode::Json, global = true)]
    pub format: OutputMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Json,
    Table,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Classify equitable k-choosability of K_{n,m} from the criteria.
    Decide { n: u64, m: u64, k: u64 },
    /// Classify every k in 1..=k_max (default n+m).
    Spectrum { n: u64, m: u64, k_max: Option<u64> },
    /// Color a k-assignment read from a JSON file.
    Color {
        assignment: PathBuf,
        #[arg(long, default_value = "auto")]
        algorithm: Algorithm,
        /// Write the greedy rounds as JSON lines to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a coloring against a k-assignment.
    Verify { assignment: PathBuf, coloring: PathBuf },
    /// Decide choosability by exhaustive enumeration of k-assignments.
    OracleDecide {
        n: usize,
        m: usize,
        k: usize,
        #[arg(long)]
        universe: Option<usize>,
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the uniform assignment that defeats equitable k-choosability.
    Counterexample { n: usize, m: usize, k: usize },
}

/// Exit code plus everything meant for stdout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn new(code: i32, output: String) -> Self {
        Outcome { code, output }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome::new(EXIT_USAGE, format!("error: {message}\n"))
    }
}

#[derive(Serialize)]
struct DecideJson {
    n: u64,
    m: u64,
    k: u64,
    status: criteria::Status,
    rule: criteria::Rule,
}

#[derive(Serialize)]
struct ColorJson {
    algorithm: Algorithm,
    coloring: Option<Coloring>,
    check: Option<CheckReport>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("results serialize") + "\n"
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Outcome> {
    let text = fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn positive(values: &[(&str, u64)]) -> Result<(), Outcome> {
    match values.iter().find(|(_, v)| *v == 0) {
        Some((name, _)) => Err(Outcome::usage(format!("{name} must be at least 1"))),
        None => Ok(()),
    }
}

fn describe(v: &Violation) -> String {
    match v {
        Violation::NotInList { vertex, color } => format!("{vertex} has color {color}, which is not in its list"),
        Violation::CrossSide { color, uprime, a } => {
            format!("color {color} is used on both sides ({} and {})", uprime[0], a[0])
        }
        Violation::ClassTooLarge { color, size, bound } => {
            format!("color {color} is used {size} times, more than the bound {bound}")
        }
    }
}

fn render_check(report: &CheckReport) -> String {
    if report.pass {
        return "PASS\n".to_string();
    }
    let mut out = String::from("FAIL\n");
    for v in &report.violations {
        let _ = writeln!(out, "  {}", describe(v));
    }
    out
}

pub fn run(command: &Command, mode: OutputMode) -> Outcome {
    match run_inner(command, mode) {
        Ok(o) | Err(o) => o,
    }
}

fn run_inner(command: &Command, mode: OutputMode) -> Result<Outcome, Outcome> {
    match command {
        &Command::Decide { n, m, k } => {
            positive(&[("n", n), ("m", m), ("k", k)])?;
            let v =
                criteria::classify(n, m, k).map_err(|e| Outcome::new(EXIT_USAGE, format!("internal error: {e}\n")))?;
            let output = match mode {
                OutputMode::Json => to_json(&DecideJson {
                    n,
                    m,
                    k,
                    status: v.status,
                    rule: v.rule,
                }),
                OutputMode::Table => format!("K_{{{n},{m}}}  k = {k}  {}  ({})\n", v.status, v.rule),
            };
            Ok(Outcome::new(EXIT_OK, output))
        }
        &Command::Spectrum { n, m, k_max } => {
            positive(&[("n", n), ("m", m)])?;
            let k_max = k_max.unwrap_or(n + m);
            positive(&[("k_max", k_max)])?;
            let report = criteria::spectrum(n, m, k_max)
                .map_err(|e| Outcome::new(EXIT_USAGE, format!("internal error: {e}\n")))?;
            let output = match mode {
                OutputMode::Json => to_json(&report),
                OutputMode::Table => report.to_table(),
            };
            Ok(Outcome::new(EXIT_OK, output))
        }
        Command::Color {
            assignment,
            algorithm,
            trace,
        } => {
            let l: KAssignment = read_json(assignment)?;
            let d = colorer::color(&l, *algorithm).map_err(Outcome::usage)?;
            if let Some(path) = trace {
                fs::write(path, d.trace.to_json_lines())
                    .map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
            }
            let Some(coloring) = d.coloring else {
                let output = match mode {
                    OutputMode::Json => to_json(&ColorJson {
                        algorithm: d.algorithm,
                        coloring: None,
                        check: None,
                    }),
                    OutputMode::Table => "no equitable L-coloring exists\n".to_string(),
                };
                return Ok(Outcome::new(EXIT_FAILED, output));
            };
            let report = check_equitable(&l, &coloring).map_err(Outcome::usage)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAILED };
            let output = match mode {
                OutputMode::Json => to_json(&ColorJson {
                    algorithm: d.algorithm,
                    coloring: Some(coloring),
                    check: Some(report),
                }),
                OutputMode::Table => {
                    let mut out = format!("algorithm: {}\n", d.algorithm);
                    for (i, c) in coloring.colors_uprime.iter().enumerate() {
                        let _ = writeln!(out, "u_{} -> {c}", i + 1);
                    }
                    for (i, c) in coloring.colors_a.iter().enumerate() {
                        let _ = writeln!(out, "v_{} -> {c}", i + 1);
                    }
                    out + &render_check(&report)
                }
            };
            Ok(Outcome::new(code, output))
        }
        Command::Verify { assignment, coloring } => {
            let l: KAssignment = read_json(assignment)?;
            let f: Coloring = read_json(coloring)?;
            let report = check_equitable(&l, &f).map_err(Outcome::usage)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAILED };
            let output = match mode {
                OutputMode::Json => to_json(&report),
                OutputMode::Table => render_check(&report),
            };
            Ok(Outcome::new(code, output))
        }
        &Command::OracleDecide {
            n,
            m,
            k,
            universe,
            budget,
            jobs,
        } => {
            let config = DecideConfig {
                universe_size: universe,
                budget,
                parallelism: Parallelism::from_jobs(jobs),
            };
            match oracle::decide_choosable(n, m, k, &config) {
                Ok(v) => {
                    let output = match mode {
                        OutputMode::Json => to_json(&v),
                        OutputMode::Table => {
                            let status = match v.status {
                                OracleStatus::Choosable => "CHOOSABLE",
                                OracleStatus::NotChoosable => "NOT_CHOOSABLE",
                            };
                            let mut out = format!(
                                "K_{{{n},{m}}}  k = {k}  {status}\nassignments examined: {}\ncolorings examined: {}\n",
                                v.assignments_examined, v.colorings_examined
                            );
                            if let Some(w) = &v.witness {
                                let _ = writeln!(out, "witness: {}", serde_json::to_string(w).expect("serializes"));
                            }
                            out
                        }
                    };
                    Ok(Outcome::new(EXIT_OK, output))
                }
                Err(e @ OracleError::BudgetExceeded { .. }) => Err(Outcome::new(EXIT_BUDGET, format!("error: {e}\n"))),
                Err(e) => Err(Outcome::usage(e)),
            }
        }
        &Command::Counterexample { n, m, k } => {
            let l = oracle::badk_counterexample(n, m, k).map_err(Outcome::usage)?;
            Ok(Outcome::new(EXIT_OK, to_json(&l)))
        }
    }
}
