//! `bend`: evaluate bending bounds, emit figure/table data, run verification
//! campaigns, and compute lamination norms from files.
//!
//! Exit codes: 0 all checks pass, 1 mathematical violation detected,
//! 2 usage or domain error, 3 I/O error.

mod commands;
mod format;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bend", version, about = "Hyperbolic bending-bound toolkit", propagate_version = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bound function and print the value with its branch tag.
    Eval(EvalArgs),
    /// Emit CSV data for a bound function over its full domain.
    Table(TableArgs),
    /// Run a verification campaign and emit a JSON report.
    Verify(VerifyArgs),
    /// Compute the length-limited norm of a lamination file.
    Lamination(LaminationArgs),
}

#[derive(Args)]
pub struct EvalArgs {
    /// Bound to evaluate: bL, cL, r, aw, teich or fbcy.
    #[arg(long)]
    kind: String,
    #[arg(long = "L")]
    l: Option<f64>,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long = "dT")]
    d_t: Option<f64>,
}

#[derive(Args)]
pub struct TableArgs {
    /// Tabulated bound; only bL is supported.
    #[arg(long, default_value = "bL")]
    kind: String,
    #[arg(long = "L")]
    l: f64,
    /// Number of rows, uniform in x over [0, sech(L)/2].
    #[arg(long, default_value_t = 400)]
    samples: usize,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Output format; only csv is supported.
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Campaign: halfplane-lemma, area-lemma, bers-kernel, wedge or trig.
    target: String,
    #[arg(long = "L")]
    l: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Output format; only json is supported.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
pub struct LaminationArgs {
    /// Lamination JSON file: {"leaves": [{"endpoints": [a, b], "weight": w}]}.
    #[arg(long)]
    input: std::path::PathBuf,
    #[arg(long = "L")]
    l: f64,
}

/// Command outcomes carrying the documented exit codes.
pub enum CliError {
    /// Usage or domain error (exit 2).
    Usage(String),
    /// A verification campaign observed violations (exit 1).
    Violation(String),
    /// Filesystem failure (exit 3).
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Violation(m) | CliError::Io(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => commands::eval(&args),
        Command::Table(args) => commands::table(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Lamination(args) => commands::lamination(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
