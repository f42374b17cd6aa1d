//! `dsaudit`: combine evidence exactly and audit it against probability.
//!
//! Exit codes: 0 ok, 1 reference fixture mismatch, 2 input error,
//! 3 total conflict, 4 inconsistency detected, 5 infeasible constraints.

mod audit;
mod combine;
mod failure;
mod input;
mod measures;
mod output;
mod repro;
mod sweep;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dsaudit::Family;

use crate::failure::Failure;
use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "dsaudit", version, about = "Exact Dempster-Shafer combination, audited against probability")]
struct Cli {
    #[command(flatten)]
    options: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct Options {
    /// Evidence file (JSON). `-` reads standard input.
    #[arg(long, short, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Output format [default: table, or csv for `sweep`].
    #[arg(long, short, global = true, value_enum)]
    pub format: Option<Format>,

    /// measures: list every subset of the frame.
    #[arg(long, global = true)]
    pub all: bool,

    /// measures: recover the masses from belief and from plausibility and
    /// check that they match.
    #[arg(long, global = true)]
    pub invert: bool,

    /// sweep: grid density N; parameters run over i/N.
    #[arg(long, global = true, value_name = "N", default_value_t = 12)]
    pub grid: u32,

    /// sweep: xbar values for the quasi-partition family, as comma-separated
    /// fractions, or `all` for every grid value [default: 0,1/4,1/2,3/4,1].
    #[arg(long, global = true, value_name = "LIST")]
    pub xbar_slices: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Combine bodies with Dempster's rule.
    Combine {
        /// Bodies to combine, folded left to right [default: all, by name].
        bodies: Vec<String>,
    },
    /// Belief and plausibility of one body, or of several combined.
    Measures {
        /// Bodies to evaluate; several are combined first [default: all].
        bodies: Vec<String>,
        /// Subset to evaluate, e.g. `a,b`, `{a,b}`, `{}` or `omega`. Repeatable.
        #[arg(long = "subset", short, value_name = "SET")]
        subsets: Vec<String>,
    },
    /// Compare combined belief intervals with the probability intervals
    /// implied by the input bodies.
    Audit {
        /// Bodies to audit (at least two) [default: all].
        bodies: Vec<String>,
    },
    /// Audit every grid point of a parametric family.
    Sweep {
        /// `partition-xy` or `quasi-xxbar-y`.
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Write to this file instead of standard output.
        #[arg(long, short, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run the built-in reference fixtures and compare with their known
    /// exact outcomes.
    PaperRepro,
}

fn parse_family(name: &str) -> Result<Family, String> {
    Family::from_name(name).ok_or_else(|| format!("unknown family `{name}`; use partition-xy or quasi-xxbar-y"))
}

/// Text for standard output plus the exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let opts = &cli.options;
    let format = opts.format.unwrap_or(Format::Table);
    match cli.command {
        Command::Combine { bodies } => combine::run(opts, &bodies, format),
        Command::Measures { bodies, subsets } => measures::run(opts, &bodies, &subsets, format),
        Command::Audit { bodies } => audit::run(opts, &bodies, format),
        Command::Sweep { family, output } => {
            sweep::run(opts, family, output.as_deref(), opts.format.unwrap_or(Format::Csv))
        }
        Command::PaperRepro => Ok(repro::run(format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(failure::INPUT);
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
