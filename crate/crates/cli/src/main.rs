//! `qsymp`: command-line front end for the symplectic code toolkit.
//!
//! Exit codes: 0 all checks pass, 1 some identity failed, 2 resource budget
//! exceeded, 3 input error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qsymp::{Budget, Error, DEFAULT_BUDGET};
use serde_json::json;

use crate::input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "qsymp", version, about = "Symplectic analysis of quantum codes over prime fields")]
pub struct Cli {
    /// Upper bound on enumeration steps
    #[arg(long, global = true, env = "QSYMP_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Code,
    Radical,
    SPrime,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Pauli,
    Matrix,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Read a code and echo it in canonical form with its parameters
    Import(InputArgs),
    /// Parameters, invariants, enumerators and bound checks
    Analyze(InputArgs),
    /// Profiles and generalized weights
    Invariants(InputArgs),
    /// Weight distribution, binomial moments and both enumerators
    Enumerator(InputArgs),
    /// Binomial moments of the code and its dual
    Moments {
        #[command(flatten)]
        input: InputArgs,
        /// Also run the MacWilliams duality checks
        #[arg(long)]
        check_macwilliams: bool,
    },
    /// Puncture and shorten on an anticode and its complement
    Puncture {
        #[command(flatten)]
        input: InputArgs,
        /// Factors of the anticode, 1-based and comma separated
        #[arg(long)]
        support: String,
        /// Subspace to puncture
        #[arg(long, value_enum, default_value_t = Target::Code)]
        of: Target,
    },
    /// Run the seeded verification suites
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// fixtures, identities, stabilizer, transforms, oracle, bounds or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a code as JSON, Pauli strings or matrix text
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "to", value_enum, default_value_t = ExportFormat::Json)]
        to: ExportFormat,
    },
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Pass,
    Fail,
}

fn error_exit(e: &Error) -> ExitCode {
    let (code, kind) = match e {
        Error::BudgetExceeded { .. } => (2, "budget"),
        _ => (3, "input"),
    };
    let mut detail = json!({ "error": kind, "message": e.to_string() });
    if let Error::BudgetExceeded { needed, budget } = e {
        detail["needed"] = json!(needed.to_string());
        detail["budget"] = json!(budget);
    }
    println!("{}", serde_json::to_string_pretty(&detail).expect("json value"));
    eprintln!("qsymp: {e}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    match commands::run(&cli, Budget(cli.budget)) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => error_exit(&e),
    }
}
