use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use equindex::{cmd_chern, cmd_conserve, cmd_index, cmd_validate, Settings};

/// Equivariant GSV-indices and Chern obstructions of 1-form collections.
#[derive(Parser)]
#[command(name = "equindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a problem document and print the validation report.
    Validate(CommonArgs),
    /// Compute the index of the collection at the origin.
    Index(CommonArgs),
    /// Compute the Chern obstruction against generic linear collections.
    Chern(CommonArgs),
    /// Compare the local index with the global count after a deformation.
    Conserve(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Problem document (JSON).
    file: PathBuf,
    /// Cross-check the index with the Macaulay truncation oracle.
    #[arg(long)]
    oracle: bool,
    /// Emit a machine-readable JSON report.
    #[arg(long)]
    json: bool,
    /// Seed for generic samples and constant shifts.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Deformation parameter as p/q.
    #[arg(long, default_value = "1/10", allow_hyphen_values = true)]
    epsilon: String,
    /// Largest truncation degree tried by the oracle.
    #[arg(long = "max-degree", default_value_t = equindex_core::oracle::DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Limit on reduction steps per standard-basis computation.
    #[arg(long, default_value_t = equindex_core::local_algebra::DEFAULT_STEP_BUDGET)]
    budget: u64,
}

impl CommonArgs {
    fn settings(&self) -> Settings {
        Settings {
            oracle: self.oracle,
            json: self.json,
            seed: self.seed,
            epsilon: self.epsilon.clone(),
            max_degree: self.max_degree,
            budget: self.budget,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate(a) => cmd_validate(&a.file, &a.settings()),
        Command::Index(a) => cmd_index(&a.file, &a.settings()),
        Command::Chern(a) => cmd_chern(&a.file, &a.settings()),
        Command::Conserve(a) => cmd_conserve(&a.file, &a.settings()),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
