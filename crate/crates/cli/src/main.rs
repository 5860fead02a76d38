//! `kronecker`: construct seeds, profile σ-orbits, verify orbit laws and
//! print R_b tables.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::Flags;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or input; exit code 2.
    Usage(String),
    /// The computation ran but something failed; exit code 1.
    Failure(String),
}

#[derive(Parser)]
#[command(name = "kronecker", version, about = "Shift-functor orbits of graded Kronecker modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a module and write it as JSON
    Construct(Flags),
    /// Profile a window of the σ-orbit of a seed
    Orbit(Flags),
    /// Check the orbit laws on a seed, a construction or the whole fixture battery
    Verify(Flags),
    /// Print R_b(i, l) on both components
    RbTable(Flags),
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Construct(f) => commands::cmd_construct(&config::resolve(&f)?).map(|_| true),
        Command::Orbit(f) => commands::cmd_orbit(&config::resolve(&f)?).map(|_| true),
        Command::Verify(f) => commands::cmd_verify(&config::resolve(&f)?),
        Command::RbTable(f) => commands::cmd_rb_table(&config::resolve(&f)?).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
