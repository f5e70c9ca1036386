//! `trigsum`: evaluate, verify and tabulate finite trigonometric sums.

mod coeffs;
mod eval;
mod exit;
mod format;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    version,
    about = "Finite trigonometric sums: closed forms, direct summation and residues"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one sum.
    Eval(eval::EvalArgs),
    /// Compare evaluation paths over a parameter grid.
    Verify(verify::VerifyArgs),
    /// Write a CSV table of all paths over a parameter grid.
    Table(table::TableArgs),
    /// List exact Bernoulli, cotangent or cosecant coefficients.
    Coeffs(coeffs::CoeffsArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(args) => eval::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Table(args) => table::run(&args),
        Command::Coeffs(args) => coeffs::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
