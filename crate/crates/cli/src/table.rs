use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::Args;
use trigsum::verify::{PathSet, VerificationReport};

use crate::exit::CliError;
use crate::format::{g17, g17_opt};
use crate::verify::{sweep, GridArgs, TOL_ENV};

pub const HEADER: [&str; 13] = [
    "family",
    "n",
    "d",
    "m",
    "b",
    "b2",
    "closed_form",
    "oracle",
    "residue",
    "abs_err",
    "rel_err",
    "conditioning",
    "status",
];

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Tolerance deciding the status column.
    #[arg(long, env = TOL_ENV, default_value_t = 1e-8)]
    pub tol: f64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn row(r: &VerificationReport) -> [String; 13] {
    let s = &r.spec;
    [
        s.family.name().to_string(),
        s.n.to_string(),
        s.d.to_string(),
        s.m.to_string(),
        g17(s.b),
        g17_opt(s.b2),
        g17_opt(r.closed_form),
        g17_opt(r.oracle),
        g17_opt(r.residue),
        g17_opt(r.abs_err),
        g17_opt(r.rel_err),
        g17(r.conditioning),
        r.status.as_str().to_string(),
    ]
}

fn write_table<W: Write>(sink: W, reports: &[VerificationReport]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(HEADER)?;
    for r in reports {
        w.write_record(row(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(args: &TableArgs) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    let reports = sweep(&grid, PathSet::ALL, args.tol);
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                CliError::Internal(format!("cannot create {}: {e}", path.display()))
            })?;
            write_table(file, &reports)
        }
        None => write_table(io::stdout().lock(), &reports),
    }
}
