use clap::{Args, ValueEnum};
use trigsum::coefficients::{CoefficientTable, DEFAULT_COEFF_CAP};

use crate::exit::CliError;

pub const CAP_ENV: &str = "TRIGSUM_COEFF_CAP";

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    /// `B_j`
    Bernoulli,
    /// `C_j` of the cotangent expansion
    Cot,
    /// `G_j` of the cosecant expansion
    Csc,
}

#[derive(Args, Debug)]
pub struct CoeffsArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Number of coefficients, starting at index 0.
    #[arg(long)]
    pub count: usize,
}

fn cap_from_env() -> Result<usize, CliError> {
    match std::env::var(CAP_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{CAP_ENV} must be a non-negative integer, got `{raw}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_COEFF_CAP),
    }
}

pub fn run(args: &CoeffsArgs) -> Result<(), CliError> {
    let cap = cap_from_env()?;
    if args.count > cap {
        return Err(CliError::Usage(format!(
            "count {} exceeds coefficient cap {cap} (set {CAP_ENV} to raise it)",
            args.count
        )));
    }
    let table = CoefficientTable::with_cap(cap);
    for j in 0..args.count {
        let value = match args.kind {
            Kind::Bernoulli => table.bernoulli(j)?,
            Kind::Cot => table.cot_coeff(j)?,
            Kind::Csc => table.csc_coeff(j)?,
        };
        println!("{j},{},{}", value.numer(), value.denom());
    }
    Ok(())
}
