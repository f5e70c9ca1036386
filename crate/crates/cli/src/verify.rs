use clap::{Args, ValueEnum};
use rayon::prelude::*;
use trigsum::closed_form::Family;
use trigsum::verify::{verify_spec, worst_offender, GridSpec, PathSet, VerificationReport};

use crate::exit::CliError;
use crate::format::{g17, g17_opt, report_json};

pub const MAX_D: u32 = 200;
pub const TOL_ENV: &str = "TRIGSUM_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathName {
    #[value(alias = "closed-form")]
    Closed,
    #[value(alias = "direct")]
    Oracle,
    Residue,
}

/// Grid bounds shared by `verify` and `table`.
#[derive(Args, Debug)]
pub struct GridArgs {
    /// Family name, or `all`.
    #[arg(long, default_value = "all")]
    pub family: String,
    /// Largest modulus d (at most 200).
    #[arg(long, default_value_t = 10)]
    pub dmax: u32,
    /// Largest power n for families with a free power.
    #[arg(long, default_value_t = 1)]
    pub nmax: u32,
    /// Shift list replacing the default offsets.
    #[arg(long = "b", value_delimiter = ',', allow_negative_numbers = true)]
    pub offsets: Vec<f64>,
}

impl GridArgs {
    pub fn grid(&self) -> Result<GridSpec, CliError> {
        let families = if self.family == "all" {
            Family::ALL.to_vec()
        } else {
            vec![self
                .family
                .parse::<Family>()
                .map_err(|e| CliError::Usage(e.to_string()))?]
        };
        if self.dmax < 2 {
            return Err(CliError::Usage(format!(
                "empty grid: dmax = {} leaves no modulus d >= 2",
                self.dmax
            )));
        }
        if self.dmax > MAX_D {
            return Err(CliError::Usage(format!("dmax must be at most {MAX_D}")));
        }
        if self.nmax == 0 {
            return Err(CliError::Usage(
                "empty grid: nmax must be at least 1".into(),
            ));
        }
        if self.offsets.iter().any(|b| !b.is_finite()) {
            return Err(CliError::Usage("shift offsets must be finite".into()));
        }
        let mut grid = GridSpec::new(families, self.dmax, self.nmax);
        if !self.offsets.is_empty() {
            grid.offsets = Some(self.offsets.clone());
        }
        Ok(grid)
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    /// Relative tolerance for every pairwise comparison.
    #[arg(long, env = TOL_ENV, default_value_t = 1e-8)]
    pub tol: f64,
    /// Paths to compare, at least two.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "closed,oracle,residue"
    )]
    pub paths: Vec<PathName>,
    /// Emit every report as a JSON line on stdout.
    #[arg(long)]
    pub json: bool,
}

pub fn path_set(names: &[PathName]) -> PathSet {
    PathSet {
        closed: names.contains(&PathName::Closed),
        oracle: names.contains(&PathName::Oracle),
        residue: names.contains(&PathName::Residue),
    }
}

/// Evaluate a grid in parallel; rows come back in grid order.
pub fn sweep(grid: &GridSpec, paths: PathSet, tol: f64) -> Vec<VerificationReport> {
    trigsum::verify::grid(grid)
        .par_iter()
        .map(|spec| verify_spec(spec, paths, tol))
        .collect()
}

fn describe(r: &VerificationReport) -> String {
    let s = &r.spec;
    let mut out = format!("{} n={} d={} m={} b={}", s.family, s.n, s.d, s.m, g17(s.b));
    if let Some(b2) = s.b2 {
        out.push_str(&format!(" b2={}", g17(b2)));
    }
    out.push_str(&format!(" rel_err={}", g17_opt(r.rel_err)));
    if let Some(e) = &r.error {
        out.push_str(&format!(" error=\"{e}\""));
    }
    out
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    if args.tol.is_nan() || args.tol < 0.0 {
        return Err(CliError::Usage(format!(
            "tolerance must be non-negative, got {}",
            args.tol
        )));
    }
    let paths = path_set(&args.paths);
    if paths.count() < 2 {
        return Err(CliError::Usage(
            "select at least two paths to compare".into(),
        ));
    }
    let reports = sweep(&grid, paths, args.tol);
    if reports.is_empty() {
        return Err(CliError::Usage(
            "empty grid: no valid parameter points".into(),
        ));
    }

    if args.json {
        for r in &reports {
            println!("{}", report_json(r));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let worst_rel = reports
        .iter()
        .filter_map(|r| r.rel_err)
        .fold(0.0f64, f64::max);
    let summary = format!(
        "{} cases, {} passed, {} failed; worst rel_err {} (tol {})",
        reports.len(),
        reports.len() - failed,
        failed,
        g17(worst_rel),
        g17(args.tol)
    );
    if args.json {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    match worst_offender(&reports) {
        None => Ok(()),
        Some(worst) => Err(CliError::Verification(format!(
            "{failed} comparisons failed; worst offender: {}",
            describe(worst)
        ))),
    }
}
