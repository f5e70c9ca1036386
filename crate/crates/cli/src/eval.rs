use clap::Args;
use serde_json::json;
use trigsum::closed_form::{evaluate, validate_params, Family, SumSpec};
use trigsum::oracle::{conditioning, direct_sum};
use trigsum::residue::{sum_via_residues, IntegrandDescriptor};

use crate::exit::CliError;
use crate::format::g17;

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Sum family, e.g. cos-cot, sin-csc2n, cos-csc-cos.
    #[arg(long)]
    pub family: Family,
    /// Power of the singular factor.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Modulus d, at least 2
    #[arg(long)]
    pub d: u32,
    /// Frequency m, with 1 ≤ m < d
    #[arg(long)]
    pub m: u32,
    /// Shift of the singular factor.
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
    /// Second shift, for product families.
    #[arg(long, allow_negative_numbers = true)]
    pub b2: Option<f64>,
    /// Also evaluate by direct summation and by residues.
    #[arg(long)]
    pub all_paths: bool,
    /// Print a single JSON object
    #[arg(long)]
    pub json: bool,
}

pub fn run(args: &EvalArgs) -> Result<(), CliError> {
    let mut spec = SumSpec::new(args.family, args.n, args.m, args.d, args.b);
    spec.b2 = args.b2;
    let spec = validate_params(&spec)?;
    let closed = evaluate(&spec)?;

    let (oracle, residue) = if args.all_paths {
        let oracle = direct_sum(&spec)?.value;
        let residue = if IntegrandDescriptor::supports(spec.family) && !spec.is_classical() {
            Some(sum_via_residues(&spec)?.value)
        } else {
            None
        };
        (Some(oracle), residue)
    } else {
        (None, None)
    };

    if args.json {
        let mut out = json!({
            "family": spec.family.name(),
            "n": spec.n,
            "d": spec.d,
            "m": spec.m,
            "b": spec.b,
            "b2": spec.b2,
            "value": closed.value,
            "imag_residual": closed.imag_residual,
        });
        if args.all_paths {
            let obj = out.as_object_mut().expect("object literal");
            obj.insert("oracle".into(), json!(oracle));
            obj.insert("residue".into(), json!(residue));
            obj.insert("conditioning".into(), json!(conditioning(&spec)));
        }
        println!("{out}");
    } else if args.all_paths {
        println!("closed_form {}", g17(closed.value));
        println!("oracle      {}", oracle.map(g17).unwrap_or_default());
        println!(
            "residue     {}",
            residue.map(g17).unwrap_or_else(|| "n/a".into())
        );
    } else {
        println!("{}", g17(closed.value));
    }
    Ok(())
}
