use serde_json::{json, Value};
use trigsum::verify::VerificationReport;

/// C's `%.17g`: 17 significant digits, fixed notation for exponents in
/// `[-4, 17)`, trailing zeros dropped.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_zeros(mantissa.to_string()),
            exp.abs()
        )
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn g17_opt(x: Option<f64>) -> String {
    x.map(g17).unwrap_or_default()
}

/// One flat JSON object per report.
pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "family": r.spec.family.name(),
        "n": r.spec.n,
        "d": r.spec.d,
        "m": r.spec.m,
        "b": r.spec.b,
        "b2": r.spec.b2,
        "closed_form": r.closed_form,
        "oracle": r.oracle,
        "residue": r.residue,
        "abs_err": r.abs_err,
        "rel_err": r.rel_err,
        "conditioning": r.conditioning,
        "rounding_floor": r.rounding_floor,
        "status": r.status.as_str(),
        "error": r.error,
    })
}
