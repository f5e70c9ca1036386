//! `n = 1` closed forms, the tangent variants and the `2d`-range variants.

use super::params::{validate_params, EvalPath, Family, FamilyGroup, SumSpec, SumValue};
use crate::error::{Error, Result};
use crate::trig::{cos_pi, csc_pi, sec_pi, sin_pi};

pub(crate) fn neg_one_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `d cos[(2m-d)bπ] cosec(bdπ)`.
pub(crate) fn cos_cot_block(m: u32, d: u32, b: f64) -> f64 {
    let (m, d) = (m as f64, d as f64);
    d * cos_pi((2.0 * m - d) * b) * csc_pi(b * d)
}

/// `d sin[(2m-d)bπ] cosec(bdπ)`.
pub(crate) fn sin_cot_block(m: u32, d: u32, b: f64) -> f64 {
    let (m, d) = (m as f64, d as f64);
    d * sin_pi((2.0 * m - d) * b) * csc_pi(b * d)
}

/// Right-hand side of the cosine-tangent sum, branching on the parity of `d`.
pub(crate) fn cos_tan_block(m: u32, d: u32, b: f64) -> f64 {
    let (mi, di) = (m as i64, d as i64);
    if d.is_multiple_of(2) {
        neg_one_pow(mi + 1) * cos_cot_block(m, d, b)
    } else {
        let (m, d) = (m as f64, d as f64);
        neg_one_pow(mi - di) * d * sin_pi((2.0 * m - d) * b) * sec_pi(b * d)
    }
}

/// Right-hand side of the sine-tangent sum, branching on the parity of `d`.
pub(crate) fn sin_tan_block(m: u32, d: u32, b: f64) -> f64 {
    let (mi, di) = (m as i64, d as i64);
    if d.is_multiple_of(2) {
        neg_one_pow(mi) * sin_cot_block(m, d, b)
    } else {
        let (m, d) = (m as f64, d as f64);
        neg_one_pow(mi - di) * d * cos_pi((2.0 * m - d) * b) * sec_pi(b * d)
    }
}

/// The `n = 1` closed form for the six power families.
pub fn corollary_value(spec: &SumSpec) -> Result<SumValue> {
    let spec = validate_params(spec)?;
    if spec.family.group() != FamilyGroup::Theorem {
        return Err(Error::UnsupportedFamily {
            family: spec.family.name(),
            path: "corollary",
        });
    }
    if spec.n != 1 {
        return Err(Error::InvalidPower {
            n: spec.n,
            reason: "corollary closed forms need n = 1",
        });
    }
    let (m, d, b) = (spec.m, spec.d, spec.b);
    let (mf, df) = (m as f64, d as f64);
    let value = match spec.family {
        Family::CosCot => cos_cot_block(m, d, b),
        Family::SinCot if spec.is_classical() => df - 2.0 * mf,
        Family::SinCot => -sin_cot_block(m, d, b),
        Family::SinCsc2n => {
            let c = csc_pi((b - 1.0) * df);
            df * c
                * c
                * (mf * sin_pi(2.0 * (b - 1.0) * (df - mf))
                    - (df - mf) * sin_pi(2.0 * (b - 1.0) * mf))
        }
        Family::CosCsc2n => {
            let c = csc_pi((b - 1.0) * df);
            df * c
                * c
                * (mf * cos_pi(2.0 * (b - 1.0) * (df - mf))
                    + (df - mf) * cos_pi(2.0 * (b - 1.0) * mf))
        }
        Family::SinCscOdd => -df * sin_pi((mf - df) * b) * csc_pi(df * b),
        Family::CosCscOdd => df * cos_pi((mf - df) * b) * csc_pi(df * b),
        _ => unreachable!("group checked above"),
    };
    Ok(SumValue::real(value, EvalPath::ClosedForm))
}

pub fn tangent_sum(spec: &SumSpec) -> Result<SumValue> {
    let spec = validate_params(spec)?;
    let value = match spec.family {
        Family::CosTan => cos_tan_block(spec.m, spec.d, spec.b),
        Family::SinTan => sin_tan_block(spec.m, spec.d, spec.b),
        other => {
            return Err(Error::UnsupportedFamily {
                family: other.name(),
                path: "tangent",
            })
        }
    };
    Ok(SumValue::real(value, EvalPath::ClosedForm))
}

pub fn double_range_cot_sum(spec: &SumSpec) -> Result<SumValue> {
    let spec = validate_params(spec)?;
    let (m, d, b) = (spec.m as f64, spec.d as f64, spec.b);
    let value = match spec.family {
        Family::CosCot2d => 2.0 * d * cos_pi((2.0 * m - d) * 2.0 * b) * csc_pi(2.0 * b * d),
        Family::SinCot2d => -2.0 * d * sin_pi((2.0 * m - d) * 2.0 * b) * csc_pi(2.0 * b * d),
        other => {
            return Err(Error::UnsupportedFamily {
                family: other.name(),
                path: "double-range",
            })
        }
    };
    Ok(SumValue::real(value, EvalPath::ClosedForm))
}
