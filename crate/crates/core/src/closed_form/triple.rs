//! Closed forms for sums of three-factor products.

use super::corollary::{cos_cot_block, cos_tan_block, sin_cot_block, sin_tan_block};
use super::params::{validate_params, EvalPath, Family, FamilyGroup, SumSpec, SumValue};
use crate::error::{Error, Result};
use crate::trig::{cos_pi, csc_pi, sec_pi, sin_pi};

pub fn triple_product_sum(spec: &SumSpec) -> Result<SumValue> {
    let spec = validate_params(spec)?;
    if spec.family.group() != FamilyGroup::Triple {
        return Err(Error::UnsupportedFamily {
            family: spec.family.name(),
            path: "triple-product",
        });
    }
    let (m, d) = (spec.m, spec.d);
    let b1 = spec.b;
    let b2 = spec.second_shift()?;
    // cross-factor arguments, in units of π
    let shift_full = 1.0 + (b2 - b1);
    let shift_full_rev = 1.0 + (b1 - b2);
    let shift_half = 0.5 + (b2 - b1);
    let shift_half_rev = 0.5 + (b1 - b2);

    let value = match spec.family {
        Family::CosCscCos => -cos_cot_block(m, d, b1) * cos_pi(shift_full),
        Family::CosCscSin => -cos_cot_block(m, d, b1) * sin_pi(shift_full),
        Family::CosSecCos => cos_tan_block(m, d, b1) * cos_pi(shift_half),
        Family::CosSecSin => cos_tan_block(m, d, b1) * sin_pi(shift_half),
        Family::SinCscCos => sin_cot_block(m, d, b1) * cos_pi(shift_full),
        Family::SinCscSin => sin_cot_block(m, d, b1) * sin_pi(shift_full),
        Family::SinSecCos => sin_tan_block(m, d, b1) * cos_pi(shift_half),
        Family::SinSecSin => sin_tan_block(m, d, b1) * sin_pi(shift_half),
        Family::CosCscCsc => {
            -cos_cot_block(m, d, b1) * csc_pi(shift_full)
                - cos_cot_block(m, d, b2) * csc_pi(shift_full_rev)
        }
        Family::CosCscSec => {
            -cos_cot_block(m, d, b1) * sec_pi(shift_full)
                + cos_tan_block(m, d, b2) * csc_pi(shift_half_rev)
        }
        Family::CosSecSec => {
            cos_tan_block(m, d, b1) * sec_pi(shift_half)
                + cos_tan_block(m, d, b2) * sec_pi(shift_half_rev)
        }
        Family::SinCscCsc => {
            sin_cot_block(m, d, b1) * csc_pi(shift_full)
                + sin_cot_block(m, d, b2) * csc_pi(shift_full_rev)
        }
        Family::SinCscSec => {
            sin_cot_block(m, d, b1) * sec_pi(shift_full)
                + sin_tan_block(m, d, b2) * csc_pi(shift_half_rev)
        }
        // printed with j starting at 0; that term carries sin(0) = 0
        Family::SinSecSec => {
            sin_tan_block(m, d, b1) * sec_pi(shift_half)
                + sin_tan_block(m, d, b2) * sec_pi(shift_half_rev)
        }
        _ => unreachable!("group checked above"),
    };
    Ok(SumValue::real(value, EvalPath::ClosedForm))
}
