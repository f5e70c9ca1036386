//! Printed closed forms and the multi-index theorem formulas.

mod corollary;
mod params;
mod theorem;
mod triple;

pub use corollary::{corollary_value, double_range_cot_sum, tangent_sum};
pub use params::{
    validate_params, EvalPath, Factor, Family, FamilyGroup, Outer, SumSpec, SumValue,
    UnknownFamily, EXCLUSION_EPS,
};
pub use theorem::{
    interior_residue_multi_index, theorem_sum, CoefficientKind, TheoremShape, IMAG_ERROR_TOL,
};
pub use triple::triple_product_sum;

use crate::error::Result;

/// The closed-form route for any family: the printed corollary at `n = 1`,
/// the multi-index formula for higher powers, and the dedicated closed forms
/// for the tangent, `2d`-range and triple-product families.
pub fn evaluate(spec: &SumSpec) -> Result<SumValue> {
    match spec.family.group() {
        FamilyGroup::Theorem if spec.n == 1 => corollary_value(spec),
        FamilyGroup::Theorem => theorem_sum(spec),
        FamilyGroup::Tangent => tangent_sum(spec),
        FamilyGroup::DoubleRange => double_range_cot_sum(spec),
        FamilyGroup::Triple => triple_product_sum(spec),
    }
}
