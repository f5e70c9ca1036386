use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trig::{dist_to_integer, dist_to_odd};

/// Minimum distance of a scaled shift from its excluded lattice.
pub const EXCLUSION_EPS: f64 = 1e-8;

/// Every implemented sum family.
///
/// Naming reads left to right as the factors of the summand: `CosCscSec` is
/// `Σ cos(2πmj/d) cosec(πj/d + πb₁) sec(πj/d + πb₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    CosCot,
    SinCot,
    SinCsc2n,
    CosCsc2n,
    SinCscOdd,
    CosCscOdd,
    CosTan,
    SinTan,
    CosCot2d,
    SinCot2d,
    CosCscCos,
    CosCscSin,
    CosSecCos,
    CosSecSin,
    SinCscCos,
    SinCscSin,
    SinSecCos,
    SinSecSin,
    CosCscCsc,
    CosCscSec,
    CosSecSec,
    SinCscCsc,
    SinCscSec,
    SinSecSec,
}

/// Outer factor `cos(2πmj/d)` / `sin(2πmj/d)` (or `πmj/d` for the odd
/// cosecant families).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outer {
    Cos,
    Sin,
}

/// Shifted factor `f(πj/d + πb)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Cot,
    Csc,
    Tan,
    Sec,
    Cos,
    Sin,
}

impl Factor {
    /// Poles of `f(πx)` sit at integers (`Some(0.0)`) or half-integers
    /// (`Some(0.5)`); entire factors have none.
    pub fn pole_offset(self) -> Option<f64> {
        match self {
            Factor::Cot | Factor::Csc => Some(0.0),
            Factor::Tan | Factor::Sec => Some(0.5),
            Factor::Cos | Factor::Sin => None,
        }
    }
}

/// Which closed-form route evaluates a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyGroup {
    Theorem,
    Tangent,
    DoubleRange,
    Triple,
}

impl Family {
    pub const ALL: [Family; 24] = [
        Family::CosCot,
        Family::SinCot,
        Family::SinCsc2n,
        Family::CosCsc2n,
        Family::SinCscOdd,
        Family::CosCscOdd,
        Family::CosTan,
        Family::SinTan,
        Family::CosCot2d,
        Family::SinCot2d,
        Family::CosCscCos,
        Family::CosCscSin,
        Family::CosSecCos,
        Family::CosSecSin,
        Family::SinCscCos,
        Family::SinCscSin,
        Family::SinSecCos,
        Family::SinSecSin,
        Family::CosCscCsc,
        Family::CosCscSec,
        Family::CosSecSec,
        Family::SinCscCsc,
        Family::SinCscSec,
        Family::SinSecSec,
    ];

    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            CosCot => "cos-cot",
            SinCot => "sin-cot",
            SinCsc2n => "sin-csc2n",
            CosCsc2n => "cos-csc2n",
            SinCscOdd => "sin-csc-odd",
            CosCscOdd => "cos-csc-odd",
            CosTan => "cos-tan",
            SinTan => "sin-tan",
            CosCot2d => "cos-cot2d",
            SinCot2d => "sin-cot2d",
            CosCscCos => "cos-csc-cos",
            CosCscSin => "cos-csc-sin",
            CosSecCos => "cos-sec-cos",
            CosSecSin => "cos-sec-sin",
            SinCscCos => "sin-csc-cos",
            SinCscSin => "sin-csc-sin",
            SinSecCos => "sin-sec-cos",
            SinSecSin => "sin-sec-sin",
            CosCscCsc => "cos-csc-csc",
            CosCscSec => "cos-csc-sec",
            CosSecSec => "cos-sec-sec",
            SinCscCsc => "sin-csc-csc",
            SinCscSec => "sin-csc-sec",
            SinSecSec => "sin-sec-sec",
        }
    }

    pub fn group(self) -> FamilyGroup {
        use Family::*;
        match self {
            CosCot | SinCot | SinCsc2n | CosCsc2n | SinCscOdd | CosCscOdd => FamilyGroup::Theorem,
            CosTan | SinTan => FamilyGroup::Tangent,
            CosCot2d | SinCot2d => FamilyGroup::DoubleRange,
            _ => FamilyGroup::Triple,
        }
    }

    pub fn outer(self) -> Outer {
        if self.name().starts_with("cos") {
            Outer::Cos
        } else {
            Outer::Sin
        }
    }

    /// Odd cosecant powers use `πmj/d` in the outer factor and need odd `m`.
    pub fn is_odd_cosecant(self) -> bool {
        matches!(self, Family::SinCscOdd | Family::CosCscOdd)
    }

    pub fn first_factor(self) -> Factor {
        use Family::*;
        match self {
            CosCot | SinCot | CosCot2d | SinCot2d => Factor::Cot,
            CosTan | SinTan => Factor::Tan,
            CosSecCos | CosSecSin | SinSecCos | SinSecSin | CosSecSec | SinSecSec => Factor::Sec,
            _ => Factor::Csc,
        }
    }

    pub fn second_factor(self) -> Option<Factor> {
        use Family::*;
        match self {
            CosCscCos | CosSecCos | SinCscCos | SinSecCos => Some(Factor::Cos),
            CosCscSin | CosSecSin | SinCscSin | SinSecSin => Some(Factor::Sin),
            CosCscCsc | SinCscCsc => Some(Factor::Csc),
            CosCscSec | SinCscSec | CosSecSec | SinSecSec => Some(Factor::Sec),
            _ => None,
        }
    }

    pub fn needs_second_shift(self) -> bool {
        self.group() == FamilyGroup::Triple
    }

    /// Power carried by the first factor for a given `n`.
    pub fn power(self, n: u32) -> u32 {
        match self {
            Family::CosCot | Family::SinCot => n,
            Family::SinCsc2n | Family::CosCsc2n => 2 * n,
            Family::SinCscOdd | Family::CosCscOdd => 2 * n - 1,
            _ => 1,
        }
    }

    pub fn has_free_power(self) -> bool {
        self.group() == FamilyGroup::Theorem
    }

    /// First summation index as printed for the family.
    pub fn start_index(self) -> u32 {
        match (self.outer(), self) {
            (_, Family::SinSecSec) => 0,
            (Outer::Sin, _) => 1,
            (Outer::Cos, _) => 0,
        }
    }

    /// Number of lattice points `j` in `0..term_count(d)`.
    pub fn term_count(self, d: u32) -> u32 {
        if self.group() == FamilyGroup::DoubleRange {
            2 * d
        } else {
            d
        }
    }

    /// Spacing of the shifted arguments: `πj/d` or `πj/(2d)`.
    pub fn lattice(self, d: u32) -> u32 {
        self.term_count(d)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown family `{}`", self.0)
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// One sum instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumSpec {
    pub family: Family,
    pub n: u32,
    pub m: u32,
    pub d: u32,
    pub b: f64,
    pub b2: Option<f64>,
}

impl SumSpec {
    pub fn new(family: Family, n: u32, m: u32, d: u32, b: f64) -> Self {
        Self {
            family,
            n,
            m,
            d,
            b,
            b2: None,
        }
    }

    pub fn with_b2(mut self, b2: f64) -> Self {
        self.b2 = Some(b2);
        self
    }

    /// The second shift, or an error for triple-product families without one.
    pub fn second_shift(&self) -> Result<f64> {
        self.b2.ok_or(Error::MissingSecondShift)
    }

    /// `b = 0` for `SinCot` at `n = 1`: the classical sum whose `j = 0` term
    /// is removable.
    pub fn is_classical(&self) -> bool {
        self.family == Family::SinCot && self.n == 1 && self.b == 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalPath {
    ClosedForm,
    MultiIndex,
    Oracle,
    Residue,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumValue {
    pub value: f64,
    /// Magnitude of the discarded imaginary part.
    pub imag_residual: f64,
    pub path: EvalPath,
}

impl SumValue {
    pub fn real(value: f64, path: EvalPath) -> Self {
        Self {
            value,
            imag_residual: 0.0,
            path,
        }
    }
}

/// Distance of shift `b` from the singular set of `factor` on a lattice of
/// `lattice` points per unit: `ℤ/lattice` for cot/cosec, and for tan/sec
/// `ℤ/lattice` when `lattice` is even or `𝕆/2·lattice` when it is odd.
fn shift_distance(factor: Factor, b: f64, lattice: u32) -> Option<(f64, String)> {
    let scaled = b * lattice as f64;
    match factor {
        Factor::Cos | Factor::Sin => None,
        Factor::Cot | Factor::Csc => Some((
            dist_to_integer(scaled),
            format!("b·{lattice} = {scaled} must stay away from the integers (b ∉ ℤ/{lattice})"),
        )),
        Factor::Tan | Factor::Sec if lattice.is_multiple_of(2) => Some((
            dist_to_integer(scaled),
            format!(
                "b·{lattice} = {scaled} must stay away from the integers (b ∉ ℤ/{lattice}, even d)"
            ),
        )),
        Factor::Tan | Factor::Sec => Some((
            dist_to_odd(2.0 * scaled),
            format!(
                "2·b·{lattice} = {} must stay away from the odd integers (b ∉ 𝕆/{}, odd d)",
                2.0 * scaled,
                2 * lattice
            ),
        )),
    }
}

fn check_shift(factor: Factor, b: f64, lattice: u32, label: &str) -> Result<()> {
    if let Some((dist, message)) = shift_distance(factor, b, lattice) {
        if dist <= EXCLUSION_EPS {
            return Err(Error::SingularParameter(format!("{label}: {message}")));
        }
    }
    Ok(())
}

/// Checks the spec against its family's parameter constraints and exclusion
/// sets and returns it normalized (`b2` dropped where it has no meaning).
pub fn validate_params(spec: &SumSpec) -> Result<SumSpec> {
    let mut out = *spec;
    let family = spec.family;
    if !spec.b.is_finite() || spec.b2.is_some_and(|b2| !b2.is_finite()) {
        return Err(Error::NonFiniteShift);
    }
    if spec.n == 0 {
        return Err(Error::InvalidPower {
            n: 0,
            reason: "n must be positive",
        });
    }
    if !family.has_free_power() && spec.n != 1 {
        return Err(Error::InvalidPower {
            n: spec.n,
            reason: "this family is defined for n = 1 only",
        });
    }
    if spec.m == 0 || spec.m >= spec.d {
        return Err(Error::MOutOfRange {
            m: spec.m,
            d: spec.d,
        });
    }
    if family.is_odd_cosecant() && spec.m.is_multiple_of(2) {
        return Err(Error::EvenM(spec.m));
    }
    if !family.needs_second_shift() {
        out.b2 = None;
    }
    if spec.is_classical() {
        return Ok(out);
    }

    let lattice = family.lattice(spec.d);
    check_shift(family.first_factor(), spec.b, lattice, "b")?;

    if family.needs_second_shift() {
        let b2 = spec.second_shift()?;
        if let Some(second) = family.second_factor() {
            check_shift(second, b2, lattice, "b2")?;
            let cross = b2 - spec.b;
            let first = family.first_factor();
            match (first, second) {
                (Factor::Csc, Factor::Csc) | (Factor::Sec, Factor::Sec) => {
                    if dist_to_integer(cross) <= EXCLUSION_EPS {
                        return Err(Error::SingularParameter(format!(
                            "b2 - b = {cross} is an integer; the cross factor of the closed form is singular"
                        )));
                    }
                }
                (Factor::Csc, Factor::Sec) if dist_to_integer(cross - 0.5) <= EXCLUSION_EPS => {
                    return Err(Error::SingularParameter(format!(
                            "b2 - b = {cross} is a half-integer; the cross factor of the closed form is singular"
                        )));
                }
                _ => {}
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("cos-foo".parse::<Family>().is_err());
    }

    #[test]
    fn exclusion_examples() {
        let on_pole = SumSpec::new(Family::CosCot, 1, 1, 4, 0.25);
        assert!(matches!(
            validate_params(&on_pole),
            Err(Error::SingularParameter(_))
        ));
        let ok = SumSpec::new(Family::CosCot, 1, 1, 3, 1.0 / 6.0);
        assert!(validate_params(&ok).is_ok());
        let even_m = SumSpec::new(Family::SinCscOdd, 1, 2, 5, 0.1);
        assert_eq!(validate_params(&even_m), Err(Error::EvenM(2)));
        let range = SumSpec::new(Family::CosCot, 1, 3, 3, 0.1);
        assert_eq!(
            validate_params(&range),
            Err(Error::MOutOfRange { m: 3, d: 3 })
        );
    }

    #[test]
    fn tangent_exclusions_depend_on_parity() {
        // odd d: 2bd odd is singular, bd integer is fine
        let s = SumSpec::new(Family::CosTan, 1, 1, 3, 1.0 / 6.0);
        assert!(validate_params(&s).is_err());
        let s = SumSpec::new(Family::CosTan, 1, 1, 3, 1.0 / 3.0);
        assert!(validate_params(&s).is_ok());
        // even d: bd integer is singular
        let s = SumSpec::new(Family::CosTan, 1, 1, 4, 0.25);
        assert!(validate_params(&s).is_err());
        let s = SumSpec::new(Family::CosTan, 1, 1, 4, 0.125);
        assert!(validate_params(&s).is_ok());
    }

    #[test]
    fn double_range_uses_half_lattice() {
        let s = SumSpec::new(Family::CosCot2d, 1, 1, 2, 0.25);
        assert!(validate_params(&s).is_err());
        let s = SumSpec::new(Family::CosCot2d, 1, 1, 2, 0.1);
        assert!(validate_params(&s).is_ok());
    }

    #[test]
    fn triple_product_checks() {
        let base = SumSpec::new(Family::CosCscCsc, 1, 1, 3, 0.1);
        assert_eq!(validate_params(&base), Err(Error::MissingSecondShift));
        assert!(validate_params(&base.with_b2(0.1)).is_err());
        assert!(validate_params(&base.with_b2(1.1)).is_err());
        assert!(validate_params(&base.with_b2(0.3)).is_ok());
        let cs = SumSpec::new(Family::CosCscSec, 1, 1, 4, 0.1).with_b2(0.6);
        assert!(validate_params(&cs).is_err());
        // b1 = b2 is fine for the cosec·cos family
        let cc = SumSpec::new(Family::CosCscCos, 1, 1, 3, 0.2).with_b2(0.2);
        assert!(validate_params(&cc).is_ok());
    }

    #[test]
    fn classical_dispensation() {
        let s = SumSpec::new(Family::SinCot, 1, 2, 5, 0.0);
        assert!(validate_params(&s).is_ok());
        let s = SumSpec::new(Family::CosCot, 1, 2, 5, 0.0);
        assert!(validate_params(&s).is_err());
        let s = SumSpec::new(Family::SinCot, 2, 2, 5, 0.0);
        assert!(validate_params(&s).is_err());
    }

    #[test]
    fn normalization_drops_b2() {
        let s = SumSpec::new(Family::CosCot, 1, 1, 3, 0.1).with_b2(0.4);
        assert_eq!(validate_params(&s).unwrap().b2, None);
    }

    #[test]
    fn fixed_power_families_reject_n() {
        let s = SumSpec::new(Family::CosTan, 2, 1, 3, 0.1);
        assert!(matches!(
            validate_params(&s),
            Err(Error::InvalidPower { .. })
        ));
    }
}
