//! Residue-theorem reconstruction of the sums.
//!
//! Each sum `S` is the real part of a contour bookkeeping identity for a
//! 1-periodic integrand
//!
//! ```text
//! f(z) = e^{iπcmz} T(z) / (e^{2πidz} - 1)  ±  e^{-iπcmz} T(z) / (e^{-2πidz} - 1)
//! ```
//!
//! (`c = 2`, or `c = 1` for odd cosecant powers; minus for cosine sums, plus
//! for sine sums; `T` the cot/cosec power or the cosec·cos/sin product). The
//! boundary poles `z = j/d` carry the individual terms, the interior pole
//! `z₀ = 1 - b` (with `b` reduced into `(0, 1)`) carries the whole sum, and
//! all residues in the unit strip add up to zero.

mod factors;
mod series;

pub use factors::{expand_factor, FactorKind};
pub use series::{
    series_add, series_mul, series_pow, series_reciprocal, LaurentSeries, INVERTIBILITY_TOL,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::closed_form::{
    validate_params, EvalPath, Factor, Family, FamilyGroup, Outer, SumSpec, SumValue,
    IMAG_ERROR_TOL,
};
use crate::error::{Error, Result};
use crate::trig::{cos_pi, cot_pi, csc_pi, expi_pi, sin_pi};

/// Guard terms kept beyond the pole order in every factor expansion.
pub const GUARD_TERMS: u32 = 2;

/// The integrand behind one supported sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandDescriptor {
    pub family: Family,
    pub m: u32,
    pub d: u32,
    pub b: f64,
    pub b2: Option<f64>,
    pub pole_order: u32,
}

impl IntegrandDescriptor {
    pub fn supports(family: Family) -> bool {
        family.group() == FamilyGroup::Theorem
            || matches!(
                family,
                Family::CosCscCos | Family::CosCscSin | Family::SinCscCos | Family::SinCscSin
            )
    }

    pub fn from_spec(spec: &SumSpec) -> Result<Self> {
        if !Self::supports(spec.family) {
            return Err(Error::UnsupportedFamily {
                family: spec.family.name(),
                path: "residue",
            });
        }
        let spec = validate_params(spec)?;
        if spec.is_classical() {
            return Err(Error::SingularParameter(
                "b = 0 puts the interior pole on the boundary lattice".into(),
            ));
        }
        Ok(Self {
            family: spec.family,
            m: spec.m,
            d: spec.d,
            b: spec.b,
            b2: spec.b2,
            pole_order: spec.family.power(spec.n),
        })
    }

    fn frequency(&self) -> f64 {
        if self.family.is_odd_cosecant() {
            self.m as f64
        } else {
            2.0 * self.m as f64
        }
    }

    /// Sign between the two exponential pieces.
    fn combination_sign(&self) -> f64 {
        match self.family.outer() {
            Outer::Cos => -1.0,
            Outer::Sin => 1.0,
        }
    }

    /// `T(z)` evaluated directly.
    fn trig_part(&self, z: f64) -> f64 {
        let x = z + self.b;
        let p = self.pole_order as i32;
        let base = match self.family.first_factor() {
            Factor::Cot => cot_pi(x).powi(p),
            _ => csc_pi(x).powi(p),
        };
        match (self.family.second_factor(), self.b2) {
            (Some(Factor::Cos), Some(b2)) => base * cos_pi(z + b2),
            (Some(Factor::Sin), Some(b2)) => base * sin_pi(z + b2),
            _ => base,
        }
    }

    /// The interior pole `z₀ = 1 - (b - ⌊b⌋)` and `⌊b⌋`.
    pub fn interior_pole(&self) -> (f64, i64) {
        let k = self.b.floor();
        (1.0 - (self.b - k), k as i64)
    }

    /// Local Laurent expansion of `f` around the interior pole.
    pub fn interior_series(&self) -> Result<LaurentSeries> {
        let order = (self.pole_order + GUARD_TERMS) as i32;
        let (z0, shift) = self.interior_pole();
        // πz₀ + πb = π(1 + ⌊b⌋): cot is unchanged, cosec picks up (-1)^⌊b⌋
        let (trig_kind, lattice_sign) = match self.family.first_factor() {
            Factor::Cot => (FactorKind::CotShifted, 1.0),
            _ => (
                FactorKind::CscShifted,
                if (shift * i64::from(self.pole_order)).rem_euclid(2) == 0 {
                    1.0
                } else {
                    -1.0
                },
            ),
        };
        let mut shared = expand_factor(trig_kind, order)?.pow(self.pole_order);
        if let (Some(second), Some(b2)) = (self.family.second_factor(), self.b2) {
            let phase = z0 + b2;
            let kind = match second {
                Factor::Cos => FactorKind::CosShifted { phase },
                _ => FactorKind::SinShifted { phase },
            };
            shared = shared.mul(&expand_factor(kind, order)?);
        }

        let freq = self.frequency();
        let d = self.d as f64;
        let mut total: Option<LaurentSeries> = None;
        for sigma in [1.0, -1.0] {
            let exp = expand_factor(
                FactorKind::ExpLinear {
                    rate: Complex64::new(0.0, sigma * PI * freq),
                },
                order,
            )?;
            let kernel = expand_factor(
                FactorKind::ApostolKernel {
                    t: expi_pi(sigma * 2.0 * d * z0),
                    scale: Complex64::new(0.0, sigma * 2.0 * PI * d),
                },
                order,
            )?;
            let weight = if sigma > 0.0 {
                1.0
            } else {
                self.combination_sign()
            };
            let phase = expi_pi(sigma * freq * z0) * (lattice_sign * weight);
            let piece = exp.mul(&kernel).mul(&shared).scale(phase);
            total = Some(match total {
                None => piece,
                Some(acc) => acc.add(&piece),
            });
        }
        Ok(total.expect("two pieces"))
    }

    /// `Res(f, z₀)`: the `w^-1` coefficient of the interior expansion.
    pub fn residue_at_interior_pole(&self) -> Result<Complex64> {
        let series = self.interior_series()?;
        Ok(series
            .residue()
            .expect("guard terms keep the residue inside the truncation"))
    }

    /// `Res(f, j/d)` for `j = 0..d`, from numerator over the derivative of
    /// the exponential denominator.
    pub fn boundary_residues(&self) -> Vec<Complex64> {
        let freq = self.frequency();
        let d = self.d as f64;
        (0..self.d)
            .map(|j| {
                let z = j as f64 / d;
                let t = self.trig_part(z);
                let plus = expi_pi(freq * z) * t
                    / (Complex64::new(0.0, 2.0 * PI * d) * expi_pi(2.0 * d * z));
                let minus = expi_pi(-freq * z) * t
                    / (Complex64::new(0.0, -2.0 * PI * d) * expi_pi(-2.0 * d * z));
                plus + minus * self.combination_sign()
            })
            .collect()
    }

    /// Factor turning the interior residue into the sum: `-πid` for cosine
    /// sums, `-πd` for sine sums.
    pub fn sum_scale(&self) -> Complex64 {
        let d = self.d as f64;
        match self.family.outer() {
            Outer::Cos => Complex64::new(0.0, -PI * d),
            Outer::Sin => Complex64::new(-PI * d, 0.0),
        }
    }
}

pub fn residue_at_interior_pole(desc: &IntegrandDescriptor) -> Result<Complex64> {
    desc.residue_at_interior_pole()
}

pub fn boundary_residues(desc: &IntegrandDescriptor) -> Vec<Complex64> {
    desc.boundary_residues()
}

/// The sum reconstructed from the interior residue alone.
pub fn sum_via_residues(spec: &SumSpec) -> Result<SumValue> {
    let desc = IntegrandDescriptor::from_spec(spec)?;
    let value = desc.residue_at_interior_pole()? * desc.sum_scale();
    let (re, im) = (value.re, value.im.abs());
    if im > IMAG_ERROR_TOL * re.abs().max(1.0) {
        return Err(Error::ImaginaryResidual { real: re, imag: im });
    }
    Ok(SumValue {
        value: re,
        imag_residual: im,
        path: EvalPath::Residue,
    })
}
