//! Local expansions, in `w = z - z₀`, of the factors making up the
//! generating integrands.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::series::LaurentSeries;
use crate::coefficients::{apostol_sequence, table};
use crate::error::Result;
use crate::trig::{cos_pi, sin_pi};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FactorKind {
    /// `e^{rate·w} = Σ (rate·w)^k / k!`; constant phases are applied by the
    /// caller.
    ExpLinear { rate: Complex64 },
    /// `cot(π + πw) = Σ C_j π^{2j-1} w^{2j-1}`.
    CotShifted,
    /// `cosec(π + πw) = Σ G_j π^{2j-1} w^{2j-1}`.
    CscShifted,
    /// `cos(πθ + πw)`.
    CosShifted { phase: f64 },
    /// `sin(πθ + πw)`.
    SinShifted { phase: f64 },
    /// `1/(t·e^{scale·w} - 1) = Σ A_ν(t) (scale·w)^ν / ν!`.
    ApostolKernel { t: Complex64, scale: Complex64 },
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Expansion of `kind` through `w^order`.
pub fn expand_factor(kind: FactorKind, order: i32) -> Result<LaurentSeries> {
    let taylor_len = (order + 1).max(0) as usize;
    let series = match kind {
        FactorKind::ExpLinear { rate } => {
            let mut coeffs = Vec::with_capacity(taylor_len);
            let mut term = real(1.0);
            for k in 0..taylor_len {
                if k > 0 {
                    term = term * rate / k as f64;
                }
                coeffs.push(term);
            }
            LaurentSeries::new(0, coeffs)
        }
        FactorKind::CotShifted | FactorKind::CscShifted => {
            let coeffs = table();
            let len = (order + 2).max(0) as usize;
            let mut out = vec![real(0.0); len];
            // degree 2j - 1 lives at index 2j
            for (idx, slot) in out.iter_mut().enumerate().step_by(2) {
                let j = idx / 2;
                let c = match kind {
                    FactorKind::CotShifted => coeffs.cot_coeff_f64(j)?,
                    _ => coeffs.csc_coeff_f64(j)?,
                };
                *slot = real(c * PI.powi(2 * j as i32 - 1));
            }
            LaurentSeries::new(-1, out)
        }
        FactorKind::CosShifted { phase } | FactorKind::SinShifted { phase } => {
            let is_cos = matches!(kind, FactorKind::CosShifted { .. });
            let mut coeffs = Vec::with_capacity(taylor_len);
            let mut scale = 1.0;
            for k in 0..taylor_len {
                if k > 0 {
                    scale *= PI / k as f64;
                }
                // k-th derivative shifts the phase by k·π/2
                let shifted = phase + 0.5 * k as f64;
                let v = if is_cos {
                    cos_pi(shifted)
                } else {
                    sin_pi(shifted)
                };
                coeffs.push(real(v * scale));
            }
            LaurentSeries::new(0, coeffs)
        }
        FactorKind::ApostolKernel { t, scale } => {
            if taylor_len == 0 {
                return Ok(LaurentSeries::new(0, Vec::new()));
            }
            let a = apostol_sequence(taylor_len - 1, t)?;
            let mut coeffs = Vec::with_capacity(taylor_len);
            let mut power = real(1.0);
            for (nu, a_nu) in a.into_iter().enumerate() {
                if nu > 0 {
                    power = power * scale / nu as f64;
                }
                coeffs.push(a_nu * power);
            }
            LaurentSeries::new(0, coeffs)
        }
    };
    Ok(series)
}
