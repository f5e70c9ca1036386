//! Multi-index evaluation of the power families for arbitrary `n`.
//!
//! Every family shares the shape
//!
//! ```text
//! S = -Σ i^(μ+ν[+1]) 2^(μ+ν | ν) m^μ/μ! d^(ν+1)/ν! (t₁A_ν(t₂) ∓ (-1)^(μ+ν) t₁'A_ν(t₂')) Π coeff(j_r)
//! ```
//!
//! summed over compositions `2Σj + μ + ν = total`. Cosine families carry the
//! extra factor of `i` and the minus sign inside the bracket; the odd cosecant
//! families use `2^ν` and the half-frequency phases `p₁ = e^{-πim(b-1)}`.

use num_complex::Complex64;

use super::params::{validate_params, EvalPath, Family, FamilyGroup, Outer, SumSpec, SumValue};
use crate::coefficients::{apostol_sequence, table};
use crate::error::{Error, Result};
use crate::multiindex::{enumerate, CompositionTuple, Parity};
use crate::summation::ComplexNeumaier;
use crate::trig::expi_pi;

/// Imaginary parts above `IMAG_ERROR_TOL · max(1, |Re|)` signal a fault.
pub const IMAG_ERROR_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientKind {
    /// `C_j`, product `D`.
    Cot,
    /// `G_j`, product `F`.
    Csc,
}

/// Composition target, number of `j` indices, parity filter and coefficient
/// kind for one power family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremShape {
    pub total: usize,
    pub parts: usize,
    pub parity: Parity,
    pub coefficients: CoefficientKind,
}

impl TheoremShape {
    pub fn of(family: Family, n: u32) -> Result<Self> {
        let n = n as usize;
        let shape = match family {
            Family::CosCot | Family::SinCot => TheoremShape {
                total: n - 1,
                parts: n,
                parity: Parity::Any,
                coefficients: CoefficientKind::Cot,
            },
            Family::SinCsc2n => TheoremShape {
                total: 2 * n - 1,
                parts: 2 * n,
                parity: Parity::MuPlusNuOdd,
                coefficients: CoefficientKind::Csc,
            },
            Family::CosCsc2n => TheoremShape {
                total: 2 * n - 1,
                parts: 2 * n,
                parity: Parity::MU_PLUS_NU_PLUS_ONE_EVEN,
                coefficients: CoefficientKind::Csc,
            },
            Family::SinCscOdd | Family::CosCscOdd => TheoremShape {
                total: 2 * n - 2,
                parts: 2 * n - 1,
                parity: Parity::MuPlusNuEven,
                coefficients: CoefficientKind::Csc,
            },
            other => {
                return Err(Error::UnsupportedFamily {
                    family: other.name(),
                    path: "multi-index",
                })
            }
        };
        Ok(shape)
    }
}

fn i_pow(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|v| v as f64).product()
}

/// Everything the two multi-index displays (sum and interior residue) share.
struct Setup {
    tuples: Vec<(CompositionTuple, f64)>,
    cosine: bool,
    odd: bool,
    m: f64,
    d: f64,
    t1: Complex64,
    t1_conj: Complex64,
    a: Vec<Complex64>,
    a_conj: Vec<Complex64>,
}

impl Setup {
    fn new(spec: &SumSpec) -> Result<Self> {
        if spec.is_classical() {
            return Err(Error::SingularParameter(
                "the multi-index formula is undefined at b = 0".into(),
            ));
        }
        let family = spec.family;
        if family.group() != FamilyGroup::Theorem {
            return Err(Error::UnsupportedFamily {
                family: family.name(),
                path: "multi-index",
            });
        }
        let shape = TheoremShape::of(family, spec.n)?;
        let coeffs = table();
        let mut tuples = Vec::new();
        for tuple in enumerate(shape.total, shape.parts, shape.parity) {
            let mut product = 1.0;
            for &j in &tuple.js {
                product *= match shape.coefficients {
                    CoefficientKind::Cot => coeffs.cot_coeff_f64(j)?,
                    CoefficientKind::Csc => coeffs.csc_coeff_f64(j)?,
                };
            }
            tuples.push((tuple, product));
        }
        let (m, d, b) = (spec.m as f64, spec.d as f64, spec.b);
        let odd = family.is_odd_cosecant();
        let (t1, t1_conj) = if odd {
            (expi_pi(-m * (b - 1.0)), expi_pi(m * (b - 1.0)))
        } else {
            (expi_pi(-2.0 * m * b), expi_pi(2.0 * m * b))
        };
        let t2 = expi_pi(-2.0 * d * b);
        let t2_conj = expi_pi(2.0 * d * b);
        Ok(Self {
            tuples,
            cosine: family.outer() == Outer::Cos,
            odd,
            m,
            d,
            t1,
            t1_conj,
            a: apostol_sequence(shape.total, t2)?,
            a_conj: apostol_sequence(shape.total, t2_conj)?,
        })
    }

    fn bracket(&self, mu: usize, nu: usize) -> Complex64 {
        let sign = if (mu + nu).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        let first = self.t1 * self.a[nu];
        let second = self.t1_conj * self.a_conj[nu] * sign;
        if self.cosine {
            first - second
        } else {
            first + second
        }
    }

    fn two_power(&self, mu: usize, nu: usize) -> f64 {
        let e = if self.odd { nu } else { mu + nu };
        2f64.powi(e as i32)
    }
}

/// `S` from the multi-index formula, valid for any `n ≥ 1`.
pub fn theorem_sum(spec: &SumSpec) -> Result<SumValue> {
    let spec = validate_params(spec)?;
    let setup = Setup::new(&spec)?;
    let mut acc = ComplexNeumaier::default();
    for (tuple, product) in &setup.tuples {
        let (mu, nu) = (tuple.mu, tuple.nu);
        let extra = usize::from(setup.cosine);
        let scale = setup.two_power(mu, nu) * setup.m.powi(mu as i32) / factorial(mu)
            * setup.d.powi(nu as i32 + 1)
            / factorial(nu)
            * product;
        acc.add(-i_pow(mu + nu + extra) * setup.bracket(mu, nu) * scale);
    }
    let total = acc.total();
    let (re, im) = (total.re, total.im.abs());
    if im > IMAG_ERROR_TOL * re.abs().max(1.0) {
        return Err(Error::ImaginaryResidual { real: re, imag: im });
    }
    Ok(SumValue {
        value: re,
        imag_residual: im,
        path: EvalPath::MultiIndex,
    })
}

/// Residue of the generating integrand at the interior pole `z = 1 - b`,
/// from the multi-index residue display
/// `Σ i^(μ+ν) 2^(μ+ν | ν) m^μ/μ! d^ν/ν! (t₁/π A_ν(t₂) ∓ (-1)^(μ+ν) t₁'/π A_ν(t₂')) Π coeff`.
pub fn interior_residue_multi_index(spec: &SumSpec) -> Result<Complex64> {
    let spec = validate_params(spec)?;
    let setup = Setup::new(&spec)?;
    let mut acc = ComplexNeumaier::default();
    for (tuple, product) in &setup.tuples {
        let (mu, nu) = (tuple.mu, tuple.nu);
        let scale = setup.two_power(mu, nu) * setup.m.powi(mu as i32) / factorial(mu)
            * setup.d.powi(nu as i32)
            / factorial(nu)
            * product
            / std::f64::consts::PI;
        acc.add(i_pow(mu + nu) * setup.bracket(mu, nu) * scale);
    }
    Ok(acc.total())
}
