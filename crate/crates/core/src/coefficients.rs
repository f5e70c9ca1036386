//! Exact expansion coefficients.
//!
//! * `B_j`: Bernoulli numbers, convention `B_1 = -1/2`.
//! * `C_j = (-1)^j 2^{2j} B_{2j} / (2j)!`, so that
//!   `cot(πw) = Σ C_j π^{2j-1} w^{2j-1}`.
//! * `G_j = (-1)^j 2 (2^{2j-1} - 1) B_{2j} / (2j)!`, so that
//!   `cosec(π + πw) = -cosec(πw) = Σ G_j π^{2j-1} w^{2j-1}`.
//! * `A_ν(t)`: Taylor coefficients of `1/(t e^z - 1) = Σ A_ν(t) z^ν / ν!`
//!   for `t ≠ 1`. They are related to the Apostol-Bernoulli numbers by
//!   `A_ν(t) = B_{ν+1}(0, t) / (ν + 1)`; only `A_ν` is computed here.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub const DEFAULT_COEFF_CAP: usize = 64;

/// `|t - 1|` at or below this is rejected by [`apostol_a`].
pub const APOSTOL_DEGENERACY_TOL: f64 = 1e-9;

/// Memoized coefficient table. Holds `B_0..=B_{2·cap}` so that `C_j` and
/// `G_j` are available for every `j ≤ cap`.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    cap: usize,
    bernoulli: Vec<Rational>,
    cot: Vec<Rational>,
    csc: Vec<Rational>,
    cot_f64: Vec<f64>,
    csc_f64: Vec<f64>,
}

impl CoefficientTable {
    pub fn with_cap(cap: usize) -> Self {
        let bernoulli = bernoulli_recurrence(2 * cap);
        let mut cot = Vec::with_capacity(cap + 1);
        let mut csc = Vec::with_capacity(cap + 1);
        let mut factorial = BigInt::one();
        for j in 0..=cap {
            if j > 0 {
                factorial *= BigInt::from(2 * j - 1) * BigInt::from(2 * j);
            }
            let sign = if j % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let b2j = &bernoulli[2 * j];
            let pow4 = BigInt::one() << (2 * j);
            cot.push(Rational::new(sign.clone() * pow4, factorial.clone()) * b2j);
            // 2 (2^{2j-1} - 1) = 2^{2j} - 2
            let two_factor = (BigInt::one() << (2 * j)) - BigInt::from(2);
            csc.push(Rational::new(sign * two_factor, factorial.clone()) * b2j);
        }
        let cot_f64 = cot.iter().map(rational_to_f64).collect();
        let csc_f64 = csc.iter().map(rational_to_f64).collect();
        Self {
            cap,
            bernoulli,
            cot,
            csc,
            cot_f64,
            csc_f64,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, index: usize) -> Result<()> {
        if index > self.cap {
            Err(Error::OrderTooLarge {
                index,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn bernoulli(&self, j: usize) -> Result<&Rational> {
        self.check(j)?;
        Ok(&self.bernoulli[j])
    }

    pub fn cot_coeff(&self, j: usize) -> Result<&Rational> {
        self.check(j)?;
        Ok(&self.cot[j])
    }

    pub fn csc_coeff(&self, j: usize) -> Result<&Rational> {
        self.check(j)?;
        Ok(&self.csc[j])
    }

    pub fn cot_coeff_f64(&self, j: usize) -> Result<f64> {
        self.check(j)?;
        Ok(self.cot_f64[j])
    }

    pub fn csc_coeff_f64(&self, j: usize) -> Result<f64> {
        self.check(j)?;
        Ok(self.csc_f64[j])
    }
}

/// `B_0..=B_max` from `Σ_{k=0}^{n} binom(n+1, k) B_k = 0`.
fn bernoulli_recurrence(max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(max + 1);
    out.push(Rational::one());
    // row holds binom(n+1, k) for k = 0..=n+1
    let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for n in 1..=max {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for k in 1..row.len() {
            next.push(&row[k - 1] + &row[k]);
        }
        next.push(BigInt::one());
        row = next;
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(row[k].clone());
            }
        }
        out.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    out
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

static DEFAULT_TABLE: OnceLock<CoefficientTable> = OnceLock::new();

/// Process-wide table with [`DEFAULT_COEFF_CAP`], built on first use.
pub fn table() -> &'static CoefficientTable {
    DEFAULT_TABLE.get_or_init(|| CoefficientTable::with_cap(DEFAULT_COEFF_CAP))
}

pub fn bernoulli(j: usize) -> Result<Rational> {
    table().bernoulli(j).cloned()
}

pub fn cot_coeff(j: usize) -> Result<Rational> {
    table().cot_coeff(j).cloned()
}

pub fn csc_coeff(j: usize) -> Result<Rational> {
    table().csc_coeff(j).cloned()
}

/// `A_0(t), …, A_max(t)` via `A_ν = -t/(t-1) Σ_{k<ν} binom(ν,k) A_k`.
pub fn apostol_sequence(max_nu: usize, t: Complex64) -> Result<Vec<Complex64>> {
    let distance = (t - 1.0).norm();
    if distance.is_nan() || distance <= APOSTOL_DEGENERACY_TOL {
        return Err(Error::DegenerateApostol { distance });
    }
    let ratio = -t / (t - 1.0);
    let mut out = Vec::with_capacity(max_nu + 1);
    out.push(1.0 / (t - 1.0));
    let mut binom = vec![1.0f64];
    for nu in 1..=max_nu {
        let mut next = vec![1.0f64; nu + 1];
        for k in 1..nu {
            next[k] = binom[k - 1] + binom[k];
        }
        binom = next;
        let sum: Complex64 = out.iter().zip(&binom).map(|(a, &c)| a * c).sum();
        out.push(ratio * sum);
    }
    Ok(out)
}

pub fn apostol_a(nu: usize, t: Complex64) -> Result<Complex64> {
    Ok(apostol_sequence(nu, t)?[nu])
}
