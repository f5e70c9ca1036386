//! Truncated Laurent series `Σ c_k w^k`, `min_degree ≤ k ≤ truncation_order`,
//! with complex coefficients.

use std::ops::{Add, Mul, Neg};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Leading coefficients at or below this magnitude are not invertible.
pub const INVERTIBILITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    min_degree: i32,
    /// `coeffs[k]` multiplies `w^(min_degree + k)`.
    coeffs: Vec<Complex64>,
}

impl LaurentSeries {
    /// Series known through `w^(min_degree + coeffs.len() - 1)`.
    pub fn new(min_degree: i32, coeffs: Vec<Complex64>) -> Self {
        Self { min_degree, coeffs }
    }

    pub fn from_real(min_degree: i32, coeffs: &[f64]) -> Self {
        Self::new(
            min_degree,
            coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        )
    }

    /// The zero series, exact through `w^truncation_order`.
    pub fn zero(truncation_order: i32) -> Self {
        Self::monomial(0, Complex64::new(0.0, 0.0), truncation_order)
    }

    pub fn constant(c: Complex64, truncation_order: i32) -> Self {
        Self::monomial(0, c, truncation_order)
    }

    /// `c·w^degree`, exact through `w^truncation_order`.
    pub fn monomial(degree: i32, c: Complex64, truncation_order: i32) -> Self {
        let len = (truncation_order - degree + 1).max(0) as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
        if let Some(first) = coeffs.first_mut() {
            *first = c;
        }
        Self::new(degree, coeffs)
    }

    pub fn min_degree(&self) -> i32 {
        self.min_degree
    }

    pub fn truncation_order(&self) -> i32 {
        self.min_degree + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `w^degree`; `None` above the truncation order.
    pub fn coeff(&self, degree: i32) -> Option<Complex64> {
        if degree > self.truncation_order() {
            None
        } else if degree < self.min_degree {
            Some(Complex64::new(0.0, 0.0))
        } else {
            Some(self.coeffs[(degree - self.min_degree) as usize])
        }
    }

    /// Coefficient of `w^-1`.
    pub fn residue(&self) -> Option<Complex64> {
        self.coeff(-1)
    }

    /// Drops leading coefficients with magnitude at or below `tol`.
    pub fn trimmed(&self, tol: f64) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.norm() <= tol).count();
        Self::new(self.min_degree + skip as i32, self.coeffs[skip..].to_vec())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Evaluates the truncated sum at `w`.
    pub fn eval(&self, w: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * w + c;
        }
        acc * w.powi(self.min_degree)
    }

    pub fn add(&self, other: &Self) -> Self {
        let min = self.min_degree.min(other.min_degree);
        let trunc = self.truncation_order().min(other.truncation_order());
        let coeffs = (min..=trunc)
            .map(|k| self.coeff(k).unwrap() + other.coeff(k).unwrap())
            .collect();
        Self::new(min, coeffs)
    }

    /// Cauchy product. A factor known through `w^T` with leading degree `a`
    /// times one with leading degree `b` fixes the product through `w^(T+b)`.
    pub fn mul(&self, other: &Self) -> Self {
        let min = self.min_degree + other.min_degree;
        let trunc = (self.truncation_order() + other.min_degree)
            .min(other.truncation_order() + self.min_degree);
        let len = (trunc - min + 1).max(0) as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(min, coeffs)
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        assert!(k >= 1, "series power must be positive");
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse, to the relative precision of `self`.
    pub fn reciprocal(&self) -> Result<Self> {
        let lead = self.coeffs.first().copied().unwrap_or_default();
        if lead.norm() <= INVERTIBILITY_TOL {
            return Err(Error::NonInvertibleSeries(lead.norm()));
        }
        let inv_lead = 1.0 / lead;
        let mut out: Vec<Complex64> = Vec::with_capacity(self.coeffs.len());
        out.push(inv_lead);
        for k in 1..self.coeffs.len() {
            let s: Complex64 = (1..=k).map(|i| self.coeffs[i] * out[k - i]).sum();
            out.push(-s * inv_lead);
        }
        Ok(Self::new(-self.min_degree, out))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

pub fn series_add(a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
    a.add(b)
}

pub fn series_mul(a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
    a.mul(b)
}

pub fn series_pow(a: &LaurentSeries, k: u32) -> LaurentSeries {
    a.pow(k)
}

pub fn series_reciprocal(a: &LaurentSeries) -> Result<LaurentSeries> {
    a.reciprocal()
}
