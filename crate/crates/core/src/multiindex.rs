//! Constrained compositions `2(j_1 + … + j_k) + μ + ν = total` indexing the
//! terms of the multi-index residue formulas, and the coefficient products
//! `D(j) = Π C_{j_r}` and `F(j) = Π G_{j_r}`.

use crate::coefficients::{table, Rational};
use crate::error::Result;
use num_traits::One;

/// Parity constraint on `μ + ν`.
///
/// Since `2Σj` is even, `μ + ν ≡ total (mod 2)` for every solution, so the
/// filter never removes a tuple the equation admits when it matches the
/// parity of `total`, and removes all of them otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Any,
    /// Also expresses "`μ + ν + 1` must be even".
    MuPlusNuOdd,
    MuPlusNuEven,
}

impl Parity {
    /// Alias for the "`μ + ν + 1` even" phrasing.
    pub const MU_PLUS_NU_PLUS_ONE_EVEN: Parity = Parity::MuPlusNuOdd;

    fn admits(self, mu_plus_nu: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::MuPlusNuOdd => mu_plus_nu % 2 == 1,
            Parity::MuPlusNuEven => mu_plus_nu.is_multiple_of(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionTuple {
    pub js: Vec<usize>,
    pub mu: usize,
    pub nu: usize,
}

impl CompositionTuple {
    pub fn weight(&self) -> usize {
        2 * self.js.iter().sum::<usize>() + self.mu + self.nu
    }
}

/// Every tuple with `2Σjs + mu + nu = total` passing `parity`, in
/// lexicographic order of `(js, mu)`.
pub fn enumerate(total: usize, parts: usize, parity: Parity) -> Vec<CompositionTuple> {
    assert!(parts >= 1, "parts must be positive");
    let mut out = Vec::new();
    let mut js = vec![0usize; parts];
    fill(&mut js, 0, total, parity, &mut out);
    out
}

fn fill(
    js: &mut Vec<usize>,
    pos: usize,
    remaining: usize,
    parity: Parity,
    out: &mut Vec<CompositionTuple>,
) {
    if pos == js.len() {
        if !parity.admits(remaining) {
            return;
        }
        for mu in 0..=remaining {
            out.push(CompositionTuple {
                js: js.clone(),
                mu,
                nu: remaining - mu,
            });
        }
        return;
    }
    for j in 0..=remaining / 2 {
        js[pos] = j;
        fill(js, pos + 1, remaining - 2 * j, parity, out);
    }
    js[pos] = 0;
}

pub fn product_d(js: &[usize]) -> Result<Rational> {
    let t = table();
    js.iter()
        .try_fold(Rational::one(), |acc, &j| Ok(acc * t.cot_coeff(j)?))
}

pub fn product_f(js: &[usize]) -> Result<Rational> {
    let t = table();
    js.iter()
        .try_fold(Rational::one(), |acc, &j| Ok(acc * t.csc_coeff(j)?))
}
