//! Ground truth by direct term-by-term summation.

use std::f64::consts::PI;

use crate::closed_form::{EvalPath, Factor, Family, Outer, SumSpec, SumValue};
use crate::error::{Error, Result};
use crate::summation::Neumaier;
use crate::trig::{cos_pi, cot_pi, csc_pi, dist_to_integer, sec_pi, sin_pi, tan_pi};

/// A term whose singular factor sits closer than this (radians) to a pole is
/// rejected.
pub const SINGULAR_TERM_TOL: f64 = 1e-12;

fn factor_value(factor: Factor, x: f64) -> f64 {
    match factor {
        Factor::Cot => cot_pi(x),
        Factor::Csc => csc_pi(x),
        Factor::Tan => tan_pi(x),
        Factor::Sec => sec_pi(x),
        Factor::Cos => cos_pi(x),
        Factor::Sin => sin_pi(x),
    }
}

/// Radian distance from `πx` to the nearest pole of `factor`, or `None` for
/// entire factors.
fn pole_distance(factor: Factor, x: f64) -> Option<f64> {
    factor
        .pole_offset()
        .map(|offset| PI * dist_to_integer(x - offset))
}

/// `outer(2πmj/d)` (or `πmj/d` for odd cosecant powers) with the angle
/// reduced exactly in integer arithmetic.
fn outer_value(family: Family, m: u32, d: u32, j: u32) -> f64 {
    let numer = if family.is_odd_cosecant() {
        u64::from(m) * u64::from(j)
    } else {
        2 * u64::from(m) * u64::from(j)
    };
    let period = 2 * u64::from(d);
    let k = numer % period;
    // fold into [0, π] so that m and d - m see bitwise mirrored angles
    let (k, sign) = if k > u64::from(d) {
        (period - k, -1.0)
    } else {
        (k, 1.0)
    };
    let reduced = k as f64 / d as f64;
    match family.outer() {
        Outer::Cos => cos_pi(reduced),
        Outer::Sin => sign * sin_pi(reduced),
    }
}

struct TermArgs {
    index: u32,
    first: f64,
    second: Option<f64>,
}

fn term_args(spec: &SumSpec) -> Result<impl Iterator<Item = TermArgs>> {
    let family = spec.family;
    let lattice = family.lattice(spec.d) as f64;
    let b = spec.b;
    let b2 = if family.needs_second_shift() {
        Some(spec.second_shift()?)
    } else {
        None
    };
    Ok(
        (family.start_index()..family.term_count(spec.d)).map(move |j| {
            let base = j as f64 / lattice;
            TermArgs {
                index: j,
                first: base + b,
                second: b2.map(|b2| base + b2),
            }
        }),
    )
}

/// The individual summands in index order.
pub fn terms(spec: &SumSpec) -> Result<Vec<f64>> {
    let family = spec.family;
    let first = family.first_factor();
    let second = family.second_factor();
    let power = family.power(spec.n) as i32;
    let mut out = Vec::new();
    for args in term_args(spec)? {
        let mut nearest = pole_distance(first, args.first);
        if let (Some(f), Some(x)) = (second, args.second) {
            if let Some(dist) = pole_distance(f, x) {
                nearest = Some(nearest.map_or(dist, |n| n.min(dist)));
            }
        }
        if let Some(distance) = nearest {
            if distance <= SINGULAR_TERM_TOL {
                return Err(Error::SingularTerm {
                    index: args.index,
                    distance,
                });
            }
        }
        let mut value = outer_value(family, spec.m, spec.d, args.index)
            * factor_value(first, args.first).powi(power);
        if let (Some(f), Some(x)) = (second, args.second) {
            value *= factor_value(f, x);
        }
        out.push(value);
    }
    Ok(out)
}

/// Direct compensated summation of the printed left-hand side.
pub fn direct_sum(spec: &SumSpec) -> Result<SumValue> {
    let acc: Neumaier = terms(spec)?.into_iter().collect();
    Ok(SumValue::real(acc.total(), EvalPath::Oracle))
}

/// `Σ |term|`, the natural scale for cancellation-limited comparisons.
pub fn absolute_sum(spec: &SumSpec) -> Result<f64> {
    let acc: Neumaier = terms(spec)?.into_iter().map(f64::abs).collect();
    Ok(acc.total())
}

/// `Σ |singular factors|` over the whole index lattice, skipped indices
/// and vanishing outer weights included: the magnitude the kernel-based
/// routes work with before their terms cancel. Points within
/// [`SINGULAR_TERM_TOL`] of a pole are left out.
pub fn singular_scale(spec: &SumSpec) -> f64 {
    let family = spec.family;
    let (first, second) = (family.first_factor(), family.second_factor());
    let lattice = family.lattice(spec.d) as f64;
    let b2 = spec.b2;
    let mut acc = Neumaier::default();
    for j in 0..family.term_count(spec.d) {
        let base = j as f64 / lattice;
        let x = base + spec.b;
        if pole_distance(first, x).is_some_and(|d| d <= SINGULAR_TERM_TOL) {
            continue;
        }
        let mut v = factor_value(first, x)
            .abs()
            .powi(family.power(spec.n) as i32);
        if let (Some(f), Some(b2)) = (second, b2) {
            let y = base + b2;
            if pole_distance(f, y).is_some_and(|d| d <= SINGULAR_TERM_TOL) {
                continue;
            }
            v *= factor_value(f, y).abs();
        }
        acc.add(v);
    }
    acc.total()
}

/// Minimum radian distance from any singular factor's argument to its
/// nearest pole, over all terms. Infinite when no factor can be singular.
pub fn conditioning(spec: &SumSpec) -> f64 {
    let family = spec.family;
    let first = family.first_factor();
    let second = family.second_factor();
    let Ok(args) = term_args(spec) else {
        return f64::INFINITY;
    };
    let mut min = f64::INFINITY;
    for a in args {
        if let Some(dist) = pole_distance(first, a.first) {
            min = min.min(dist);
        }
        if let (Some(f), Some(x)) = (second, a.second) {
            if let Some(dist) = pole_distance(f, x) {
                min = min.min(dist);
            }
        }
    }
    min
}
