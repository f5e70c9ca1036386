//! Trigonometric functions of `π·x` with the argument reduced modulo 2
//! (i.e. modulo 2π after scaling) before the library call.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Reduces `x` into `[-1, 1]` modulo 2.
#[inline]
pub fn reduce_mod2(x: f64) -> f64 {
    x - 2.0 * (0.5 * x).round()
}

/// Distance from `x` to the nearest integer.
#[inline]
pub fn dist_to_integer(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Distance from `x` to the nearest odd integer.
#[inline]
pub fn dist_to_odd(x: f64) -> f64 {
    2.0 * dist_to_integer(0.5 * (x - 1.0))
}

/// `(sin πx, cos πx)` from an octant reduction, so integers and
/// half-integers give exact zeros and units.
#[inline]
pub fn sin_cos_pi(x: f64) -> (f64, f64) {
    let r = reduce_mod2(x);
    let a = r.abs();
    // fold onto [0, 1/2] then split at 1/4; each subtraction is exact
    let (a, c_sign) = if a > 0.5 { (1.0 - a, -1.0) } else { (a, 1.0) };
    let (s, c) = if a <= 0.25 {
        let t = PI * a;
        (t.sin(), t.cos())
    } else {
        let t = PI * (0.5 - a);
        (t.cos(), t.sin())
    };
    let c = c_sign * c;
    (if r < 0.0 { -s } else { s }, c)
}

#[inline]
pub fn sin_pi(x: f64) -> f64 {
    sin_cos_pi(x).0
}

#[inline]
pub fn cos_pi(x: f64) -> f64 {
    sin_cos_pi(x).1
}

#[inline]
pub fn cot_pi(x: f64) -> f64 {
    let (s, c) = sin_cos_pi(x);
    c / s
}

#[inline]
pub fn tan_pi(x: f64) -> f64 {
    let (s, c) = sin_cos_pi(x);
    s / c
}

#[inline]
pub fn csc_pi(x: f64) -> f64 {
    1.0 / sin_pi(x)
}

#[inline]
pub fn sec_pi(x: f64) -> f64 {
    1.0 / cos_pi(x)
}

/// `exp(i·π·x)`.
#[inline]
pub fn expi_pi(x: f64) -> Complex64 {
    let (s, c) = sin_cos_pi(x);
    Complex64::new(c, s)
}
