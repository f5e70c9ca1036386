#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trigsum::closed_form::{validate_params, Family, SumSpec};
use trigsum::trig::dist_to_integer;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Distance, in lattice cells, from each singular shift to its nearest pole
/// (counting indices the sum skips), and of `b2 - b` from the half-integers
/// when both factors are singular.
pub fn shift_margin(spec: &SumSpec) -> f64 {
    let lattice = f64::from(spec.family.lattice(spec.d));
    let mut margin = f64::INFINITY;
    let mut singular = 0;
    let shifts = [
        (Some(spec.family.first_factor()), Some(spec.b)),
        (spec.family.second_factor(), spec.b2),
    ];
    for (factor, shift) in shifts {
        if let (Some(offset), Some(b)) = (factor.and_then(|f| f.pole_offset()), shift) {
            margin = margin.min(dist_to_integer(lattice * (b - offset)));
            singular += 1;
        }
    }
    if singular == 2 {
        let cross = 2.0 * (spec.b2.unwrap() - spec.b);
        margin = margin.min(dist_to_integer(cross));
    }
    margin
}

/// A random valid spec with [`shift_margin`] at least `min_margin`.
pub fn random_spec(
    rng: &mut ChaCha8Rng,
    families: &[Family],
    n_max: u32,
    d_max: u32,
    min_margin: f64,
) -> SumSpec {
    loop {
        let family = families[rng.random_range(0..families.len())];
        let n = if family.has_free_power() {
            rng.random_range(1..=n_max)
        } else {
            1
        };
        let d = rng.random_range(2..=d_max);
        let m = rng.random_range(1..d);
        let mut spec = SumSpec::new(family, n, m, d, rng.random_range(-1.5..1.5));
        if family.needs_second_shift() {
            spec = spec.with_b2(rng.random_range(-1.5..1.5));
        }
        if let Ok(valid) = validate_params(&spec) {
            if shift_margin(&valid) >= min_margin {
                return valid;
            }
        }
    }
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
