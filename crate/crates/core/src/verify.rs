//! Grid sweeps comparing the evaluation paths against each other.

use serde::{Deserialize, Serialize};

use crate::closed_form::{self, validate_params, Family, SumSpec};
use crate::error::Error;
use crate::oracle;
use crate::residue::{sum_via_residues, IntegrandDescriptor};

/// Conditioning (radians to the nearest pole) below which errors are scaled
/// by the absolute sum instead of the value.
pub const ILL_CONDITIONED: f64 = 0.01;

/// Rounding allowance, in units of `ε·`[`oracle::singular_scale`], added to
/// every comparison budget. Kernel-based routes resolve a sum only down to
/// this floor, whatever its value.
pub const ROUNDING_FLOOR_ULPS: f64 = 16.0;

/// The fixed shift offsets used for every grid at modulus `d`.
pub fn published_offsets(d: u32) -> [f64; 3] {
    let d = d as f64;
    [0.137, 1.0 / 3.0 + 1.0 / (7.0 * d), 0.5 / d + 0.01]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSet {
    pub closed: bool,
    pub oracle: bool,
    pub residue: bool,
}

impl PathSet {
    pub const ALL: PathSet = PathSet {
        closed: true,
        oracle: true,
        residue: true,
    };

    pub fn count(&self) -> usize {
        [self.closed, self.oracle, self.residue]
            .iter()
            .filter(|&&p| p)
            .count()
    }
}

impl Default for PathSet {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One grid point evaluated on every selected path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: SumSpec,
    pub closed_form: Option<f64>,
    pub oracle: Option<f64>,
    pub residue: Option<f64>,
    /// Largest pairwise difference among the available values.
    pub abs_err: Option<f64>,
    /// `abs_err` over the comparison scale.
    pub rel_err: Option<f64>,
    pub conditioning: f64,
    /// Absolute error allowed on top of `tol` times the comparison scale.
    pub rounding_floor: f64,
    pub status: Status,
    /// First evaluation error, if any path failed outright.
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Comparison scale: `max(1, |value|)`, or `max(1, Σ|terms|)` near a pole
/// where cancellation makes the value itself a poor yardstick.
pub fn comparison_scale(spec: &SumSpec, reference: f64, conditioning: f64) -> f64 {
    let scale = if conditioning < ILL_CONDITIONED {
        oracle::absolute_sum(spec).unwrap_or(reference.abs())
    } else {
        reference.abs()
    };
    scale.max(1.0)
}

/// `ROUNDING_FLOOR_ULPS · ε · Σ|singular factors|`.
pub fn rounding_floor(spec: &SumSpec) -> f64 {
    ROUNDING_FLOOR_ULPS * f64::EPSILON * oracle::singular_scale(spec)
}

/// Whether `a` and `b` agree to `tol` relative on the comparison scale, plus
/// the rounding floor.
pub fn agrees(spec: &SumSpec, a: f64, b: f64, tol: f64) -> bool {
    let scale = comparison_scale(spec, b, oracle::conditioning(spec));
    (a - b).abs() <= tol * scale + rounding_floor(spec)
}

/// Evaluate `spec` on the selected paths and compare every pair.
pub fn verify_spec(spec: &SumSpec, paths: PathSet, tol: f64) -> VerificationReport {
    let mut error: Option<Error> = None;
    let mut run = |enabled: bool, f: &dyn Fn() -> crate::Result<f64>| -> Option<f64> {
        if !enabled {
            return None;
        }
        match f() {
            Ok(v) => Some(v),
            Err(e) => {
                error.get_or_insert(e);
                None
            }
        }
    };
    let closed = run(paths.closed, &|| {
        closed_form::evaluate(spec).map(|v| v.value)
    });
    let direct = run(paths.oracle, &|| oracle::direct_sum(spec).map(|v| v.value));
    let residue = run(
        paths.residue && IntegrandDescriptor::supports(spec.family) && !spec.is_classical(),
        &|| sum_via_residues(spec).map(|v| v.value),
    );

    let conditioning = oracle::conditioning(spec);
    let values: Vec<f64> = [closed, direct, residue].into_iter().flatten().collect();
    let abs_err = if values.len() >= 2 {
        let mut worst = 0.0f64;
        for (i, a) in values.iter().enumerate() {
            for b in &values[i + 1..] {
                let diff = (a - b).abs();
                worst = if diff.is_nan() {
                    f64::NAN
                } else {
                    worst.max(diff)
                };
            }
        }
        Some(worst)
    } else {
        None
    };
    let scale = values
        .first()
        .map_or(1.0, |&v| comparison_scale(spec, v, conditioning));
    let rel_err = abs_err.map(|e| e / scale);
    let rounding_floor = rounding_floor(spec);
    let ok = error.is_none()
        && values.iter().all(|v| v.is_finite())
        && abs_err.is_none_or(|e| e <= tol * scale + rounding_floor);
    VerificationReport {
        spec: *spec,
        closed_form: closed,
        oracle: direct,
        residue,
        abs_err,
        rel_err,
        conditioning,
        rounding_floor,
        status: if ok { Status::Pass } else { Status::Fail },
        error: error.map(|e| e.to_string()),
    }
}

/// Bounds of a verification sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub families: Vec<Family>,
    pub d_max: u32,
    /// Largest power for the families with a free power.
    pub n_max: u32,
    /// Shift override; `None` uses [`published_offsets`].
    pub offsets: Option<Vec<f64>>,
}

impl GridSpec {
    pub fn new(families: Vec<Family>, d_max: u32, n_max: u32) -> Self {
        Self {
            families,
            d_max,
            n_max,
            offsets: None,
        }
    }

    fn offsets_for(&self, d: u32) -> Vec<f64> {
        match &self.offsets {
            Some(list) => list.clone(),
            None => published_offsets(d).to_vec(),
        }
    }
}

/// All valid grid points, ordered by family, power, `d`, `m` and offset
/// index. The second shift of a triple-product family is the next offset in
/// the list, cyclically.
pub fn grid(spec: &GridSpec) -> Vec<SumSpec> {
    let mut out = Vec::new();
    for &family in &spec.families {
        let n_top = if family.has_free_power() {
            spec.n_max.max(1)
        } else {
            1
        };
        for n in 1..=n_top {
            for d in 2..=spec.d_max {
                let offsets = spec.offsets_for(d);
                for m in 1..d {
                    if family.is_odd_cosecant() && m % 2 == 0 {
                        continue;
                    }
                    for (i, &b) in offsets.iter().enumerate() {
                        let mut s = SumSpec::new(family, n, m, d, b);
                        if family.needs_second_shift() {
                            if offsets.len() < 2 {
                                continue;
                            }
                            s = s.with_b2(offsets[(i + 1) % offsets.len()]);
                        }
                        if let Ok(valid) = validate_params(&s) {
                            out.push(valid);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Verify every point of a grid, in grid order.
pub fn verify_grid(spec: &GridSpec, paths: PathSet, tol: f64) -> Vec<VerificationReport> {
    grid(spec)
        .iter()
        .map(|s| verify_spec(s, paths, tol))
        .collect()
}

/// The failing report with the largest relative error, failures without a
/// comparable error ranking first.
pub fn worst_offender(reports: &[VerificationReport]) -> Option<&VerificationReport> {
    reports.iter().filter(|r| !r.passed()).max_by(|a, b| {
        let key =
            |r: &VerificationReport| r.rel_err.filter(|e| e.is_finite()).unwrap_or(f64::INFINITY);
        key(a).total_cmp(&key(b))
    })
}
