//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trigsum::closed_form::{
    corollary_value, evaluate, theorem_sum, validate_params, Family, FamilyGroup, SumSpec,
};
use trigsum::coefficients::{apostol_sequence, cot_coeff, csc_coeff, Rational};
use trigsum::oracle::{conditioning, direct_sum};
use trigsum::residue::{sum_via_residues, IntegrandDescriptor};
use trigsum::summation::Neumaier;
use trigsum::trig::dist_to_integer;
use trigsum::verify::{comparison_scale, published_offsets, rounding_floor};

const THEOREM_FAMILIES: [Family; 6] = [
    Family::CosCot,
    Family::SinCot,
    Family::SinCsc2n,
    Family::CosCsc2n,
    Family::SinCscOdd,
    Family::CosCscOdd,
];

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Self {
            ok,
            detail: detail.into(),
        }
    }
}

/// Running tally of one path-vs-path comparison suite.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
    worst_rel: f64,
    /// Cases inside the budget only thanks to the rounding floor.
    floor_only: usize,
}

impl Tally {
    fn compare(&mut self, spec: &SumSpec, value: f64, reference: f64, tol: f64) {
        self.cases += 1;
        let scale = comparison_scale(spec, reference, conditioning(spec));
        let err = (value - reference).abs();
        let rel = err / scale;
        if rel.is_nan() || rel > self.worst_rel {
            self.worst_rel = rel;
        }
        let strict = err <= tol * scale;
        let budget = strict || err <= tol * scale + rounding_floor(spec);
        if !budget {
            self.failures
                .push(format!("{spec:?}: {value} vs {reference} (rel {rel:e})"));
        } else if !strict {
            self.floor_only += 1;
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.failures.push(what);
    }

    fn outcome(&self, extra: &str) -> Outcome {
        let mut detail = format!(
            "{} cases, worst rel {:.2e}, {} within rounding floor only",
            self.cases, self.worst_rel, self.floor_only
        );
        if !extra.is_empty() {
            detail.push_str(", ");
            detail.push_str(extra);
        }
        if let Some(first) = self.failures.first() {
            detail.push_str(&format!(
                "; {} failures, first: {first}",
                self.failures.len()
            ));
        }
        Outcome::new(self.failures.is_empty() && self.cases > 0, detail)
    }
}

fn valid(spec: SumSpec) -> Option<SumSpec> {
    validate_params(&spec).ok()
}

fn c1_classical() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for d in 2..=50u32 {
        for m in 1..d {
            let v = direct_sum(&SumSpec::new(Family::SinCot, 1, m, d, 0.0)).map(|v| v.value);
            let err = v.map_or(f64::INFINITY, |v| {
                (v - (f64::from(d) - 2.0 * f64::from(m))).abs()
            });
            worst = worst.max(err);
            count += 1;
        }
    }
    Outcome::new(
        worst <= 1e-10,
        format!("{count} cases, worst abs err {worst:.2e}"),
    )
}

fn c2_value_d() -> Outcome {
    let mut worst_closed = 0.0f64;
    let mut worst_direct = 0.0f64;
    let mut count = 0;
    for d in 2..=25u32 {
        let b = 0.25 / f64::from(d);
        for m in 1..d {
            let a = PI * f64::from(m) / (2.0 * f64::from(d));
            let e1 = evaluate(&SumSpec::new(Family::CosCot, 1, m, d, b)).map(|v| v.value);
            let g1 = evaluate(&SumSpec::new(Family::SinCot, 1, m, d, b)).map(|v| v.value);
            let combo = match (e1, g1) {
                (Ok(e1), Ok(g1)) => a.cos() * e1 - a.sin() * g1,
                _ => f64::NAN,
            };
            let direct: Neumaier = (0..d)
                .map(|j| {
                    let x = 2.0 * PI * f64::from(m * j) / f64::from(d) + a;
                    let y = PI * (f64::from(j) / f64::from(d) + b);
                    x.cos() / y.tan()
                })
                .collect();
            let target = f64::from(d);
            worst_closed = worst_closed
                .max((combo - target).abs())
                .max(if combo.is_nan() { f64::INFINITY } else { 0.0 });
            worst_direct = worst_direct.max((direct.total() - target).abs());
            count += 1;
        }
    }
    Outcome::new(
        worst_closed <= 1e-8 && worst_direct <= 1e-8,
        format!(
            "{count} cases, worst abs err {worst_closed:.2e} (closed forms), {worst_direct:.2e} (phase-shifted direct sum)"
        ),
    )
}

fn c3_corollaries() -> Outcome {
    let families = THEOREM_FAMILIES.into_iter().chain([
        Family::CosTan,
        Family::SinTan,
        Family::CosCot2d,
        Family::SinCot2d,
    ]);
    let mut tally = Tally::default();
    for family in families {
        for d in 2..=30u32 {
            for m in 1..d {
                if family.is_odd_cosecant() && m % 2 == 0 {
                    continue;
                }
                for b in published_offsets(d) {
                    let Some(spec) = valid(SumSpec::new(family, 1, m, d, b)) else {
                        continue;
                    };
                    match (evaluate(&spec), direct_sum(&spec)) {
                        (Ok(cf), Ok(or)) => tally.compare(&spec, cf.value, or.value, 1e-8),
                        (cf, or) => tally.fail(format!("{spec:?}: {cf:?} / {or:?}")),
                    }
                }
            }
        }
    }
    tally.outcome("")
}

/// Three `(m, b)` samples per `(family, n, d)` with `n ≤ 4`, `d ≤ 15`:
/// seeded random `m`, one published offset each.
fn theorem_grid() -> Vec<SumSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    for family in THEOREM_FAMILIES {
        for n in 1..=4 {
            for d in 2..=15u32 {
                for b in published_offsets(d) {
                    for _ in 0..32 {
                        let m = rng.random_range(1..d);
                        if let Some(spec) = valid(SumSpec::new(family, n, m, d, b)) {
                            out.push(spec);
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

fn c4_theorems() -> Outcome {
    let mut tally = Tally::default();
    for spec in theorem_grid() {
        match (theorem_sum(&spec), direct_sum(&spec)) {
            (Ok(t), Ok(or)) => {
                tally.compare(&spec, t.value, or.value, 1e-7);
                if t.imag_residual > 1e-9 * t.value.abs().max(1.0) {
                    tally.fail(format!(
                        "{spec:?}: imaginary residual {:e}",
                        t.imag_residual
                    ));
                }
            }
            (t, or) => tally.fail(format!("{spec:?}: {t:?} / {or:?}")),
        }
    }
    tally.outcome("")
}

fn random_residue_spec(rng: &mut ChaCha8Rng) -> SumSpec {
    let families: Vec<Family> = Family::ALL
        .into_iter()
        .filter(|f| IntegrandDescriptor::supports(*f))
        .collect();
    loop {
        let family = families[rng.random_range(0..families.len())];
        let n = if family.has_free_power() {
            rng.random_range(1..=3)
        } else {
            1
        };
        let d = rng.random_range(2..=12u32);
        let m = rng.random_range(1..d);
        let b: f64 = rng.random_range(-1.0..1.0);
        let mut spec = SumSpec::new(family, n, m, d, b);
        if family.needs_second_shift() {
            spec = spec.with_b2(rng.random_range(-1.0..1.0));
        }
        // keep shifts a tenth of a lattice cell from the poles
        if dist_to_integer(b * f64::from(d)) < 0.1 {
            continue;
        }
        if let Some(spec) = valid(spec) {
            return spec;
        }
    }
}

fn c5_residues() -> Outcome {
    let mut tally = Tally::default();
    for spec in theorem_grid().into_iter().filter(|s| s.n <= 3) {
        match (sum_via_residues(&spec), direct_sum(&spec)) {
            (Ok(r), Ok(or)) => tally.compare(&spec, r.value, or.value, 1e-7),
            (r, or) => tally.fail(format!("{spec:?}: {r:?} / {or:?}")),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut worst_closure = 0.0f64;
    for _ in 0..100 {
        let spec = random_residue_spec(&mut rng);
        let Ok(desc) = IntegrandDescriptor::from_spec(&spec) else {
            tally.fail(format!("{spec:?}: descriptor rejected"));
            continue;
        };
        let boundary = desc.boundary_residues();
        let interior = desc
            .residue_at_interior_pole()
            .unwrap_or(Complex64::new(f64::NAN, 0.0));
        let total = (boundary.iter().sum::<Complex64>() + interior).norm();
        let max = boundary.iter().map(|z| z.norm()).fold(0.0, f64::max);
        // sine sums with 2m = d vanish term by term, leaving no relative scale
        let bound = if max == 0.0 { 1e-12 } else { 1e-10 * max };
        if max > 0.0 {
            worst_closure = worst_closure.max(total / max);
        }
        if total.is_nan() || total > bound {
            tally.fail(format!(
                "{spec:?}: closure {total:e} vs max residue {max:e}"
            ));
        }
    }

    let mut worst_res0 = 0.0f64;
    for d in 2..=20u32 {
        for n in 1..=6u32 {
            for b in published_offsets(d) {
                let Some(spec) = valid(SumSpec::new(Family::CosCot, n, 1, d, b)) else {
                    continue;
                };
                let res0 = IntegrandDescriptor::from_spec(&spec)
                    .map(|desc| desc.boundary_residues()[0])
                    .unwrap_or(Complex64::new(f64::NAN, 0.0));
                let printed =
                    (PI * b).tan().recip().powi(n as i32) / Complex64::new(0.0, PI * f64::from(d));
                let rel = (res0 - printed).norm() / printed.norm();
                worst_res0 = worst_res0.max(rel);
                if rel.is_nan() || rel > 1e-10 {
                    tally.fail(format!("{spec:?}: Res(f, 0) {res0} vs {printed}"));
                }
            }
        }
    }
    tally.outcome(&format!(
        "100 closures worst {worst_closure:.2e}, Res(f,0) worst rel {worst_res0:.2e}"
    ))
}

fn c6_triple_products() -> Outcome {
    let mut tally = Tally::default();
    let mut parities = [false, false];
    for family in Family::ALL
        .into_iter()
        .filter(|f| f.group() == FamilyGroup::Triple)
    {
        for d in 2..=20u32 {
            let offsets = published_offsets(d);
            for m in 1..d {
                for (i, &b) in offsets.iter().enumerate() {
                    let b2 = offsets[(i + 1) % offsets.len()];
                    let Some(spec) = valid(SumSpec::new(family, 1, m, d, b).with_b2(b2)) else {
                        continue;
                    };
                    parities[(d % 2) as usize] = true;
                    match (evaluate(&spec), direct_sum(&spec)) {
                        (Ok(cf), Ok(or)) => tally.compare(&spec, cf.value, or.value, 1e-8),
                        (cf, or) => tally.fail(format!("{spec:?}: {cf:?} / {or:?}")),
                    }
                }
            }
        }
    }
    let mut collapses = 0;
    for d in 2..=20u32 {
        for m in 1..d {
            for b in published_offsets(d) {
                for (tri, cot) in [
                    (Family::CosCscCos, Family::CosCot),
                    (Family::SinCscCos, Family::SinCot),
                ] {
                    let Some(spec) = valid(SumSpec::new(tri, 1, m, d, b).with_b2(b)) else {
                        continue;
                    };
                    let reference = corollary_value(&SumSpec::new(cot, 1, m, d, b));
                    match (evaluate(&spec), reference) {
                        (Ok(t), Ok(c)) => tally.compare(&spec, t.value, c.value, 1e-8),
                        (t, c) => tally.fail(format!("{spec:?}: {t:?} / {c:?}")),
                    }
                    collapses += 1;
                }
            }
        }
    }
    if !(parities[0] && parities[1]) {
        tally.fail("grid misses an even or odd d branch".into());
    }
    tally.outcome(&format!("{collapses} of them b1 = b2 reductions"))
}

fn c7_coefficients() -> Outcome {
    let q = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let cot = [q(1, 1), q(-1, 3), q(-1, 45), q(-2, 945)];
    let csc = [q(-1, 1), q(-1, 6), q(-7, 360), q(-31, 15120)];
    let mut problems = Vec::new();
    for j in 0..4 {
        if cot_coeff(j).ok().as_ref() != Some(&cot[j]) {
            problems.push(format!("C_{j}"));
        }
        if csc_coeff(j).ok().as_ref() != Some(&csc[j]) {
            problems.push(format!("G_{j}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_closed = 0.0f64;
    let mut worst_recurrence = 0.0f64;
    for _ in 0..500 {
        let t = Complex64::from_polar(rng.random_range(0.2..3.0), rng.random_range(0.0..2.0 * PI));
        if (t - 1.0).norm() < 0.1 {
            continue;
        }
        let Ok(a) = apostol_sequence(10, t) else {
            problems.push(format!("A(t) failed at t = {t}"));
            continue;
        };
        let u = t - 1.0;
        let closed = [
            1.0 / u,
            -t / (u * u),
            t * (t + 1.0) / u.powi(3),
            -t * (t * t + 4.0 * t + 1.0) / u.powi(4),
        ];
        for (nu, e) in closed.iter().enumerate() {
            worst_closed = worst_closed.max((a[nu] - e).norm() / e.norm().max(1.0));
        }
        // t·Σ_{k≤ν} binom(ν,k) A_k = A_ν
        for nu in 1..=10usize {
            let mut binom = 1.0;
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, ak) in a.iter().enumerate().take(nu + 1) {
                acc += ak * binom;
                binom *= (nu - k) as f64 / (k + 1) as f64;
            }
            let scale = a.iter().take(nu + 1).map(|x| x.norm()).fold(1.0, f64::max);
            worst_recurrence = worst_recurrence.max((t * acc - a[nu]).norm() / scale);
        }
    }
    let ok = problems.is_empty() && worst_closed <= 1e-12 && worst_recurrence <= 1e-12;
    Outcome::new(
        ok,
        format!(
            "C_0..C_3, G_0..G_3 exact{}; A_0..A_3 worst rel {worst_closed:.2e}; recurrence worst {worst_recurrence:.2e}",
            if problems.is_empty() {
                String::new()
            } else {
                format!(" except {problems:?}")
            }
        ),
    )
}

fn c8_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_trigsum");
    let mut notes = Vec::new();
    let mut ok = true;

    let status = Command::new(bin)
        .args(["verify", "--dmax", "10"])
        .env_remove("TRIGSUM_TOL")
        .output();
    match status {
        Ok(out) if out.status.code() == Some(0) => notes.push("verify exit 0".to_string()),
        other => {
            ok = false;
            notes.push(format!("verify: {other:?}"));
        }
    }

    let path = std::env::temp_dir().join(format!("trigsum-acceptance-{}.csv", std::process::id()));
    let table = Command::new(bin)
        .args(["table", "--family", "all", "--dmax", "3", "--out"])
        .arg(&path)
        .output();
    let header = "family,n,d,m,b,b2,closed_form,oracle,residue,abs_err,rel_err,conditioning,status";
    match (table, std::fs::read_to_string(&path)) {
        (Ok(out), Ok(text)) if out.status.success() => {
            if text.lines().next() == Some(header) {
                notes.push("CSV header exact".to_string());
            } else {
                ok = false;
                notes.push(format!("CSV header {:?}", text.lines().next()));
            }
        }
        other => {
            ok = false;
            notes.push(format!("table: {other:?}"));
        }
    }
    let _ = std::fs::remove_file(&path);

    let corrupted = Command::new(bin)
        .args(["verify", "--dmax", "10"])
        .env("TRIGSUM_TOL", "1e-30")
        .output();
    match corrupted {
        Ok(out) if out.status.code() == Some(3) => {
            notes.push("TRIGSUM_TOL=1e-30 exit 3".to_string())
        }
        other => {
            ok = false;
            notes.push(format!("corrupted tolerance: {other:?}"));
        }
    }
    Outcome::new(ok, notes.join(", "))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "classical identity d - 2m",
            Duration::from_secs(1),
            c1_classical,
        ),
        (
            "phase-shifted sum has value d",
            Duration::from_secs(1),
            c2_value_d,
        ),
        (
            "first-power closed forms vs oracle",
            Duration::from_secs(10),
            c3_corollaries,
        ),
        (
            "multi-index formulas vs oracle",
            Duration::from_secs(30),
            c4_theorems,
        ),
        ("residue engine", Duration::from_secs(30), c5_residues),
        (
            "triple-product closed forms",
            Duration::from_secs(10),
            c6_triple_products,
        ),
        ("coefficients", Duration::from_secs(10), c7_coefficients),
        ("CLI contract", Duration::from_secs(60), c8_cli),
    ];
    let mut all_ok = true;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let ok = outcome.ok && in_time;
        all_ok &= ok;
        println!(
            "{} [{}] {name}: {} ({:.3}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
