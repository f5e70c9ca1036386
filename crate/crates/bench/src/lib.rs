//! Benchmark fixtures.

use trigsum::{Family, SumSpec};

/// Offset kept well away from every lattice used below.
pub const SHIFT: f64 = 0.137;

/// `CosCot` at power `n` with `d` terms and `m = d/3 + 1`.
pub fn cos_cot(n: u32, d: u32) -> SumSpec {
    SumSpec::new(Family::CosCot, n, d / 3 + 1, d, SHIFT)
}

/// One spec per residue-supported family at a mid-sized order.
pub fn residue_mix() -> Vec<SumSpec> {
    [
        Family::CosCot,
        Family::SinCot,
        Family::SinCsc2n,
        Family::CosCsc2n,
        Family::SinCscOdd,
        Family::CosCscOdd,
    ]
    .into_iter()
    .map(|f| SumSpec::new(f, 3, 5, 12, SHIFT))
    .collect()
}
