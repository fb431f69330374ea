//! Test-only oracles that share no code with the library's fusion machinery.

#![allow(dead_code)]

use modfusion::walg::WLabel;
use modfusion::Weight;

/// `su(2)` level-`k` fusion multiplicity in dimension labels `r = λ + 1`.
pub fn su2_fusion(k: i64, r1: i64, r2: i64, r3: i64) -> u64 {
    let lo = (r1 - r2).abs() + 1;
    let hi = (r1 + r2 - 1).min(2 * k + 3 - r1 - r2);
    u64::from(r3 >= lo && r3 <= hi && (r1 + r2 + r3) % 2 == 1)
}

/// Virasoro minimal model `M(p, p′)` fusion of Kac labels `(r, s)`,
/// `1 ≤ r < p′`, `1 ≤ s < p`, with `(r, s) ~ (p′ − r, p − s)`.
pub fn bpz_fusion(p_prime: i64, p: i64, a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> u64 {
    let (kr, ks) = (p_prime - 2, p - 2);
    let direct = su2_fusion(kr, a.0, b.0, c.0) * su2_fusion(ks, a.1, b.1, c.1);
    let mirrored = su2_fusion(kr, a.0, b.0, p_prime - c.0) * su2_fusion(ks, a.1, b.1, p - c.1);
    direct + mirrored
}

/// Kac label of a W(A1) label at `(u, v)`: `r = λ + 1`, `s = λ′ + 1`.
pub fn kac_label(x: &WLabel) -> (i64, i64) {
    (x.left.labels()[0] + 1, x.right.labels()[0] + 1)
}

pub fn w(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}
