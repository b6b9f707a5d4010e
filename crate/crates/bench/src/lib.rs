//! Fixed inputs shared by the benchmarks.

use sasaki_core::{JoinParams, Poly};

/// Joins with a rational CSC root, an irrational one, and a large genus.
pub fn joins() -> Vec<(&'static str, JoinParams)> {
    [
        ("g23_w12_1", (23, 1, 12, 1)),
        ("g5_w12_1", (5, 1, 12, 1)),
        ("g7_w1_1", (7, 1, 1, 1)),
        ("g1000_l7_w9_4", (1000, 7, 9, 4)),
    ]
    .into_iter()
    .map(|(name, (g, l, w1, w2))| (name, JoinParams::new(g, l, w1, w2).unwrap()))
    .collect()
}

/// `∏ (x - i/7)` for `i` in `1..=n`, times `x² - 2`: many close rational roots plus
/// two irrational ones.
pub fn clustered_poly(n: i64) -> Poly {
    (1..=n).fold(Poly::from_ints(&[-2, 0, 1]), |acc, i| {
        &acc * &Poly::from_ints(&[-i, 7])
    })
}

/// The quartic boundary polynomial of the `g = 23`, `w = (12, 1)` region.
pub fn region_quartic() -> Poly {
    Poly::from_ints(&[37, 5820, 197748, -1528416, 1622592])
}
