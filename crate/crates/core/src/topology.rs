//! Join-parameter bookkeeping for the 5-manifolds `M³_g ⋆_{l,1} S³_w`.
//!
//! A join is fixed by the genus `g`, the positive integer `l`, and a coprime weight
//! pair `w = (w1, w2)` with `w1 ≥ w2`. Equivalently it is fixed by the Kähler-class
//! data `(k, m)` together with the parity of `n = l(w1 - w2)`, which also decides
//! whether the manifold is `Σ_g × S³` or the non-trivial bundle.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{from_u64, int, serde_str, Rational};

/// Which of the two `S³`-bundles over `Σ_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bundle {
    /// `Σ_g × S³`: `l·|w|` (equivalently `n`) even.
    Trivial,
    /// The non-trivial bundle `Σ_g ×̃ S³`: `l·|w|` odd.
    NonTrivial,
}

impl Bundle {
    pub fn from_parity(value: u64) -> Self {
        if value.is_multiple_of(2) {
            Bundle::Trivial
        } else {
            Bundle::NonTrivial
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Bundle::Trivial => "trivial",
            Bundle::NonTrivial => "nontrivial",
        }
    }

    pub fn manifold(self) -> &'static str {
        match self {
            Bundle::Trivial => "Σ_g × S³",
            Bundle::NonTrivial => "Σ_g ×̃ S³",
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Bundle {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "trivial" | "even" => Ok(Bundle::Trivial),
            "nontrivial" | "non-trivial" | "odd" => Ok(Bundle::NonTrivial),
            other => Err(format!("unknown bundle {other:?}: expected trivial or nontrivial")),
        }
    }
}

/// A coprime pair of positive integers: a weight vector `w` or a Reeb weight `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub v1: u64,
    pub v2: u64,
}

impl WeightVector {
    pub fn new(v1: u64, v2: u64) -> Result<Self> {
        if v1 == 0 {
            return Err(Error::NonPositive { name: "v1", value: 0 });
        }
        if v2 == 0 {
            return Err(Error::NonPositive { name: "v2", value: 0 });
        }
        if v1.gcd(&v2) != 1 {
            return Err(Error::NotCoprime(v1, v2));
        }
        Ok(WeightVector { v1, v2 })
    }

    pub const REGULAR: WeightVector = WeightVector { v1: 1, v2: 1 };

    /// The ray with slope `c = v2 / v1`, in lowest terms.
    pub fn from_slope(c: &Rational) -> Result<Self> {
        use num_traits::{Signed, ToPrimitive};
        if !c.is_positive() {
            return Err(Error::NonPositiveSlope(crate::exact::format_rational(c)));
        }
        let too_big = || Error::NonPositiveSlope(format!("{c} (components exceed u64)"));
        let v2 = c.numer().to_u64().ok_or_else(too_big)?;
        let v1 = c.denom().to_u64().ok_or_else(too_big)?;
        WeightVector::new(v1, v2)
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.v2.into(), self.v1.into())
    }

    pub fn as_array(&self) -> [u64; 2] {
        [self.v1, self.v2]
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v1, self.v2)
    }
}

/// The integers `(g, l, w1, w2)` defining the join, normalized so `w1 ≥ w2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinParams {
    pub g: u64,
    pub l: u64,
    pub w1: u64,
    pub w2: u64,
    /// Set when the caller passed `w1 < w2` and the weights were swapped.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub weights_swapped: bool,
}

impl JoinParams {
    pub fn new(g: u64, l: u64, w1: u64, w2: u64) -> Result<Self> {
        if g == 0 {
            return Err(Error::GenusZero);
        }
        if l == 0 {
            return Err(Error::NonPositive { name: "l", value: 0 });
        }
        let w = WeightVector::new(w1, w2)?;
        let swapped = w.v1 < w.v2;
        let (w1, w2) = if swapped { (w.v2, w.v1) } else { (w.v1, w.v2) };
        Ok(JoinParams { g, l, w1, w2, weights_swapped: swapped })
    }

    /// The join realizing the Kähler data `(k, m)` on the given bundle.
    pub fn from_km(g: u64, k: u64, m: u64, bundle: Bundle) -> Result<Self> {
        let (l, w) = params_from_km(k, m, bundle)?;
        JoinParams::new(g, l, w.v1, w.v2)
    }

    pub fn w(&self) -> WeightVector {
        WeightVector { v1: self.w1, v2: self.w2 }
    }

    /// `|w| = w1 + w2`
    pub fn weight_sum(&self) -> u64 {
        self.w1 + self.w2
    }

    pub fn is_smooth_join(&self) -> bool {
        self.w1 == 1 && self.w2 == 1
    }

    /// True when `v` spans the same ray as `w` (the product ray).
    pub fn is_product_ray(&self, v: WeightVector) -> bool {
        self.w1 as u128 * v.v2 as u128 == self.w2 as u128 * v.v1 as u128
    }
}

impl fmt::Display for JoinParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={} l={} w=({},{})", self.g, self.l, self.w1, self.w2)
    }
}

/// Contact invariants of `D_{l,w}` and the regular-quotient data `(k, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContactInvariants {
    /// `c₁(D_{l,w}) = c1_coefficient · γ`, with `c1_coefficient = 2 - 2g - l|w|`.
    pub c1_coefficient: i64,
    pub bundle_type: Bundle,
    pub k: u64,
    pub m: u64,
    pub n: i64,
}

/// Recovers `(l, w)` from `(k, m)` and the parity of `n`.
pub fn params_from_km(k: u64, m: u64, bundle: Bundle) -> Result<(u64, WeightVector)> {
    if k == 0 {
        return Err(Error::NonPositive { name: "k", value: 0 });
    }
    if m >= k {
        return Err(Error::NotKahlerClass { k, m });
    }
    let (a, b) = match bundle {
        Bundle::Trivial => (k + m, k - m),
        Bundle::NonTrivial => (k + m + 1, k - m),
    };
    let l = a.gcd(&b);
    Ok((l, WeightVector { v1: a / l, v2: b / l }))
}

pub fn km_from_params(params: &JoinParams) -> ContactInvariants {
    let total = params.l * params.weight_sum();
    let n = params.l * (params.w1 - params.w2);
    let k = total / 2;
    let m = n / 2;
    ContactInvariants {
        c1_coefficient: 2 - 2 * params.g as i64 - total as i64,
        bundle_type: Bundle::from_parity(total),
        k,
        m,
        n: n as i64,
    }
}

pub fn contact_invariants(params: &JoinParams) -> ContactInvariants {
    km_from_params(params)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetRow {
    pub m: u64,
    pub l: u64,
    pub w: WeightVector,
}

/// The `k` two-dimensional Sasaki cones of the contact structure `D_k`, one per `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetTable {
    pub g: u64,
    pub k: u64,
    pub bundle: Bundle,
    pub c1_coefficient: i64,
    pub rows: Vec<BouquetRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub const NONTRIVIAL_BOUQUET_NOTE: &str =
    "torus non-conjugacy is established only for the trivial bundle; rows listed, not asserted to form a bouquet";

pub fn bouquet_table(g: u64, k: u64, bundle: Bundle) -> Result<BouquetTable> {
    if g == 0 {
        return Err(Error::GenusZero);
    }
    let rows = (0..k)
        .map(|m| params_from_km(k, m, bundle).map(|(l, w)| BouquetRow { m, l, w }))
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::NonPositive { name: "k", value: 0 });
    }
    let first = JoinParams::new(g, rows[0].l, rows[0].w.v1, rows[0].w.v2)?;
    Ok(BouquetTable {
        g,
        k,
        bundle,
        c1_coefficient: contact_invariants(&first).c1_coefficient,
        rows,
        note: (bundle == Bundle::NonTrivial).then(|| NONTRIVIAL_BOUQUET_NOTE.to_string()),
    })
}

impl BouquetTable {
    /// Plain-text table, rows in ascending `m`.
    pub fn render(&self) -> String {
        let shift = match self.bundle {
            Bundle::Trivial => 2 * self.k,
            Bundle::NonTrivial => 2 * self.k + 1,
        };
        let mut out = format!(
            "{} with contact structure D_{}, c1(D_{}) = (2-2g-{})γ = {}γ at g = {}\n",
            self.bundle.manifold(),
            self.k,
            self.k,
            shift,
            self.c1_coefficient,
            self.g
        );
        let cells: Vec<[String; 3]> = self
            .rows
            .iter()
            .map(|r| [r.m.to_string(), r.l.to_string(), r.w.to_string()])
            .collect();
        let header = ["m".to_string(), "l".to_string(), "w".to_string()];
        let widths: Vec<usize> = (0..3)
            .map(|i| cells.iter().chain([&header]).map(|c| c[i].chars().count()).max().unwrap())
            .collect();
        let line = |c: &[String; 3]| {
            let text = format!(
                "{:<w0$} | {:<w1$} | {:<w2$}",
                c[0],
                c[1],
                c[2],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2]
            );
            format!("{}\n", text.trim_end())
        };
        out.push_str(&line(&header));
        out.push_str(&format!(
            "{}-+-{}-+-{}\n",
            "-".repeat(widths[0]),
            "-".repeat(widths[1]),
            "-".repeat(widths[2])
        ));
        for c in &cells {
            out.push_str(&line(c));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Which section each ramification index sits over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ramification {
    /// Index `v1` along the zero section `E_n`.
    pub zero_section: u64,
    /// Index `v2` along the infinity section `E'_n`.
    pub infinity_section: u64,
}

/// The orbifold pseudo-Hirzebruch surface `(S_n, Δ_v)` obtained as the quotient by
/// the Reeb field `ξ_v`, with the admissible data `(r, p, q, s_Σ)` attached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientOrbifold {
    pub n: i64,
    pub ramification: Ramification,
    pub k: u64,
    #[serde(with = "serde_str")]
    pub r: Rational,
    pub p: u64,
    pub q: u64,
    #[serde(with = "serde_str")]
    pub s_sigma: Rational,
}

pub fn quotient_orbifold(params: &JoinParams, v: WeightVector) -> Result<QuotientOrbifold> {
    if params.is_product_ray(v) {
        return Err(Error::ProductRay);
    }
    let l = params.l as i128;
    let a = params.w1 as i128 * v.v2 as i128;
    let b = params.w2 as i128 * v.v1 as i128;
    let n = l * (a - b);
    let total = (l * (a + b)) as u64;
    let n_rat = Rational::from_integer(n.into());
    Ok(QuotientOrbifold {
        n: n as i64,
        ramification: Ramification { zero_section: v.v1, infinity_section: v.v2 },
        k: total / 2,
        r: Rational::new((a - b).into(), (a + b).into()),
        p: v.v2,
        q: v.v1,
        s_sigma: int(2) * (int(1) - from_u64(params.g)) / n_rat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn wv(a: u64, b: u64) -> WeightVector {
        WeightVector::new(a, b).unwrap()
    }

    #[test]
    fn km_to_params_examples() {
        assert_eq!(params_from_km(4, 2, Bundle::Trivial).unwrap(), (2, wv(3, 1)));
        assert_eq!(params_from_km(4, 1, Bundle::NonTrivial).unwrap(), (3, wv(2, 1)));
        assert_eq!(params_from_km(4, 0, Bundle::Trivial).unwrap(), (4, wv(1, 1)));
        let err = params_from_km(4, 4, Bundle::Trivial).unwrap_err();
        assert_eq!(err, Error::NotKahlerClass { k: 4, m: 4 });
        assert!(err.to_string().contains("not a Kähler class"));
    }

    #[test]
    fn params_to_km_examples() {
        let ci = km_from_params(&JoinParams::new(2, 1, 5, 3).unwrap());
        assert_eq!((ci.n, ci.m, ci.k, ci.c1_coefficient, ci.bundle_type), (2, 1, 4, -10, Bundle::Trivial));
        let ci = km_from_params(&JoinParams::new(3, 1, 8, 1).unwrap());
        assert_eq!((ci.n, ci.m, ci.k, ci.c1_coefficient, ci.bundle_type), (7, 3, 4, -13, Bundle::NonTrivial));
        let ci = km_from_params(&JoinParams::new(1, 1, 1, 1).unwrap());
        assert_eq!((ci.n, ci.m, ci.k, ci.c1_coefficient, ci.bundle_type), (0, 0, 1, -2, Bundle::Trivial));
    }

    #[test]
    fn contact_invariant_examples() {
        let ci = contact_invariants(&JoinParams::new(2, 1, 11, 1).unwrap());
        assert_eq!((ci.c1_coefficient, ci.bundle_type, ci.k, ci.m), (-14, Bundle::Trivial, 6, 5));
        let ci = contact_invariants(&JoinParams::new(2, 1, 12, 1).unwrap());
        assert_eq!((ci.c1_coefficient, ci.bundle_type, ci.k, ci.m), (-15, Bundle::NonTrivial, 6, 5));
        let ci = contact_invariants(&JoinParams::new(1, 2, 1, 1).unwrap());
        assert_eq!((ci.c1_coefficient, ci.bundle_type), (-4, Bundle::Trivial));
    }

    #[test]
    fn validation() {
        assert_eq!(JoinParams::new(0, 1, 1, 1), Err(Error::GenusZero));
        assert_eq!(JoinParams::new(2, 1, 4, 2), Err(Error::NotCoprime(4, 2)));
        assert!(matches!(JoinParams::new(2, 0, 1, 1), Err(Error::NonPositive { name: "l", .. })));
        let p = JoinParams::new(2, 1, 1, 12).unwrap();
        assert_eq!((p.w1, p.w2, p.weights_swapped), (12, 1, true));
        assert!(!JoinParams::new(2, 1, 12, 1).unwrap().weights_swapped);
    }

    #[test]
    fn bouquet_tables_match_reference() {
        let t = bouquet_table(2, 4, Bundle::Trivial).unwrap();
        let rows: Vec<_> = t.rows.iter().map(|r| (r.m, r.l, r.w.v1, r.w.v2)).collect();
        assert_eq!(rows, vec![(0, 4, 1, 1), (1, 1, 5, 3), (2, 2, 3, 1), (3, 1, 7, 1)]);
        assert_eq!(t.c1_coefficient, 2 - 4 - 8);
        assert!(t.note.is_none());
        let t = bouquet_table(2, 4, Bundle::NonTrivial).unwrap();
        let rows: Vec<_> = t.rows.iter().map(|r| (r.m, r.l, r.w.v1, r.w.v2)).collect();
        assert_eq!(rows, vec![(0, 1, 5, 4), (1, 3, 2, 1), (2, 1, 7, 2), (3, 1, 8, 1)]);
        assert_eq!(t.c1_coefficient, 2 - 4 - 9);
        assert!(t.note.is_some());
        let t = bouquet_table(5, 1, Bundle::Trivial).unwrap();
        assert_eq!(t.rows, vec![BouquetRow { m: 0, l: 1, w: wv(1, 1) }]);
    }

    #[test]
    fn bouquet_render_lists_rows_in_order() {
        let text = bouquet_table(2, 4, Bundle::Trivial).unwrap().render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "m | l | w");
        assert_eq!(lines[3], "0 | 4 | (1,1)");
        assert_eq!(lines[6], "3 | 1 | (7,1)");
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_orbifold(&JoinParams::new(23, 1, 12, 1).unwrap(), wv(6, 1)).unwrap();
        assert_eq!((q.n, q.p, q.q), (6, 1, 6));
        assert_eq!(q.r, rat(1, 3));
        assert_eq!(q.s_sigma, rat(-22, 3));
        let q = quotient_orbifold(&JoinParams::new(2, 1, 2, 1).unwrap(), wv(1, 1)).unwrap();
        assert_eq!((q.n, q.p, q.q), (1, 1, 1));
        assert_eq!(q.r, rat(1, 3));
        assert_eq!(q.s_sigma, int(-2));
        assert_eq!(
            quotient_orbifold(&JoinParams::new(1, 1, 2, 1).unwrap(), wv(2, 1)),
            Err(Error::ProductRay)
        );
    }

    #[test]
    fn negative_degree_quotient() {
        // c = 1/24 < w2/w1 = 1/12
        let q = quotient_orbifold(&JoinParams::new(3, 1, 12, 1).unwrap(), wv(24, 1)).unwrap();
        assert_eq!(q.n, -12);
        assert_eq!(q.r, rat(-1, 3));
        assert_eq!(q.s_sigma, rat(1, 3));
    }

    #[test]
    fn slope_to_weights() {
        assert_eq!(WeightVector::from_slope(&rat(1, 6)).unwrap(), wv(6, 1));
        assert_eq!(WeightVector::from_slope(&rat(10, 16)).unwrap(), wv(8, 5));
        assert!(WeightVector::from_slope(&int(0)).is_err());
    }
}
