//! Admissible extremal profiles `h(z)`, `F(z)` and the extremality decisions built on
//! them.
//!
//! For a ray `v` in the Sasaki cone of a join, the quotient is an admissible orbifold
//! ruled surface and the extremal momentum profile is
//! `F(z) = (1 - z²) h(z) / (4pq(3 - r²))` with `h` quadratic. The ray carries an
//! admissible extremal metric exactly when `h > 0` on `(-1, 1)`.

mod region;

pub use region::{
    extremal_region, extremal_region_with_width, CriticalPoint, ExtremalRegion, RegionBound,
    RegionPiece, RegionVerdict,
};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{from_u64, int, serde_opt, serde_str};
use crate::exact::{positive_on_open_interval, Poly, Positivity, Rational};
use crate::topology::{
    contact_invariants, params_from_km, quotient_orbifold, Bundle, JoinParams, WeightVector,
};

fn check_radius(r: &Rational) -> Result<()> {
    if r.is_zero() || r.abs() >= Rational::one() {
        return Err(Error::RadiusOutOfRange(crate::exact::format_rational(r)));
    }
    Ok(())
}

/// `h` for the smooth admissible ruled surface (`p = q = 1`).
pub fn smooth_h(r: &Rational, s_sigma: &Rational) -> Result<Poly> {
    check_radius(r)?;
    let r2 = r * r;
    let r3 = &r2 * r;
    Ok(Poly::new(vec![
        int(12) - int(8) * &r2 + int(2) * &r3 * s_sigma,
        int(4) * r * (int(3) - &r2),
        int(2) * &r2 * (int(2) - r * s_sigma),
    ]))
}

/// `h` for the orbifold ruled surface with ramification `q` over the zero section and
/// `p` over the infinity section.
pub fn orbifold_h(p: u64, q: u64, r: &Rational, s_sigma: &Rational) -> Result<Poly> {
    check_radius(r)?;
    if p == 0 {
        return Err(Error::NonPositive { name: "p", value: 0 });
    }
    if q == 0 {
        return Err(Error::NonPositive { name: "q", value: 0 });
    }
    let (p, q) = (from_u64(p), from_u64(q));
    let r2 = r * r;
    let r3 = &r2 * r;
    let pqs = int(2) * &p * &q * &r3 * s_sigma;
    let c0 = &q * (int(6) - int(3) * r - int(4) * &r2 + &r3)
        + &p * (int(6) + int(3) * r - int(4) * &r2 - &r3)
        + &pqs;
    let c1 = int(2) * (int(3) - &r2) * (&q * (r - int(1)) + &p * (int(1) + r));
    let c2 = r * (&p * (int(3) + int(2) * r - &r2) - &q * (int(3) - int(2) * r - &r2)) - &pqs;
    Ok(Poly::new(vec![c0, c1, c2]))
}

/// The admissible extremal data on a ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalProfile {
    pub h: Poly,
    #[serde(rename = "F")]
    pub f: Poly,
    #[serde(with = "serde_str")]
    pub r: Rational,
    pub p: u64,
    pub q: u64,
    #[serde(with = "serde_str")]
    pub s_sigma: Rational,
}

impl ExtremalProfile {
    /// Assembles `F = (1 - z²) h / (4pq(3 - r²))` from `h`.
    pub fn from_h(h: Poly, r: Rational, p: u64, q: u64, s_sigma: Rational) -> Self {
        let scale = int(4) * from_u64(p) * from_u64(q) * (int(3) - &r * &r);
        let one_minus_z2 = Poly::from_ints(&[1, 0, -1]);
        let f = (&one_minus_z2 * &h).scale(&(Rational::one() / scale));
        ExtremalProfile { h, f, r, p, q, s_sigma }
    }

    /// `Θ(z) = F(z) / (1 + rz)`.
    pub fn theta(&self, z: &Rational) -> Rational {
        self.f.eval(z) / (Rational::one() + &self.r * z)
    }

    /// `Θ'(z)` by the quotient rule.
    pub fn theta_derivative(&self, z: &Rational) -> Rational {
        let denom = Rational::one() + &self.r * z;
        (self.f.derivative().eval(z) * &denom - &self.r * self.f.eval(z)) / (&denom * &denom)
    }

    /// `Θ(±1) = 0`, `Θ'(-1) = 2/p`, `Θ'(1) = -2/q`.
    pub fn endpoint_conditions_hold(&self) -> bool {
        let (m1, p1) = (int(-1), int(1));
        self.theta(&m1).is_zero()
            && self.theta(&p1).is_zero()
            && self.theta_derivative(&m1) == Rational::new(2.into(), self.p.into())
            && self.theta_derivative(&p1) == Rational::new((-2).into(), self.q.into())
    }

    /// Constant scalar curvature: `h` is affine.
    pub fn is_csc(&self) -> bool {
        self.h.degree().unwrap_or(0) <= 1
    }

    pub fn positivity(&self) -> Positivity {
        positive_on_open_interval(&self.h, &int(-1), &int(1))
            .expect("h is never the zero polynomial: h(-1) > 0")
    }
}

pub fn extremal_profile(params: &JoinParams, v: WeightVector) -> Result<ExtremalProfile> {
    let quo = quotient_orbifold(params, v)?;
    let h = orbifold_h(quo.p, quo.q, &quo.r, &quo.s_sigma)?;
    Ok(ExtremalProfile::from_h(h, quo.r, quo.p, quo.q, quo.s_sigma))
}

/// How strong a conclusion the positivity test supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strength {
    /// Regular ray with no admissible extremal metric: by uniqueness of extremal
    /// metrics in the smooth case, the ray admits no extremal metric at all.
    GenuinelyNonExtremal,
    /// No admissible extremal metric; other extremal metrics are not ruled out.
    NoAdmissibleExtremal,
    AdmissibleExtremal,
    /// `v = w`: the product metric, extremal but outside the admissible set-up.
    ProductRay,
}

impl Strength {
    pub fn is_extremal(self) -> bool {
        matches!(self, Strength::AdmissibleExtremal | Strength::ProductRay)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Strength::GenuinelyNonExtremal => "GenuinelyNonExtremal",
            Strength::NoAdmissibleExtremal => "NoAdmissibleExtremal",
            Strength::AdmissibleExtremal => "AdmissibleExtremal",
            Strength::ProductRay => "ProductRay",
        }
    }
}

/// Minimum of `h` over `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "serde_str")]
    pub location: Rational,
    #[serde(with = "serde_str")]
    pub value: Rational,
}

/// Exact minimum of a polynomial of degree at most two on `[-1, 1]`.
pub fn minimum_on_unit_interval(h: &Poly) -> Witness {
    debug_assert!(h.degree().unwrap_or(0) <= 2);
    let mut best = [int(-1), int(1)]
        .into_iter()
        .map(|z| Witness { value: h.eval(&z), location: z })
        .min_by(|a, b| a.value.cmp(&b.value))
        .unwrap();
    let a2 = h.coeff(2);
    if a2.is_positive() {
        let z = -h.coeff(1) / (int(2) * &a2);
        if z > int(-1) && z < int(1) {
            best = Witness { value: h.eval(&z), location: z };
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalVerdict {
    /// Absent when `h` is undefined (product rays).
    pub positivity: Option<Positivity>,
    pub strength: Strength,
    pub witness: Option<Witness>,
}

impl ExtremalVerdict {
    fn product() -> Self {
        ExtremalVerdict { positivity: None, strength: Strength::ProductRay, witness: None }
    }

    fn from_h(h: &Poly, positivity: Positivity, regular: bool) -> Self {
        let strength = match (positivity, regular) {
            (Positivity::StrictlyPositive, _) => Strength::AdmissibleExtremal,
            (_, true) => Strength::GenuinelyNonExtremal,
            (_, false) => Strength::NoAdmissibleExtremal,
        };
        ExtremalVerdict {
            positivity: Some(positivity),
            strength,
            witness: Some(minimum_on_unit_interval(h)),
        }
    }
}

/// Extremality of the ray through `v`.
pub fn extremal_verdict(params: &JoinParams, v: WeightVector) -> Result<ExtremalVerdict> {
    if params.is_product_ray(v) {
        return Ok(ExtremalVerdict::product());
    }
    let profile = extremal_profile(params, v)?;
    let regular = v == WeightVector::REGULAR;
    Ok(ExtremalVerdict::from_h(&profile.h, profile.positivity(), regular))
}

/// Extremality of the ray with slope `c = v2 / v1`.
pub fn extremal_verdict_at_slope(params: &JoinParams, c: &Rational) -> Result<ExtremalVerdict> {
    extremal_verdict(params, WeightVector::from_slope(c)?)
}

/// The regular ray `v = (1, 1)` analysed directly in the `(k, m)` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularRayReport {
    pub g: u64,
    pub k: u64,
    pub m: u64,
    pub bundle: Bundle,
    pub l: u64,
    pub w: WeightVector,
    pub verdict: ExtremalVerdict,
    #[serde(with = "serde_opt")]
    pub r: Option<Rational>,
    #[serde(with = "serde_opt")]
    pub s_sigma: Option<Rational>,
    pub h: Option<Poly>,
    /// Numerator of the vertex value of `h`, cleared of positive denominators; its sign
    /// is the sign of `min h` whenever the vertex lies in `(-1, 1)`.
    #[serde(rename = "M", with = "serde_opt")]
    pub m_value: Option<Rational>,
    /// The vertex `-h₁ / (2h₂)` of `h`.
    #[serde(with = "serde_opt")]
    pub min_location: Option<Rational>,
}

pub fn regular_ray_extremal(g: u64, k: u64, m: u64, bundle: Bundle) -> Result<RegularRayReport> {
    let (l, w) = params_from_km(k, m, bundle)?;
    let params = JoinParams::new(g, l, w.v1, w.v2)?;
    let mut report = RegularRayReport {
        g,
        k,
        m,
        bundle,
        l,
        w,
        verdict: ExtremalVerdict::product(),
        r: None,
        s_sigma: None,
        h: None,
        m_value: None,
        min_location: None,
    };
    let (gq, kq, mq) = (from_u64(g), from_u64(k), from_u64(m));
    let (r, s_sigma, scale) = match bundle {
        Bundle::Trivial if m == 0 => {
            // n = 0: the product of constant curvature metrics, CSC hence extremal
            report.verdict.strength = Strength::AdmissibleExtremal;
            return Ok(report);
        }
        Bundle::Trivial => (
            &mq / &kq,
            (int(1) - &gq) / &mq,
            kq.pow(3) * (&gq + int(2) * &kq - int(1)) / int(2),
        ),
        Bundle::NonTrivial => {
            let odd_k = int(2) * &kq + int(1);
            (
                (int(2) * &mq + int(1)) / &odd_k,
                int(2) * (int(1) - &gq) / (int(2) * &mq + int(1)),
                odd_k.pow(3) * (&gq + int(2) * &kq) / int(4),
            )
        }
    };
    debug_assert_eq!(contact_invariants(&params).k, k);
    let h = smooth_h(&r, &s_sigma)?;
    let a2 = h.coeff(2);
    if !a2.is_zero() {
        let vertex = -h.coeff(1) / (int(2) * &a2);
        let vertex_value = h.eval(&vertex);
        report.m_value = Some(vertex_value * scale);
        report.min_location = Some(vertex);
    }
    report.verdict = ExtremalVerdict::from_h(&h, positive_on_open_interval(&h, &int(-1), &int(1))?, true);
    report.r = Some(r);
    report.s_sigma = Some(s_sigma);
    report.h = Some(h);
    Ok(report)
}

/// Whether the coefficient bound guarantees every ray in the cone is extremal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustionReport {
    /// `g ≤ 1 + 3 l w2`.
    pub holds: bool,
    /// `1 + 3 l w2`.
    pub threshold: u64,
    /// The same bound written as `k ≥ m + (g - 1)/3`.
    pub km_form_holds: bool,
    pub k: u64,
    pub m: u64,
}

pub fn exhaustion_bound(params: &JoinParams) -> ExhaustionReport {
    let threshold = 1 + 3 * params.l * params.w2;
    let ci = contact_invariants(params);
    ExhaustionReport {
        holds: params.g <= threshold,
        threshold,
        km_form_holds: 3 * (ci.k - ci.m) + 1 >= params.g,
        k: ci.k,
        m: ci.m,
    }
}
