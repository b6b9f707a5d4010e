//! Exact scalar curvature of admissible rays.
//!
//! Along the ray `v` the transverse scalar curvature is the affine function
//! `A + B z` of the moment coordinate, with `A` and `B` rational multiples of `π`.
//! The Sasaki scalar curvature is the transverse one minus `2n = 4`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{format_decimal, from_u64, int, to_f64};
use crate::exact::{format_rational, pow2_inv, Rational};
use crate::topology::{contact_invariants, Bundle, JoinParams, WeightVector};

/// `pi_coeff · π + const_term`, exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PiLinear {
    pub pi_coeff: Rational,
    pub const_term: Rational,
}

impl PiLinear {
    pub fn new(pi_coeff: Rational, const_term: Rational) -> Self {
        PiLinear { pi_coeff, const_term }
    }

    pub fn pi_multiple(c: Rational) -> Self {
        PiLinear { pi_coeff: c, const_term: Rational::zero() }
    }

    pub fn constant(c: Rational) -> Self {
        PiLinear { pi_coeff: Rational::zero(), const_term: c }
    }

    pub fn zero() -> Self {
        PiLinear::default()
    }

    pub fn is_zero(&self) -> bool {
        self.pi_coeff.is_zero() && self.const_term.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        PiLinear { pi_coeff: &self.pi_coeff * k, const_term: &self.const_term * k }
    }

    /// Exact sign, using rational enclosures of `π` tightened until decisive.
    pub fn sign(&self) -> Ordering {
        if self.pi_coeff.is_zero() {
            return self.const_term.cmp(&Rational::zero());
        }
        // π is irrational, so a nonzero π-coefficient means the value is nonzero
        let mut bits = 32;
        loop {
            let (lo, hi) = pi_bounds(bits);
            let a = &self.pi_coeff * &lo + &self.const_term;
            let b = &self.pi_coeff * &hi + &self.const_term;
            let (min, max) = if a <= b { (a, b) } else { (b, a) };
            if min.is_positive() {
                return Ordering::Greater;
            }
            if max.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
        }
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        (self - &PiLinear::constant(x.clone())).sign()
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.pi_coeff) * std::f64::consts::PI + to_f64(&self.const_term)
    }

    /// Twelve significant digits.
    pub fn decimal(&self) -> String {
        format_decimal(self.to_f64(), 12)
    }
}

/// Rational bounds `lo < π < hi` with `hi - lo < 2^-bits`, from Machin's formula.
pub fn pi_bounds(bits: u32) -> (Rational, Rational) {
    let eps = pow2_inv(bits + 6);
    let (lo5, hi5) = arctan_bounds(&Rational::new(1.into(), 5.into()), &eps);
    let (lo239, hi239) = arctan_bounds(&Rational::new(1.into(), 239.into()), &eps);
    (int(16) * lo5 - int(4) * &hi239, int(16) * hi5 - int(4) * lo239)
}

/// Bounds on `arctan x` for `0 < x < 1` from the alternating Taylor series.
fn arctan_bounds(x: &Rational, eps: &Rational) -> (Rational, Rational) {
    let x2 = x * x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let term = &power / int(2 * k + 1);
        if &term < eps {
            return if k % 2 == 0 { (sum.clone(), sum + term) } else { (sum.clone() - term, sum) };
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
        k += 1;
    }
}

impl Add for &PiLinear {
    type Output = PiLinear;
    fn add(self, o: &PiLinear) -> PiLinear {
        PiLinear { pi_coeff: &self.pi_coeff + &o.pi_coeff, const_term: &self.const_term + &o.const_term }
    }
}

impl Sub for &PiLinear {
    type Output = PiLinear;
    fn sub(self, o: &PiLinear) -> PiLinear {
        PiLinear { pi_coeff: &self.pi_coeff - &o.pi_coeff, const_term: &self.const_term - &o.const_term }
    }
}

impl Neg for &PiLinear {
    type Output = PiLinear;
    fn neg(self) -> PiLinear {
        PiLinear { pi_coeff: -&self.pi_coeff, const_term: -&self.const_term }
    }
}

impl fmt::Display for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let a = &self.pi_coeff;
        if !a.is_zero() {
            if a.is_negative() {
                out.push('-');
            }
            let num = a.numer().abs();
            if !num.is_one() {
                out.push_str(&num.to_string());
            }
            out.push('π');
            if !a.denom().is_one() {
                out.push_str(&format!("/{}", a.denom()));
            }
        }
        let b = &self.const_term;
        if out.is_empty() {
            out = format_rational(b);
        } else if !b.is_zero() {
            let op = if b.is_negative() { '-' } else { '+' };
            out.push_str(&format!(" {op} {}", format_rational(&b.abs())));
        }
        f.write_str(&out)
    }
}

impl Serialize for PiLinear {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PiLinear", 4)?;
        st.serialize_field("pi", &format_rational(&self.pi_coeff))?;
        st.serialize_field("const", &format_rational(&self.const_term))?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("decimal", &self.decimal())?;
        st.end()
    }
}

/// Coefficients `(A, B)` of the transverse scalar curvature `A + B z` on the ray `v`.
pub fn scalar_coefficients(params: &JoinParams, v: WeightVector) -> Result<(PiLinear, PiLinear)> {
    if params.is_product_ray(v) {
        return Err(Error::ProductRay);
    }
    let g = from_u64(params.g);
    let l = from_u64(params.l);
    let (w1, w2) = (from_u64(params.w1), from_u64(params.w2));
    let (v1, v2) = (from_u64(v.v1), from_u64(v.v2));
    let gm1 = &g - int(1);
    let den = &l * (&v2 * &v2 * &w1 * &w1 + int(4) * &v1 * &v2 * &w1 * &w2 + &v1 * &v1 * &w2 * &w2);
    let a_num = &v1 * &w2 * (-&gm1 + &l * &w1) + &v2 * &w1 * (-&gm1 + &l * &w2);
    let b_num = &l * v2.pow(3) * &w1 * &w1 - &v1 * &v1 * &v2 * &w2 * (&gm1 + int(2) * &l * &w1)
        - &l * v1.pow(3) * &w2 * &w2
        + &v1 * &v2 * &v2 * &w1 * (&gm1 + int(2) * &l * &w2);
    let a = int(24) * a_num / &den;
    let b = int(24) * b_num / (den * &v1 * &v2);
    Ok((PiLinear::pi_multiple(a), PiLinear::pi_multiple(b)))
}

/// Position of a constant Sasaki scalar curvature relative to `-2n = -4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Type3 {
    Above,
    Equal,
    Below,
}

impl Type3 {
    pub fn as_str(self) -> &'static str {
        match self {
            Type3::Above => "Above(-4)",
            Type3::Equal => "Equal(-4)",
            Type3::Below => "Below(-4)",
        }
    }
}

impl Serialize for Type3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalarReport {
    #[serde(rename = "A")]
    pub a: PiLinear,
    #[serde(rename = "B")]
    pub b: PiLinear,
    /// `A + B z`, rendered.
    pub transverse: String,
    /// Present exactly when `B = 0`: the constant `A - 4`.
    pub sasaki_const: Option<PiLinear>,
    pub type3: Option<Type3>,
}

impl ScalarReport {
    pub fn is_csc(&self) -> bool {
        self.b.is_zero()
    }

    /// Transverse scalar curvature at the moment coordinate `z`.
    pub fn transverse_at(&self, z: &Rational) -> PiLinear {
        &self.a + &self.b.scale(z)
    }
}

pub fn sasaki_scalar(params: &JoinParams, v: WeightVector) -> Result<ScalarReport> {
    let (a, b) = scalar_coefficients(params, v)?;
    let transverse = if b.is_zero() {
        a.to_string()
    } else {
        format!("({a}) + ({b})·z")
    };
    let (sasaki_const, type3) = if b.is_zero() {
        let s = &a - &PiLinear::constant(int(4));
        let t = match a.sign() {
            Ordering::Greater => Type3::Above,
            Ordering::Equal => Type3::Equal,
            Ordering::Less => Type3::Below,
        };
        (Some(s), Some(t))
    } else {
        (None, None)
    };
    Ok(ScalarReport { a, b, transverse, sasaki_const, type3 })
}

/// Sasaki scalar curvature after the transverse homothety by `a`:
/// `a⁻¹ (s + 4) - 4`.
pub fn transverse_homothety(s: &PiLinear, a: &Rational) -> Result<PiLinear> {
    if !a.is_positive() {
        return Err(Error::NonPositiveHomothety(format_rational(a)));
    }
    let four = PiLinear::constant(int(4));
    Ok(&(s + &four).scale(&(Rational::one() / a)) - &four)
}

/// A join and ray with vanishing transverse scalar curvature, i.e. Sasaki scalar
/// curvature identically `-4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NullScalarSolution {
    pub l: u64,
    pub w1: u64,
    pub w2: u64,
    pub v1: u64,
    pub v2: u64,
    pub bundle: Bundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullScalarReport {
    pub g: u64,
    pub search_bound: u64,
    pub solutions: Vec<NullScalarSolution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Every `(l, w, v)` with `l ≤ search_bound` whose transverse scalar curvature
/// vanishes identically. `w` is not bounded: for each admissible `l` the equation
/// `l² w1 w2 = (g - 1)²` has finitely many coprime solutions.
pub fn null_scalar_solutions(g: u64, search_bound: u64) -> Result<NullScalarReport> {
    if g == 0 {
        return Err(Error::GenusZero);
    }
    if search_bound == 0 {
        return Err(Error::NonPositive { name: "search_bound", value: 0 });
    }
    let mut report = NullScalarReport { g, search_bound, solutions: Vec::new(), note: None };
    if g <= 2 {
        report.note = Some(format!(
            "no solutions exist for g = {g}: A vanishes only when l²w1w2 = (g-1)² with l·w2 < g-1"
        ));
        return Ok(report);
    }
    let gm1 = g - 1;
    let per_l: Vec<Vec<NullScalarSolution>> = (1..=search_bound.min(gm1))
        .into_par_iter()
        .filter(|l| gm1.is_multiple_of(*l))
        .map(|l| solutions_for_l(g, l))
        .collect::<Result<_>>()?;
    report.solutions = per_l.into_iter().flatten().collect();
    Ok(report)
}

fn solutions_for_l(g: u64, l: u64) -> Result<Vec<NullScalarSolution>> {
    let gm1 = g - 1;
    let q = (gm1 / l) as u128;
    let q2 = q * q;
    let mut out = Vec::new();
    for w2 in 1..=q {
        if !q2.is_multiple_of(w2) {
            continue;
        }
        let w1 = q2 / w2;
        if w1.gcd(&w2) != 1 || l as u128 * w2 >= gm1 as u128 {
            continue;
        }
        let (w1, w2) = (
            u64::try_from(w1).map_err(|_| Error::Invariant(format!("w1 = {w1} exceeds u64")))?,
            w2 as u64,
        );
        let num = (l as u128 * w1 as u128 - gm1 as u128) * w2 as u128;
        let den = (gm1 as u128 - l as u128 * w2 as u128) * w1 as u128;
        let d = num.gcd(&den);
        let (v2, v1) = ((num / d) as u64, (den / d) as u64);
        let params = JoinParams::new(g, l, w1, w2)?;
        let v = WeightVector::new(v1, v2)?;
        let (a, b) = scalar_coefficients(&params, v)?;
        if !a.is_zero() || !b.is_zero() {
            return Err(Error::Invariant(format!(
                "null scalar candidate l={l} w=({w1},{w2}) v=({v1},{v2}) has A = {a}, B = {b}"
            )));
        }
        out.push(NullScalarSolution { l, w1, w2, v1, v2, bundle: contact_invariants(&params).bundle_type });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn params(g: u64, l: u64, w1: u64, w2: u64) -> JoinParams {
        JoinParams::new(g, l, w1, w2).unwrap()
    }

    fn wv(a: u64, b: u64) -> WeightVector {
        WeightVector::new(a, b).unwrap()
    }

    #[test]
    fn pi_bounds_are_tight_and_correct() {
        let (lo, hi) = pi_bounds(64);
        assert!(&hi - &lo < pow2_inv(64));
        assert!(lo < rat(314159265358979324, 100000000000000000));
        assert!(hi > rat(314159265358979323, 100000000000000000));
    }

    #[test]
    fn sign_of_pi_linear() {
        assert_eq!(PiLinear::new(rat(8, 3), int(-4)).sign(), Ordering::Greater);
        assert_eq!(PiLinear::new(int(1), rat(-314159, 100000)).sign(), Ordering::Greater);
        assert_eq!(PiLinear::new(int(1), rat(-314160, 100000)).sign(), Ordering::Less);
        assert_eq!(PiLinear::new(int(-16), int(-4)).sign(), Ordering::Less);
        assert_eq!(PiLinear::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn rendering() {
        assert_eq!(PiLinear::new(int(-16), int(-4)).to_string(), "-16π - 4");
        assert_eq!(PiLinear::new(rat(8, 3), int(-4)).to_string(), "8π/3 - 4");
        assert_eq!(PiLinear::pi_multiple(int(1)).to_string(), "π");
        assert_eq!(PiLinear::constant(int(-4)).to_string(), "-4");
        let json = serde_json::to_value(PiLinear::new(rat(8, 3), int(-4))).unwrap();
        assert_eq!(json["pi"], "8/3");
        assert_eq!(json["const"], "-4");
        assert_eq!(json["decimal"], "4.37758040957");
    }

    #[test]
    fn golden_coefficients() {
        let (a, b) = scalar_coefficients(&params(23, 1, 12, 1), wv(6, 1)).unwrap();
        assert_eq!((a, b.is_zero()), (PiLinear::pi_multiple(int(-16)), true));
        let (a, b) = scalar_coefficients(&params(2, 1, 12, 1), wv(3, 1)).unwrap();
        assert_eq!((a, b.is_zero()), (PiLinear::pi_multiple(rat(8, 3)), true));
        let (a, b) = scalar_coefficients(&params(1, 1, 16, 5), wv(8, 5)).unwrap();
        assert_eq!((a, b.is_zero()), (PiLinear::pi_multiple(rat(6, 5)), true));
        assert_eq!(scalar_coefficients(&params(3, 1, 2, 1), wv(2, 1)), Err(Error::ProductRay));
    }

    #[test]
    fn sasaki_types() {
        let r = sasaki_scalar(&params(23, 1, 12, 1), wv(6, 1)).unwrap();
        assert_eq!(r.sasaki_const, Some(PiLinear::new(int(-16), int(-4))));
        assert_eq!(r.type3, Some(Type3::Below));
        let r = sasaki_scalar(&params(2, 1, 12, 1), wv(3, 1)).unwrap();
        assert_eq!(r.sasaki_const, Some(PiLinear::new(rat(8, 3), int(-4))));
        assert_eq!(r.type3, Some(Type3::Above));
        let r = sasaki_scalar(&params(5, 2, 4, 1), wv(2, 1)).unwrap();
        assert!(r.a.is_zero() && r.b.is_zero());
        assert_eq!(r.sasaki_const, Some(PiLinear::constant(int(-4))));
        assert_eq!(r.type3, Some(Type3::Equal));
        let r = sasaki_scalar(&params(7, 1, 1, 1), wv(2, 1)).unwrap();
        assert!(!r.is_csc() && r.type3.is_none());
    }

    #[test]
    fn homothety() {
        let minus_four = PiLinear::constant(int(-4));
        for a in [rat(1, 3), int(1), int(7)] {
            assert_eq!(transverse_homothety(&minus_four, &a).unwrap(), minus_four);
        }
        assert_eq!(transverse_homothety(&PiLinear::zero(), &int(2)).unwrap(), PiLinear::constant(int(-2)));
        let s = PiLinear::new(rat(8, 3), int(-4));
        assert_eq!(transverse_homothety(&s, &int(1)).unwrap(), s);
        assert!(matches!(transverse_homothety(&s, &int(0)), Err(Error::NonPositiveHomothety(_))));
    }

    #[test]
    fn null_scalar_examples() {
        let r = null_scalar_solutions(3, 10).unwrap();
        assert!(r.solutions.iter().any(|s| (s.l, s.w1, s.w2) == (1, 4, 1)));
        let r = null_scalar_solutions(5, 10).unwrap();
        assert!(r.solutions.iter().any(|s| (s.l, s.w1, s.w2) == (1, 16, 1)));
        assert!(r.solutions.contains(&NullScalarSolution { l: 2, w1: 4, w2: 1, v1: 2, v2: 1, bundle: Bundle::Trivial }));
        let r = null_scalar_solutions(4, 20).unwrap();
        assert!(!r.solutions.is_empty());
        assert!(r.solutions.iter().all(|s| s.bundle == Bundle::Trivial));
        let r = null_scalar_solutions(2, 10).unwrap();
        assert!(r.solutions.is_empty() && r.note.is_some());
    }

    #[test]
    fn degenerate_quadratic_has_no_admissible_solutions() {
        // With A = 0 imposed, the numerator of B factors as
        // (l²w1w2 - (g-1)²) · (l²(w1² - 4w1w2 + w2²) + 2(g-1)l(w1+w2) - 2(g-1)²) up to
        // positive factors; the second factor never vanishes when l·w2 < g - 1.
        for g in 2..40i64 {
            for l in 1..40i64 {
                for w2 in (1..40i64).take_while(|w2| l * w2 < g - 1) {
                    for w1 in w2..80 {
                        if num_integer::gcd(w1, w2) != 1 {
                            continue;
                        }
                        let val = l * l * (w1 * w1 - 4 * w1 * w2 + w2 * w2) + 2 * (g - 1) * l * (w1 + w2)
                            - 2 * (g - 1) * (g - 1);
                        assert_ne!(val, 0, "g={g} l={l} w=({w1},{w2})");
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_a_forces_b_only_on_the_hyperbola() {
        for g in 3..16u64 {
            for l in 1..8u64 {
                for w2 in (1..20u64).take_while(|w2| l * w2 < g - 1) {
                    for w1 in (w2 + 1)..40 {
                        if num_integer::gcd(w1, w2) != 1 {
                            continue;
                        }
                        let num = (l * w1).saturating_sub(g - 1) * w2;
                        if num == 0 {
                            continue;
                        }
                        let den = (g - 1 - l * w2) * w1;
                        let d = num_integer::gcd(num, den);
                        let p = params(g, l, w1, w2);
                        let v = wv(den / d, num / d);
                        if p.is_product_ray(v) {
                            continue;
                        }
                        let (a, b) = scalar_coefficients(&p, v).unwrap();
                        assert!(a.is_zero());
                        assert_eq!(b.is_zero(), l * l * w1 * w2 == (g - 1) * (g - 1), "g={g} l={l} w=({w1},{w2})");
                    }
                }
            }
        }
    }
}
