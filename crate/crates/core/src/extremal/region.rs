//! The extremal region of a Sasaki cone, in the slope variable `c = v2 / v1`.
//!
//! Clearing the positive factor `l (w1 c + w2)³ / v1` from `h` gives a quadratic
//! `P(c, z) = P2(c) z² + P1(c) z + P0(c)` whose coefficients are integer polynomials
//! in `c`. Positivity of a quadratic on `(-1, 1)` changes only where one of
//! `P2`, `P1 ± 2P2`, `P1² - 4P0P2` or `P(c, ±1)` vanishes, so isolating the positive
//! roots of those polynomials cuts `(0, ∞)` into cells of constant verdict. Each open
//! cell is decided at a rational sample point, each cut point by exact signs.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exact::rational::{format_decimal, from_u64, int, midpoint};
use crate::exact::{
    default_width, format_rational, isolate_roots_above, positive_on_open_interval, rational_roots,
    square_free_part, IsolatingInterval, Poly, Positivity, Rational, RealAlgebraic,
};
use crate::topology::JoinParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionVerdict {
    AdmissibleExtremal,
    NoAdmissibleExtremal,
    /// `h ≥ 0` on `(-1, 1)` with an interior zero.
    Boundary,
    ProductRay,
}

impl RegionVerdict {
    fn from_positivity(p: Positivity) -> Self {
        match p {
            Positivity::StrictlyPositive => RegionVerdict::AdmissibleExtremal,
            Positivity::VanishesInside => RegionVerdict::Boundary,
            Positivity::NegativeSomewhere => RegionVerdict::NoAdmissibleExtremal,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RegionVerdict::AdmissibleExtremal => "AdmissibleExtremal",
            RegionVerdict::NoAdmissibleExtremal => "NoAdmissibleExtremal",
            RegionVerdict::Boundary => "Boundary",
            RegionVerdict::ProductRay => "ProductRay",
        }
    }
}

/// Names of the polynomials whose roots cut the slope axis.
const CRITICAL_NAMES: [&str; 7] = [
    "leading",
    "vertex_at_minus_one",
    "vertex_at_plus_one",
    "discriminant",
    "value_at_plus_one",
    "value_at_minus_one",
    "product_ray",
];

/// `[P0, P1, P2]` as polynomials in `c`.
pub(crate) fn region_coefficients(params: &JoinParams) -> [Poly; 3] {
    let c = Poly::x();
    let (w1, w2) = (from_u64(params.w1), from_u64(params.w2));
    let l = from_u64(params.l);
    let genus_term = int(4) * (int(1) - from_u64(params.g));
    let n = Poly::linear(w1.clone(), -w2.clone());
    let d = Poly::linear(w1, w2);
    let k = |x: i64| Poly::constant(int(x));
    let (n2, d2) = (&n * &n, &d * &d);
    let (n3, d3) = (&n2 * &n, &d2 * &d);
    let nd2 = &n * &d2;
    let n2d = &n2 * &d;
    let nd = &n * &d;
    let cn2 = (&c * &n2).scale(&genus_term);

    let p0 = (&(&(&(&k(6) * &d3) - &(&k(3) * &nd2)) - &(&k(4) * &n2d)) + &n3)
        + &c * &(&(&(&(&k(6) * &d3) + &(&k(3) * &nd2)) - &(&k(4) * &n2d)) - &n3);
    let p0 = &p0.scale(&l) + &cn2;

    let p1 = (&(&k(2) * &(&(&k(3) * &d2) - &n2)) * &(&(&n - &d) + &(&c * &(&n + &d)))).scale(&l);

    let plus = &(&(&k(3) * &d2) + &(&k(2) * &nd)) - &n2;
    let minus = &(&(&k(3) * &d2) - &(&k(2) * &nd)) - &n2;
    let p2 = &(&n * &(&(&c * &plus) - &minus)).scale(&l) - &cn2;
    [p0, p1, p2]
}

fn critical_polys(params: &JoinParams) -> [Poly; 7] {
    let [p0, p1, p2] = region_coefficients(params);
    let two_p2 = p2.scale(&int(2));
    [
        p2.clone(),
        &p1 + &two_p2,
        &two_p2 - &p1,
        &(&p1 * &p1) - (&(&p0 * &p2).scale(&int(4))),
        &(&p0 + &p1) + &p2,
        &(&p0 - &p1) + &p2,
        Poly::linear(from_u64(params.w1), -from_u64(params.w2)),
    ]
}

/// Positivity of `a2 z² + a1 z + a0` on `(-1, 1)` from the signs of the critical
/// quantities alone.
fn positivity_from_signs(s: &[Ordering; 7], identically_zero: bool) -> Positivity {
    use Ordering::*;
    let [lead, vminus, vplus, disc, at_plus, at_minus, _] = *s;
    let endpoints_ok = at_plus != Less && at_minus != Less;
    if identically_zero {
        return Positivity::VanishesInside;
    }
    if lead == Greater && vminus == Greater && vplus == Greater {
        // vertex strictly inside (-1, 1)
        return match disc {
            Less => Positivity::StrictlyPositive,
            Equal => Positivity::VanishesInside,
            Greater => Positivity::NegativeSomewhere,
        };
    }
    if endpoints_ok {
        Positivity::StrictlyPositive
    } else {
        Positivity::NegativeSomewhere
    }
}

/// One end of a region piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionBound {
    /// `None` stands for `+∞`.
    pub value: Option<RealAlgebraic>,
    /// Closed form when one is available (`0`, `1/12`, `13-2√42`), else a decimal.
    pub label: String,
}

impl RegionBound {
    fn zero() -> Self {
        RegionBound { value: Some(RealAlgebraic::Rational(Rational::zero())), label: "0".into() }
    }

    fn infinity() -> Self {
        RegionBound { value: None, label: "∞".into() }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_none()
    }
}

impl Serialize for RegionBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RegionBound", 2)?;
        match &self.value {
            Some(v) => st.serialize_field("value", v)?,
            None => st.serialize_field("value", "inf")?,
        }
        st.serialize_field("label", &self.label)?;
        st.end()
    }
}

/// A maximal run of slopes with one verdict. `lo == hi` marks an isolated point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionPiece {
    pub lo: RegionBound,
    pub hi: RegionBound,
    pub lo_inclusive: bool,
    pub hi_inclusive: bool,
    pub verdict: RegionVerdict,
    /// Integer polynomial defining a boundary point (set on `Boundary` points).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_poly: Option<Poly>,
}

impl RegionPiece {
    pub fn is_point(&self) -> bool {
        self.lo_inclusive && self.hi_inclusive && self.lo == self.hi
    }

    /// Whether the rational slope `c` lies in this piece.
    pub fn contains(&self, c: &Rational) -> bool {
        let above_lo = match &self.lo.value {
            Some(v) => match v.cmp_rational(c) {
                Ordering::Less => true,
                Ordering::Equal => self.lo_inclusive,
                Ordering::Greater => false,
            },
            None => false,
        };
        let below_hi = match &self.hi.value {
            Some(v) => match v.cmp_rational(c) {
                Ordering::Greater => true,
                Ordering::Equal => self.hi_inclusive,
                Ordering::Less => false,
            },
            None => true,
        };
        above_lo && below_hi
    }
}

impl fmt::Display for RegionPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo.label);
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_inclusive { '[' } else { '(' },
            self.lo.label,
            self.hi.label,
            if self.hi_inclusive { ']' } else { ')' }
        )
    }
}

/// A root of one of the critical polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalPoint {
    /// Isolating interval over `defining_poly` (or the exact rational).
    pub value: RealAlgebraic,
    /// The smallest integer polynomial found that vanishes here.
    pub defining_poly: Poly,
    pub label: String,
    /// Which critical polynomials vanish here.
    pub sources: Vec<&'static str>,
    pub verdict: RegionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRegion {
    pub params: JoinParams,
    pub pieces: Vec<RegionPiece>,
    pub critical_points: Vec<CriticalPoint>,
}

impl ExtremalRegion {
    /// Verdict at a rational slope, read off the decomposition.
    pub fn verdict_at(&self, c: &Rational) -> Option<RegionVerdict> {
        self.pieces.iter().find(|p| p.contains(c)).map(|p| p.verdict)
    }

    pub fn admissible(&self) -> impl Iterator<Item = &RegionPiece> {
        self.pieces.iter().filter(|p| p.verdict == RegionVerdict::AdmissibleExtremal)
    }

    /// The admissible set in interval notation, e.g. `(0, 1/12) ∪ (1/12, 0.780167…)`.
    pub fn render_admissible(&self) -> String {
        let parts: Vec<String> = self.admissible().map(|p| p.to_string()).collect();
        if parts.is_empty() {
            "∅".into()
        } else {
            parts.join(" ∪ ")
        }
    }

    /// One line per piece.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for p in &self.pieces {
            out.push_str(&format!("{p}  {}", p.verdict.as_str()));
            if let Some(b) = &p.boundary_poly {
                out.push_str(&format!("  root of {}", b.display_in("c")));
            }
            out.push('\n');
        }
        out
    }
}

pub fn extremal_region(params: &JoinParams) -> Result<ExtremalRegion> {
    extremal_region_with_width(params, &default_width())
}

/// As [`extremal_region`], with cut points isolated to at most `width`.
pub fn extremal_region_with_width(params: &JoinParams, width: &Rational) -> Result<ExtremalRegion> {
    let [p0, p1, p2] = region_coefficients(params);
    let crit = critical_polys(params);
    let split: Vec<Option<(Vec<Rational>, Poly)>> = crit
        .par_iter()
        .map(|f| (f.degree().unwrap_or(0) > 0).then(|| split_rational_roots(f)).transpose())
        .collect::<Result<_>>()?;

    let mut cuts: Vec<RealAlgebraic> = Vec::new();
    for (rational, rest) in split.iter().flatten() {
        cuts.extend(rational.iter().filter(|r| r.is_positive()).cloned().map(RealAlgebraic::Rational));
        if rest.degree().unwrap_or(0) > 0 {
            cuts.extend(
                isolate_roots_above(rest, &Rational::zero(), width)?
                    .into_iter()
                    .map(RealAlgebraic::Algebraic),
            );
        }
    }
    cuts.sort();
    cuts.dedup();

    let points: Vec<CriticalPoint> = cuts
        .into_par_iter()
        .map(|at| classify_point(at, &crit, &split, width))
        .collect::<Result<_>>()?;

    let bounds: Vec<RegionBound> = std::iter::once(RegionBound::zero())
        .chain(points.iter().map(|p| RegionBound { value: Some(p.value.clone()), label: p.label.clone() }))
        .chain(std::iter::once(RegionBound::infinity()))
        .collect();
    let cells: Vec<RegionVerdict> = bounds
        .par_windows(2)
        .map(|pair| {
            let c = sample_between(&pair[0], &pair[1]);
            let h = Poly::new(vec![p0.eval(&c), p1.eval(&c), p2.eval(&c)]);
            positive_on_open_interval(&h, &int(-1), &int(1)).map(RegionVerdict::from_positivity)
        })
        .collect::<Result<_>>()?;

    Ok(ExtremalRegion { params: *params, pieces: merge(&bounds, &cells, &points), critical_points: points })
}

type SplitRoots = Option<(Vec<Rational>, Poly)>;

fn classify_point(
    at: RealAlgebraic,
    crit: &[Poly; 7],
    split: &[SplitRoots],
    width: &Rational,
) -> Result<CriticalPoint> {
    let signs: [Ordering; 7] = std::array::from_fn(|i| at.sign_of(&crit[i]));
    let sources: Vec<&'static str> =
        (0..7).filter(|&i| signs[i] == Ordering::Equal).map(|i| CRITICAL_NAMES[i]).collect();
    let verdict = if signs[6] == Ordering::Equal {
        RegionVerdict::ProductRay
    } else {
        let identically_zero = signs[..3].iter().all(|s| *s == Ordering::Equal)
            && signs[4] == Ordering::Equal
            && signs[5] == Ordering::Equal;
        RegionVerdict::from_positivity(positivity_from_signs(&signs, identically_zero))
    };

    let (value, defining_poly) = match at {
        RealAlgebraic::Rational(r) => {
            let poly = Poly::linear(Rational::one(), -r.clone()).primitive();
            (RealAlgebraic::Rational(r), poly)
        }
        RealAlgebraic::Algebraic(iv) => {
            let mut common: Option<Poly> = None;
            for i in (0..7).filter(|&i| signs[i] == Ordering::Equal) {
                let rest = &split[i].as_ref().expect("vanishing polynomial is nonconstant").1;
                common = Some(match common {
                    None => rest.clone(),
                    Some(g) => g.gcd(rest),
                });
            }
            let poly = common.expect("a cut point is a root of some critical polynomial").primitive();
            let iv = IsolatingInterval::new(poly.clone(), iv.lo().clone(), iv.hi().clone())?.refined(width);
            (RealAlgebraic::Algebraic(iv), poly)
        }
    };
    let label = closed_form(&value, &defining_poly);
    Ok(CriticalPoint { value, defining_poly, label, sources, verdict })
}

/// Rational roots, and the square-free part with those roots divided out.
fn split_rational_roots(f: &Poly) -> Result<(Vec<Rational>, Poly)> {
    let mut sf = square_free_part(f)?;
    let roots = rational_roots(&sf)?;
    for r in &roots {
        sf = sf.div_rem(&Poly::linear(Rational::one(), -r.clone())).0;
    }
    Ok((roots, sf))
}

/// `u ± t√d` for a root of an integer quadratic, otherwise a 6-digit decimal.
fn closed_form(value: &RealAlgebraic, poly: &Poly) -> String {
    if let Some(r) = value.as_rational() {
        return format_rational(r);
    }
    if poly.degree() == Some(2) {
        let co = poly.primitive_integer();
        let (c, b, a) = (&co[0], &co[1], &co[2]);
        let disc: BigInt = b * b - BigInt::from(4) * a * c;
        if disc.is_positive() {
            let (s, d) = split_square(&disc);
            let two_a = Rational::from_integer(BigInt::from(2) * a);
            let u = Rational::from_integer(-b.clone()) / &two_a;
            let t = (Rational::from_integer(s) / &two_a).abs();
            let op = if value.cmp_rational(&u) == Ordering::Greater { '+' } else { '-' };
            let surd = if t.is_one() {
                format!("√{d}")
            } else if t.is_integer() {
                format!("{}√{d}", t.numer())
            } else {
                format!("{}√{d}/{}", t.numer(), t.denom())
            };
            return if u.is_zero() {
                if op == '-' { format!("-{surd}") } else { surd }
            } else {
                format!("{}{op}{surd}", format_rational(&u))
            };
        }
    }
    format!("{}…", format_decimal(value.approx(), 6))
}

/// `n = s² d` with `d` free of small square factors.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut d = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= d && p < limit {
        let p2 = &p * &p;
        while d.is_multiple_of(&p2) {
            d /= &p2;
            s *= &p;
        }
        p += 1;
    }
    (s, d)
}

/// A rational strictly between two adjacent cut points.
fn sample_between(lo: &RegionBound, hi: &RegionBound) -> Rational {
    let lo_iv = lo.value.as_ref().map(RealAlgebraic::to_interval);
    match (lo_iv, &hi.value) {
        (Some(a), None) => a.hi() + int(1),
        (None, _) => unreachable!("the lower end is never +∞"),
        (Some(a), Some(b)) => {
            let mut b = b.to_interval();
            let mut a = a;
            let mut w = (b.lo() - a.hi()).abs() + b.width() + a.width();
            while a.hi() >= b.lo() {
                w /= int(2);
                a.refine_to(&w);
                b.refine_to(&w);
            }
            midpoint(a.hi(), b.lo())
        }
    }
}

fn merge(bounds: &[RegionBound], cells: &[RegionVerdict], points: &[CriticalPoint]) -> Vec<RegionPiece> {
    // atoms alternate: cell 0, point 0, cell 1, ..., cell n
    let mut pieces: Vec<RegionPiece> = Vec::new();
    let mut push = |lo: &RegionBound, hi: &RegionBound, lo_inc: bool, hi_inc: bool, v: RegionVerdict, bp: Option<Poly>| {
        if let Some(last) = pieces.last_mut() {
            if last.verdict == v && last.boundary_poly.is_none() && bp.is_none() {
                last.hi = hi.clone();
                last.hi_inclusive = hi_inc;
                return;
            }
        }
        pieces.push(RegionPiece {
            lo: lo.clone(),
            hi: hi.clone(),
            lo_inclusive: lo_inc,
            hi_inclusive: hi_inc,
            verdict: v,
            boundary_poly: bp,
        });
    };
    for (i, cell) in cells.iter().enumerate() {
        push(&bounds[i], &bounds[i + 1], false, false, *cell, None);
        if let Some(pt) = points.get(i) {
            let b = &bounds[i + 1];
            let bp = (pt.verdict == RegionVerdict::Boundary).then(|| pt.defining_poly.clone());
            push(b, b, true, true, pt.verdict, bp);
        }
    }
    pieces
}

impl RegionBound {
    pub fn approx(&self) -> f64 {
        self.value.as_ref().map_or(f64::INFINITY, RealAlgebraic::approx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::extremal::{extremal_profile, extremal_verdict_at_slope, Strength};
    use crate::topology::WeightVector;

    fn params(g: u64, l: u64, w1: u64, w2: u64) -> JoinParams {
        JoinParams::new(g, l, w1, w2).unwrap()
    }

    #[test]
    fn coefficients_are_a_positive_multiple_of_h() {
        for (g, l, w1, w2) in [(23, 1, 12, 1), (7, 1, 1, 1), (3, 2, 5, 3), (1, 4, 2, 1)] {
            let p = params(g, l, w1, w2);
            let [p0, p1, p2] = region_coefficients(&p);
            for (num, den) in [(1, 5), (3, 7), (2, 1), (9, 4), (1, 30)] {
                let c = rat(num, den);
                let v = WeightVector::from_slope(&c).unwrap();
                if p.is_product_ray(v) {
                    continue;
                }
                let h = extremal_profile(&p, v).unwrap().h;
                let scaled = Poly::new(vec![p0.eval(&c), p1.eval(&c), p2.eval(&c)]);
                let ratio = scaled.coeff(0) / h.coeff(0);
                assert!(ratio.is_positive());
                assert_eq!(h.scale(&ratio), scaled);
            }
        }
    }

    #[test]
    fn genus_seven_smooth_join() {
        let region = extremal_region(&params(7, 1, 1, 1)).unwrap();
        let summary: Vec<(String, RegionVerdict)> =
            region.pieces.iter().map(|p| (p.to_string(), p.verdict)).collect();
        use RegionVerdict::*;
        assert_eq!(
            summary,
            vec![
                ("(0, 13-2√42)".to_string(), NoAdmissibleExtremal),
                ("{13-2√42}".to_string(), Boundary),
                ("(13-2√42, 1)".to_string(), AdmissibleExtremal),
                ("{1}".to_string(), ProductRay),
                ("(1, 13+2√42)".to_string(), AdmissibleExtremal),
                ("{13+2√42}".to_string(), Boundary),
                ("(13+2√42, ∞)".to_string(), NoAdmissibleExtremal),
            ]
        );
        assert_eq!(region.pieces[1].boundary_poly, Some(Poly::from_ints(&[1, -26, 1])));
    }

    #[test]
    fn genus_one_is_exhausted() {
        let region = extremal_region(&params(1, 1, 2, 1)).unwrap();
        let summary: Vec<String> = region.pieces.iter().map(|p| p.to_string()).collect();
        assert_eq!(summary, vec!["(0, 1/2)", "{1/2}", "(1/2, ∞)"]);
        assert_eq!(region.pieces[1].verdict, RegionVerdict::ProductRay);
    }

    #[test]
    fn high_genus_weighted_join() {
        let region = extremal_region(&params(23, 1, 12, 1)).unwrap();
        let adm: Vec<&RegionPiece> = region.admissible().collect();
        assert_eq!(adm.len(), 2);
        assert_eq!(adm[0].lo.label, "0");
        assert_eq!(adm[0].hi.label, "1/12");
        let hat = adm[1].hi.value.as_ref().unwrap();
        assert_eq!(hat.cmp_rational(&rat(77, 100)), Ordering::Greater);
        assert_eq!(hat.cmp_rational(&rat(79, 100)), Ordering::Less);
        let quartic = Poly::from_ints(&[37, 5820, 197748, -1528416, 1622592]);
        assert_eq!(hat.sign_of(&quartic), Ordering::Equal);
        let cubic = Poly::from_ints(&[-7, -486, 1944, 1728]);
        let tilde: Vec<&CriticalPoint> =
            region.critical_points.iter().filter(|p| p.defining_poly == cubic).collect();
        assert_eq!(tilde.len(), 1);
        assert_eq!(tilde[0].value.cmp_rational(&rat(21, 100)), Ordering::Greater);
        assert_eq!(tilde[0].value.cmp_rational(&rat(23, 100)), Ordering::Less);
    }

    #[test]
    fn decomposition_matches_pointwise_verdicts() {
        for (g, l, w1, w2) in [(7, 1, 1, 1), (23, 1, 12, 1), (12, 1, 3, 2), (40, 2, 5, 1)] {
            let p = params(g, l, w1, w2);
            let region = extremal_region(&p).unwrap();
            for num in 1..60 {
                let c = rat(num * num, 97);
                let pointwise = extremal_verdict_at_slope(&p, &c).unwrap();
                let expected = match (pointwise.strength, pointwise.positivity) {
                    (Strength::ProductRay, _) => RegionVerdict::ProductRay,
                    (_, Some(pos)) => RegionVerdict::from_positivity(pos),
                    (_, None) => unreachable!(),
                };
                assert_eq!(region.verdict_at(&c), Some(expected), "g={g} c={c}");
            }
        }
    }

    #[test]
    fn square_splitting() {
        assert_eq!(split_square(&BigInt::from(672)), (BigInt::from(4), BigInt::from(42)));
        assert_eq!(split_square(&BigInt::from(7)), (BigInt::from(1), BigInt::from(7)));
    }
}
