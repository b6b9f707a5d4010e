//! Real root isolation, real algebraic numbers, and the rational root test.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{format_decimal, int, midpoint, to_f64, Rational};
use super::sturm::{check_interval, square_free_part, SturmChain};
use crate::error::{Error, Result};

/// Default isolating-interval width is `2^-DEFAULT_WIDTH_BITS`.
pub const DEFAULT_WIDTH_BITS: u32 = 40;

pub fn pow2_inv(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

pub fn default_width() -> Rational {
    pow2_inv(DEFAULT_WIDTH_BITS)
}

/// A real algebraic number: the unique root of a square-free `poly` in `[lo, hi]`.
///
/// Either `lo == hi` (an exact rational root), or neither endpoint is a root and
/// `poly` changes sign across the interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    poly: Poly,
    #[serde(with = "super::rational::serde_str")]
    lo: Rational,
    #[serde(with = "super::rational::serde_str")]
    hi: Rational,
}

impl IsolatingInterval {
    /// Wraps an interval already known to isolate one root of square-free `poly`.
    /// Degenerate endpoints are collapsed so the type invariant holds.
    pub fn new(poly: Poly, lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyInterval {
                lo: super::rational::format_rational(&lo),
                hi: super::rational::format_rational(&hi),
            });
        }
        let poly = square_free_part(&poly)?;
        let chain = SturmChain::of_square_free(poly.clone());
        let n = chain.count_closed(&lo, &hi);
        if n != 1 {
            return Err(Error::Invariant(format!(
                "interval does not isolate a single root ({n} roots of {poly})"
            )));
        }
        let mut out = IsolatingInterval { poly, lo, hi };
        out.settle(&chain);
        Ok(out)
    }

    pub fn exact(r: Rational) -> Self {
        let poly = Poly::linear(Rational::one(), -r.clone()).primitive();
        IsolatingInterval { poly, lo: r.clone(), hi: r }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The root itself, when the interval has collapsed onto it.
    pub fn as_exact(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    /// Moves endpoints off roots: collapses onto an endpoint root, or shrinks away
    /// from a neighbouring root sitting on `lo`.
    fn settle(&mut self, chain: &SturmChain) {
        let sf = chain.square_free();
        if sf.eval(&self.hi).is_zero() {
            self.lo = self.hi.clone();
            return;
        }
        while sf.eval(&self.lo).is_zero() && self.lo != self.hi {
            if chain.count(&self.lo, &self.hi) == 0 {
                // the only root in [lo, hi] is lo itself
                self.hi = self.lo.clone();
                return;
            }
            let mid = midpoint(&self.lo, &self.hi);
            if sf.eval(&mid).is_zero() {
                self.lo = mid.clone();
                self.hi = mid;
                return;
            }
            if chain.count(&self.lo, &mid) == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// Bisects until the width is at most `width`.
    pub fn refine_to(&mut self, width: &Rational) {
        let lo_sign = self.poly.sign_at(&self.lo);
        while self.lo != self.hi && &self.width() > width {
            self.bisect_once(lo_sign);
        }
    }

    fn bisect_once(&mut self, lo_sign: Ordering) {
        let mid = midpoint(&self.lo, &self.hi);
        match self.poly.sign_at(&mid) {
            Ordering::Equal => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s if s == lo_sign => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    pub fn refined(mut self, width: &Rational) -> Self {
        self.refine_to(width);
        self
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Exact comparison of the represented number against a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if x < &self.lo {
            return Ordering::Greater;
        }
        if x > &self.hi {
            return Ordering::Less;
        }
        if self.lo == self.hi {
            return Ordering::Equal;
        }
        if x == &self.lo {
            return Ordering::Greater;
        }
        if x == &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(x);
        if s == Ordering::Equal {
            Ordering::Equal
        } else if s == self.poly.sign_at(&self.lo) {
            // root lies in (x, hi)
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact sign of `q` at the represented number.
    pub fn sign_of(&self, q: &Poly) -> Ordering {
        if let Some(r) = self.as_exact() {
            return q.sign_at(r);
        }
        if q.is_zero() {
            return Ordering::Equal;
        }
        let g = self.poly.gcd(q);
        if g.degree().unwrap_or(0) > 0 {
            let gc = SturmChain::of_square_free(square_free_part(&g).expect("nonzero gcd"));
            if gc.count_closed(&self.lo, &self.hi) > 0 {
                return Ordering::Equal;
            }
        }
        let qc = SturmChain::new(q).expect("nonzero polynomial");
        let mut me = self.clone();
        let lo_sign = me.poly.sign_at(&me.lo);
        while qc.count_closed(&me.lo, &me.hi) > 0 {
            me.bisect_once(lo_sign);
            if let Some(r) = me.as_exact() {
                return q.sign_at(r);
            }
        }
        q.sign_at(&me.lo)
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_algebraic(&self, other: &IsolatingInterval) -> Ordering {
        if let Some(r) = self.as_exact() {
            return other.cmp_rational(r).reverse();
        }
        if let Some(r) = other.as_exact() {
            return self.cmp_rational(r);
        }
        let g = self.poly.gcd(&other.poly);
        let gc = (g.degree().unwrap_or(0) > 0)
            .then(|| SturmChain::of_square_free(square_free_part(&g).expect("nonzero gcd")));
        let (mut a, mut b) = (self.clone(), other.clone());
        let (sa, sb) = (a.poly.sign_at(&a.lo), b.poly.sign_at(&b.lo));
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(gc) = &gc {
                let lo = (&a.lo).max(&b.lo).clone();
                let hi = (&a.hi).min(&b.hi).clone();
                if gc.count_closed(&lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
            a.bisect_once(sa);
            b.bisect_once(sb);
            if a.as_exact().is_some() || b.as_exact().is_some() {
                return a.cmp_algebraic(&b);
            }
        }
    }

    /// Floating-point approximation (for display only).
    pub fn approx(&self) -> f64 {
        let tight = self.clone().refined(&pow2_inv(60));
        to_f64(&midpoint(&tight.lo, &tight.hi))
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in [{}, {}]",
            self.poly.display_in("x"),
            format_decimal(to_f64(&self.lo), 12),
            format_decimal(to_f64(&self.hi), 12)
        )
    }
}

/// A real number that is either an exact rational or an algebraic number given by
/// an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealAlgebraic {
    Rational(#[serde(with = "super::rational::serde_str")] Rational),
    Algebraic(IsolatingInterval),
}

impl RealAlgebraic {
    pub fn from_interval(iv: IsolatingInterval) -> Self {
        match iv.as_exact() {
            Some(r) => RealAlgebraic::Rational(r.clone()),
            None => RealAlgebraic::Algebraic(iv),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealAlgebraic::Rational(r) => Some(r),
            RealAlgebraic::Algebraic(_) => None,
        }
    }

    pub fn to_interval(&self) -> IsolatingInterval {
        match self {
            RealAlgebraic::Rational(r) => IsolatingInterval::exact(r.clone()),
            RealAlgebraic::Algebraic(iv) => iv.clone(),
        }
    }

    pub fn sign_of(&self, q: &Poly) -> Ordering {
        match self {
            RealAlgebraic::Rational(r) => q.sign_at(r),
            RealAlgebraic::Algebraic(iv) => iv.sign_of(q),
        }
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            RealAlgebraic::Rational(r) => r.cmp(x),
            RealAlgebraic::Algebraic(iv) => iv.cmp_rational(x),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealAlgebraic::Rational(r) => to_f64(r),
            RealAlgebraic::Algebraic(iv) => iv.approx(),
        }
    }
}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealAlgebraic::Rational(a), RealAlgebraic::Rational(b)) => a.cmp(b),
            (RealAlgebraic::Rational(a), RealAlgebraic::Algebraic(b)) => b.cmp_rational(a).reverse(),
            (RealAlgebraic::Algebraic(a), RealAlgebraic::Rational(b)) => a.cmp_rational(b),
            (RealAlgebraic::Algebraic(a), RealAlgebraic::Algebraic(b)) => a.cmp_algebraic(b),
        }
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgebraic::Rational(r) => f.write_str(&super::rational::format_rational(r)),
            RealAlgebraic::Algebraic(iv) => write!(f, "{iv}"),
        }
    }
}

/// Isolates every distinct real root of `p` in the open interval `(a, b)`.
/// Intervals are disjoint, sorted ascending, and at most `width` wide.
pub fn isolate_real_roots(
    p: &Poly,
    a: &Rational,
    b: &Rational,
    width: &Rational,
) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_interval(a, b)?;
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth(super::rational::format_rational(width)));
    }
    let chain = SturmChain::new(p)?;
    let mut out = Vec::new();
    let total = chain.count(a, b);
    split(&chain, a.clone(), b.clone(), total, &mut out);
    out.retain(|iv| iv.as_exact() != Some(b));
    for iv in &mut out {
        iv.refine_to(width);
    }
    Ok(out)
}

/// Roots of `p` in `(a, +∞)`.
pub fn isolate_roots_above(p: &Poly, a: &Rational, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bound = p.cauchy_bound();
    let hi = if &bound > a { bound } else { a + int(1) };
    isolate_real_roots(p, a, &hi, width)
}

fn split(chain: &SturmChain, lo: Rational, hi: Rational, n: usize, out: &mut Vec<IsolatingInterval>) {
    match n {
        0 => {}
        1 => {
            let mut iv = IsolatingInterval {
                poly: chain.square_free().clone(),
                lo,
                hi,
            };
            iv.settle(chain);
            out.push(iv);
        }
        _ => {
            let mid = midpoint(&lo, &hi);
            let left = chain.count(&lo, &mid);
            split(chain, lo, mid.clone(), left, out);
            split(chain, mid, hi, n - left, out);
        }
    }
}

/// All rational roots of `p`, each confirmed by exact evaluation. Sorted ascending.
///
/// A rational root of a primitive integer polynomial with leading coefficient `L`
/// has denominator dividing `L`, so `L·x` is an integer; isolating every real root to
/// width below `1/L` leaves one integer candidate per interval.
pub fn rational_roots(p: &Poly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = Poly::from_bigints(&square_free_part(p)?.primitive_integer());
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let lead = sf.leading().expect("nonzero").abs();
    let bound = sf.cauchy_bound() + int(1);
    let width = Rational::one() / (&lead * int(2));
    let mut roots = BTreeSet::new();
    for iv in isolate_real_roots(&sf, &-bound.clone(), &bound, &width)? {
        if let Some(r) = iv.as_exact() {
            roots.insert(r.clone());
            continue;
        }
        let n = (iv.hi() * &lead).floor();
        if n > iv.lo() * &lead {
            let cand = n / &lead;
            if sf.eval(&cand).is_zero() {
                roots.insert(cand);
            }
        }
    }
    Ok(roots.into_iter().collect())
}
