//! Square-free reduction and Sturm sequences.
//!
//! Counting convention: `SturmChain::count(a, b)` is the number of distinct real roots
//! in the half-open interval `(a, b]`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Rescales by a positive constant so the coefficients are coprime integers.
/// Signs at every point are preserved.
pub(crate) fn positive_normalize(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs();
    Poly::from_bigints(&ints.into_iter().map(|c| c / &content).collect::<Vec<_>>())
}

/// `p / gcd(p, p')`: same distinct roots as `p`, each simple. Signs between roots
/// are not preserved in general.
pub fn square_free_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(positive_normalize(&p.div_rem(&g).0))
}

/// Yun's square-free decomposition: returns `[f1, f2, ...]` with `p = c·f1·f2²·f3³···`,
/// each `fi` square-free and pairwise coprime (some may be constant).
pub fn square_free_factors(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let mut c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    loop {
        let a = b.gcd(&d);
        out.push(positive_normalize(&a));
        b = b.div_rem(&a).0;
        if b.degree() == Some(0) {
            break;
        }
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
    }
    while out.last().is_some_and(|f| f.degree() == Some(0)) {
        out.pop();
    }
    Ok(out)
}

/// Product of the factors of odd multiplicity: its real roots are exactly the points
/// where `p` changes sign.
pub fn odd_multiplicity_part(p: &Poly) -> Result<Poly> {
    let factors = square_free_factors(p)?;
    Ok(factors
        .iter()
        .step_by(2)
        .fold(Poly::constant(Rational::one()), |acc, f| &acc * f))
}

#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<Poly>,
}

impl SturmChain {
    /// Builds the chain of the square-free part of `p`.
    pub fn new(p: &Poly) -> Result<Self> {
        let sf = square_free_part(p)?;
        Ok(Self::of_square_free(sf))
    }

    /// Builds the chain assuming `sf` is already square-free.
    pub(crate) fn of_square_free(sf: Poly) -> Self {
        let mut polys = vec![sf.clone()];
        let d = positive_normalize(&sf.derivative());
        if !d.is_zero() {
            polys.push(d);
            loop {
                let n = polys.len();
                let r = polys[n - 2].rem(&polys[n - 1]);
                if r.is_zero() {
                    break;
                }
                polys.push(positive_normalize(&-r));
            }
        }
        SturmChain { polys }
    }

    pub fn square_free(&self) -> &Poly {
        &self.polys[0]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for p in &self.polys {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Variations at +∞ (signs of leading coefficients).
    pub fn variations_at_pos_inf(&self) -> usize {
        self.variations_by(|p| p.leading().map_or(Ordering::Equal, |l| l.cmp(&Rational::zero())))
    }

    /// Variations at -∞.
    pub fn variations_at_neg_inf(&self) -> usize {
        self.variations_by(|p| {
            let s = p.leading().map_or(Ordering::Equal, |l| l.cmp(&Rational::zero()));
            if p.degree().unwrap_or(0) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        })
    }

    fn variations_by(&self, sign: impl Fn(&Poly) -> Ordering) -> usize {
        let signs: Vec<Ordering> = self
            .polys
            .iter()
            .map(sign)
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        let at_a = usize::from(self.square_free().eval(a).is_zero());
        self.count(a, b) + at_a
    }

    /// Distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let at_b = usize::from(self.square_free().eval(b).is_zero());
        self.count(a, b) - at_b
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

pub(crate) fn check_interval(a: &Rational, b: &Rational) -> Result<()> {
    if a < b {
        Ok(())
    } else {
        Err(Error::EmptyInterval {
            lo: format_rational(a),
            hi: format_rational(b),
        })
    }
}

/// Number of distinct real roots of `p` in `(a, b]`, via the Sturm chain of its
/// square-free part.
pub fn sturm_sign_changes(p: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_interval(a, b)?;
    Ok(SturmChain::new(p)?.count(a, b))
}
