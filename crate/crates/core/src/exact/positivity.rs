//! Exact positivity certificates on open intervals.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{midpoint, Rational};
use super::sturm::{check_interval, odd_multiplicity_part, SturmChain};
use crate::error::{Error, Result};

/// Outcome of deciding `p > 0` on an open interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Positivity {
    StrictlyPositive,
    /// `p ≥ 0` on the interval with an interior zero.
    VanishesInside,
    NegativeSomewhere,
}

impl Positivity {
    pub fn is_positive(self) -> bool {
        self == Positivity::StrictlyPositive
    }
}

/// Decides the sign behaviour of `p` on the open interval `(a, b)`.
///
/// Sign changes happen exactly at roots of odd multiplicity, so the decision is:
/// any odd-multiplicity root inside means `NegativeSomewhere`; otherwise the sign at
/// a single interior non-root point fixes the sign everywhere off the roots, and a
/// Sturm count on the square-free part tells whether any (even-multiplicity) zero
/// sits inside.
pub fn positive_on_open_interval(p: &Poly, a: &Rational, b: &Rational) -> Result<Positivity> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_interval(a, b)?;
    let odd = odd_multiplicity_part(p)?;
    if odd.degree().unwrap_or(0) > 0 && SturmChain::new(&odd)?.count_open(a, b) > 0 {
        return Ok(Positivity::NegativeSomewhere);
    }
    // p has finitely many roots, so this walk toward `a` leaves them quickly.
    let mut x = midpoint(a, b);
    let sign = loop {
        match p.sign_at(&x) {
            Ordering::Equal => x = midpoint(a, &x),
            s => break s,
        }
    };
    if sign == Ordering::Less {
        return Ok(Positivity::NegativeSomewhere);
    }
    if SturmChain::new(p)?.count_open(a, b) > 0 {
        Ok(Positivity::VanishesInside)
    } else {
        Ok(Positivity::StrictlyPositive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn unit() -> (Rational, Rational) {
        (int(-1), int(1))
    }

    #[test]
    fn regular_ray_profile_is_positive() {
        let (a, b) = unit();
        let h = Poly::new(vec![rat(39, 4), rat(11, 2), rat(5, 4)]);
        assert_eq!(positive_on_open_interval(&h, &a, &b).unwrap(), Positivity::StrictlyPositive);
    }

    #[test]
    fn tangent_zero_inside() {
        let (a, b) = unit();
        let p = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(positive_on_open_interval(&p, &a, &b).unwrap(), Positivity::VanishesInside);
    }

    #[test]
    fn negative_between_endpoint_roots() {
        let (a, b) = unit();
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(positive_on_open_interval(&p, &a, &b).unwrap(), Positivity::NegativeSomewhere);
    }

    #[test]
    fn zero_only_at_endpoints_is_positive() {
        let (a, b) = unit();
        let p = Poly::from_ints(&[1, 0, -1]);
        assert_eq!(positive_on_open_interval(&p, &a, &b).unwrap(), Positivity::StrictlyPositive);
    }

    #[test]
    fn double_root_below_zero() {
        // -(x - 1/4)^2 is ≤ 0 with a zero inside
        let (a, b) = unit();
        let p = -Poly::linear(int(1), rat(-1, 4)).pow(2);
        assert_eq!(positive_on_open_interval(&p, &a, &b).unwrap(), Positivity::NegativeSomewhere);
    }

    #[test]
    fn midpoint_root_is_stepped_over() {
        // x^2 (x - 1/2)^2 + 0: zeros at 0 and 1/2, positive elsewhere
        let (a, b) = unit();
        let p = (&Poly::x() * &Poly::linear(int(1), rat(-1, 2))).pow(2);
        assert_eq!(positive_on_open_interval(&p, &a, &b).unwrap(), Positivity::VanishesInside);
    }

    #[test]
    fn rejects_zero_polynomial() {
        let (a, b) = unit();
        assert_eq!(positive_on_open_interval(&Poly::zero(), &a, &b), Err(Error::ZeroPolynomial));
    }
}
