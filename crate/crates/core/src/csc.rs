//! The constant scalar curvature ray of a join.
//!
//! In the slope variable `c = v2 / v1` the admissible profile is affine exactly at
//! the positive root of an integer cubic; that root is unique.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::curvature::scalar_coefficients;
use crate::error::{Error, Result};
use crate::exact::rational::from_u64;
use crate::exact::{
    default_width, isolate_real_roots, rational_roots, Poly, Rational, RealAlgebraic, SturmChain,
};
use crate::topology::{JoinParams, WeightVector};

/// `l w1² c³ + (g - 1 + 2 l w2) w1 c² - (g - 1 + 2 l w1) w2 c - l w2²`
pub fn csc_cubic(params: &JoinParams) -> Poly {
    let (g, l) = (from_u64(params.g), from_u64(params.l));
    let (w1, w2) = (from_u64(params.w1), from_u64(params.w2));
    let gm1 = g - Rational::one();
    Poly::new(vec![
        -(&l * &w2 * &w2),
        -((&gm1 + Rational::from_integer(2.into()) * &l * &w1) * &w2),
        (&gm1 + Rational::from_integer(2.into()) * &l * &w2) * &w1,
        &l * &w1 * &w1,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regularity {
    Regular,
    QuasiRegular,
    Irregular,
}

impl Regularity {
    pub fn as_str(self) -> &'static str {
        match self {
            Regularity::Regular => "Regular",
            Regularity::QuasiRegular => "QuasiRegular",
            Regularity::Irregular => "Irregular",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CscRay {
    pub cubic: Poly,
    pub root: RealAlgebraic,
    pub regularity: Regularity,
    /// The Reeb weight `(v1, v2)` with `v2 / v1` the root, when the root is rational.
    pub v: Option<WeightVector>,
}

impl Serialize for CscRay {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CscRay", 4)?;
        st.serialize_field("cubic", &self.cubic)?;
        st.serialize_field("root", &self.root)?;
        st.serialize_field("regularity", &self.regularity)?;
        st.serialize_field("v", &self.v.map(|v| v.as_array()))?;
        st.end()
    }
}

pub fn csc_ray(params: &JoinParams) -> Result<CscRay> {
    csc_ray_with_width(params, &default_width())
}

/// As [`csc_ray`], isolating an irrational root to at most `width`.
pub fn csc_ray_with_width(params: &JoinParams, width: &Rational) -> Result<CscRay> {
    let cubic = csc_cubic(params);
    let chain = SturmChain::new(&cubic)?;
    let positive = chain.count(&Rational::zero(), &cubic.cauchy_bound());
    if positive != 1 {
        return Err(Error::Invariant(format!(
            "CSC cubic {} has {positive} positive roots, expected exactly one",
            cubic.display_in("c")
        )));
    }
    let lower = Rational::new(params.w2.into(), params.w1.into());
    let root = match rational_roots(&cubic)?.into_iter().find(|r| r.is_positive()) {
        Some(r) => RealAlgebraic::Rational(r),
        None => {
            let (a, b) = if params.w1 > params.w2 {
                (lower.clone(), Rational::one())
            } else {
                (Rational::zero(), Rational::from_integer(2.into()))
            };
            let mut found = isolate_real_roots(&cubic, &a, &b, width)?;
            if found.len() != 1 {
                return Err(Error::Invariant(format!(
                    "CSC cubic {} has {} roots in ({a}, {b}), expected one",
                    cubic.display_in("c"),
                    found.len()
                )));
            }
            RealAlgebraic::from_interval(found.remove(0))
        }
    };
    if params.w1 > params.w2
        && !(root.cmp_rational(&lower).is_gt() && root.cmp_rational(&Rational::one()).is_lt())
    {
        return Err(Error::Invariant(format!("CSC root {root} outside ({lower}, 1)")));
    }

    let (regularity, v) = match &root {
        RealAlgebraic::Rational(r) => {
            let v = WeightVector::from_slope(r)?;
            let reg = if v == WeightVector::REGULAR { Regularity::Regular } else { Regularity::QuasiRegular };
            if !params.is_product_ray(v) {
                let (_, b) = scalar_coefficients(params, v)?;
                if !b.is_zero() {
                    return Err(Error::Invariant(format!(
                        "CSC ray v = {v} has nonzero B = {b}"
                    )));
                }
            }
            (reg, Some(v))
        }
        RealAlgebraic::Algebraic(_) => (Regularity::Irregular, None),
    };
    Ok(CscRay { cubic, root, regularity, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use std::cmp::Ordering;

    fn params(g: u64, l: u64, w1: u64, w2: u64) -> JoinParams {
        JoinParams::new(g, l, w1, w2).unwrap()
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(csc_cubic(&params(1, 1, 2, 1)), Poly::from_ints(&[-1, -4, 4, 4]));
        assert_eq!(csc_cubic(&params(23, 1, 12, 1)), Poly::from_ints(&[-1, -46, 288, 144]));
        for g in 1..10 {
            for l in 1..5 {
                assert!(csc_cubic(&params(g, l, 1, 1)).eval(&int(1)).is_zero());
            }
        }
    }

    #[test]
    fn rational_examples() {
        let r = csc_ray(&params(2, 1, 12, 1)).unwrap();
        assert_eq!((r.root.as_rational(), r.regularity), (Some(&rat(1, 3)), Regularity::QuasiRegular));
        assert_eq!(r.v, Some(WeightVector::new(3, 1).unwrap()));
        let r = csc_ray(&params(23, 1, 12, 1)).unwrap();
        assert_eq!(r.root.as_rational(), Some(&rat(1, 6)));
        assert_eq!(r.v, Some(WeightVector::new(6, 1).unwrap()));
        for l in 1..5 {
            let r = csc_ray(&params(1, l, 16, 5)).unwrap();
            assert_eq!(r.root.as_rational(), Some(&rat(5, 8)));
        }
        let r = csc_ray(&params(4, 3, 1, 1)).unwrap();
        assert_eq!((r.root.as_rational(), r.regularity), (Some(&int(1)), Regularity::Regular));
    }

    #[test]
    fn irrational_example() {
        let r = csc_ray(&params(5, 1, 12, 1)).unwrap();
        assert_eq!(r.regularity, Regularity::Irregular);
        assert!(r.v.is_none());
        let RealAlgebraic::Algebraic(iv) = &r.root else { panic!("expected an interval") };
        assert!(iv.lo() > &rat(1, 12) && iv.hi() < &int(1));
        assert!(iv.width() <= default_width());
        assert_ne!(r.cubic.sign_at(iv.lo()), r.cubic.sign_at(iv.hi()));
    }

    #[test]
    fn roots_decrease_toward_limit() {
        let roots: Vec<RealAlgebraic> =
            [10, 100, 1000].iter().map(|&g| csc_ray(&params(g, 1, 12, 1)).unwrap().root).collect();
        assert_eq!(roots[0].cmp(&roots[1]), Ordering::Greater);
        assert_eq!(roots[1].cmp(&roots[2]), Ordering::Greater);
        assert_eq!(roots[2].cmp_rational(&rat(1, 12)), Ordering::Greater);
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(csc_ray(&params(23, 1, 12, 1)).unwrap()).unwrap();
        assert_eq!(v["root"], "1/6");
        assert_eq!(v["regularity"], "QuasiRegular");
        assert_eq!(v["v"], serde_json::json!([6, 1]));
    }
}
