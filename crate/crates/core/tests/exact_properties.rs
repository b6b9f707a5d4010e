//! Property tests for the exact arithmetic layer, against polynomials built from
//! known roots.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use sasaki_core::exact::{
    isolate_real_roots, parse_rational, positive_on_open_interval, rational_roots, square_free_part,
    sturm_sign_changes, Poly, Positivity, Rational, RealAlgebraic, SturmChain,
};

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn from_roots(roots: &[Rational]) -> Poly {
    roots.iter().fold(Poly::constant(rat(1, 1)), |acc, r| {
        &acc * &Poly::new(vec![-r.clone(), rat(1, 1)])
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-20i64..=20, 1..7).prop_map(|c| Poly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sturm_counts_distinct_roots(roots in prop::collection::vec(small_rational(), 1..6),
                                   mult in prop::collection::vec(1u32..3, 6)) {
        let mut p = Poly::constant(rat(1, 1));
        for (r, m) in roots.iter().zip(&mult) {
            p = &p * &Poly::new(vec![-r.clone(), rat(1, 1)]).pow(*m);
        }
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let (a, b) = (rat(-6, 1), rat(6, 1));
        let in_window = distinct.iter().filter(|r| **r > a && **r <= b).count();
        prop_assert_eq!(sturm_sign_changes(&p, &a, &b).unwrap(), in_window);
        prop_assert_eq!(SturmChain::new(&p).unwrap().count_all(), distinct.len());
        prop_assert_eq!(rational_roots(&p).unwrap(), distinct.clone());
        let sf = square_free_part(&p).unwrap();
        prop_assert_eq!(sf.degree(), Some(distinct.len()));
    }

    #[test]
    fn half_open_counting(roots in prop::collection::vec(small_rational(), 1..5),
                          a in small_rational(), width in 1i64..40) {
        let b = &a + rat(width, 4);
        let p = from_roots(&roots);
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let expected = distinct.iter().filter(|r| **r > a && **r <= b).count();
        prop_assert_eq!(sturm_sign_changes(&p, &a, &b).unwrap(), expected);
    }

    #[test]
    fn isolation_brackets_every_root(roots in prop::collection::vec(small_rational(), 1..5),
                                     extra in 1i64..5) {
        // an irreducible quadratic factor x² - extra·7 adds two irrational roots
        let q = Poly::from_ints(&[-7 * extra, 0, 1]);
        let p = &from_roots(&roots) * &q;
        let width = rat(1, 1 << 20);
        let (a, b) = (rat(-100, 1), rat(100, 1));
        let found = isolate_real_roots(&p, &a, &b, &width).unwrap();
        let sf = square_free_part(&p).unwrap();
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(found.len(), distinct.len() + 2);
        for w in found.windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
            prop_assert_eq!(w[0].cmp_algebraic(&w[1]), Ordering::Less);
        }
        for iv in &found {
            prop_assert!(iv.width() <= width);
            match iv.as_exact() {
                Some(r) => prop_assert!(p.eval(r).is_zero()),
                None => prop_assert_ne!(sf.sign_at(iv.lo()), sf.sign_at(iv.hi())),
            }
        }
        for r in &distinct {
            prop_assert_eq!(found.iter().filter(|iv| iv.cmp_rational(r) == Ordering::Equal).count(), 1);
        }
    }

    #[test]
    fn positivity_agrees_with_factored_form(roots in prop::collection::vec(small_rational(), 0..4),
                                            doubled in prop::collection::vec(small_rational(), 0..2),
                                            lead in prop_oneof![Just(1i64), Just(-1i64)],
                                            a in small_rational(), width in 1i64..40) {
        let b = &a + rat(width, 4);
        let mut p = from_roots(&roots).scale(&rat(lead, 1));
        for d in &doubled {
            p = &p * &Poly::new(vec![-d.clone(), rat(1, 1)]).pow(2);
        }
        // brute force: sign at many rationals strictly inside
        let n = 400;
        let mut saw_negative = false;
        let mut saw_zero = false;
        for i in 1..n {
            let x = &a + (&b - &a) * rat(i, n);
            match p.sign_at(&x) {
                Ordering::Less => saw_negative = true,
                Ordering::Equal => saw_zero = true,
                Ordering::Greater => {}
            }
        }
        let inside = |r: &Rational| *r > a && *r < b;
        let zero_inside = roots.iter().chain(&doubled).any(inside);
        let verdict = positive_on_open_interval(&p, &a, &b).unwrap();
        if saw_negative {
            prop_assert_eq!(verdict, Positivity::NegativeSomewhere);
        }
        if saw_zero {
            prop_assert_ne!(verdict, Positivity::StrictlyPositive);
        }
        match verdict {
            Positivity::StrictlyPositive => prop_assert!(!zero_inside),
            Positivity::VanishesInside => prop_assert!(zero_inside),
            Positivity::NegativeSomewhere => {}
        }
    }

    #[test]
    fn division_identity(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(roots in prop::collection::vec(small_rational(), 1..4),
                        more in prop::collection::vec(small_rational(), 1..4)) {
        let a = from_roots(&roots);
        let b = from_roots(&more);
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero());
        prop_assert!(b.rem(&g).is_zero());
        let shared = roots.iter().filter(|r| more.contains(r)).collect::<std::collections::BTreeSet<_>>();
        prop_assert_eq!(g.degree().unwrap_or(0) >= shared.len(), true);
    }

    #[test]
    fn rational_text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
        let x = rat(n, d);
        let text = sasaki_core::exact::format_rational(&x);
        prop_assert_eq!(parse_rational(&text).unwrap(), x);
    }

    #[test]
    fn algebraic_sign_of_matches_exact(r in small_rational(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        // r as the root of (x - r)(x² - 2), isolated by itself
        let p = &from_roots(std::slice::from_ref(&r)) * &Poly::from_ints(&[-2, 0, 1]);
        let found = isolate_real_roots(&p, &(&r - rat(1, 1000)), &(&r + rat(1, 1000)), &rat(1, 1 << 10)).unwrap();
        let iv = found.into_iter().find(|iv| iv.cmp_rational(&r) == Ordering::Equal).unwrap();
        let alg = RealAlgebraic::from_interval(iv);
        prop_assert_eq!(alg.sign_of(&q), q.sign_at(&r));
    }
}

#[test]
fn sqrt_two_comparisons() {
    let found = isolate_real_roots(&Poly::from_ints(&[-2, 0, 1]), &rat(0, 1), &rat(2, 1), &rat(1, 1 << 30)).unwrap();
    assert_eq!(found.len(), 1);
    let s = &found[0];
    assert_eq!(s.cmp_rational(&rat(141421, 100000)), Ordering::Greater);
    assert_eq!(s.cmp_rational(&rat(141422, 100000)), Ordering::Less);
    // sign of x² - 2 at √2 is zero, of x - 1 positive
    assert_eq!(s.sign_of(&Poly::from_ints(&[-2, 0, 1])), Ordering::Equal);
    assert_eq!(s.sign_of(&Poly::from_ints(&[-1, 1])), Ordering::Greater);
    assert!(s.lo().is_positive());
}
