// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use wbrst::arith::{ArithError, PolyK, RatFunK, RatOp, Rational};

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly() -> impl Strategy<Value = PolyK> {
    prop::collection::vec(rat(), 0..=5).prop_map(PolyK::from_coeffs)
}

/// Rational functions with numerator and denominator of degree at most 4.
fn ratfun() -> impl Strategy<Value = RatFunK> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunK::normalize(n, d).ok())
}

fn nonzero_ratfun() -> impl Strategy<Value = RatFunK> {
    ratfun().prop_filter("zero", |a| !a.is_zero())
}

fn is_normalized(a: &RatFunK) -> bool {
    let g = a.num().gcd(a.den());
    a.den().leading().map_or(false, Rational::is_one) && g.is_constant() && (!a.num().is_zero() || a.den().is_one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn addition_is_a_commutative_group(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &RatFunK::zero(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn multiplication_and_distributivity(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &RatFunK::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_ratfun()) {
        prop_assert!((&a * &a.inv()).is_one());
        prop_assert_eq!(RatFunK::apply(RatOp::Div, &a, &a).unwrap(), RatFunK::one());
    }

    #[test]
    fn outputs_are_normalized(a in ratfun(), b in nonzero_ratfun()) {
        for op in [RatOp::Add, RatOp::Sub, RatOp::Mul, RatOp::Div, RatOp::Neg] {
            let r = RatFunK::apply(op, &a, &b).unwrap();
            prop_assert!(is_normalized(&r), "{:?} gave {}", op, r);
            let again = RatFunK::normalize(r.num().clone(), r.den().clone()).unwrap();
            prop_assert_eq!(again, r);
        }
    }

    #[test]
    fn normalize_is_idempotent(n in poly(), d in poly()) {
        if let Ok(a) = RatFunK::normalize(n, d) {
            prop_assert!(is_normalized(&a));
            prop_assert_eq!(RatFunK::normalize(a.num().clone(), a.den().clone()).unwrap(), a);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun(), k0 in rat()) {
        let (Ok(x), Ok(y)) = (a.eval(&k0), b.eval(&k0)) else { return Ok(()) };
        prop_assert_eq!((&a + &b).eval(&k0).unwrap(), &x + &y);
        prop_assert_eq!((&a - &b).eval(&k0).unwrap(), &x - &y);
        prop_assert_eq!((&a * &b).eval(&k0).unwrap(), &x * &y);
        if !y.is_zero() {
            let q = RatFunK::apply(RatOp::Div, &a, &b).unwrap();
            prop_assert_eq!(q.eval(&k0).unwrap(), &x / &y);
        }
    }

    #[test]
    fn text_round_trip(a in ratfun()) {
        let back: RatFunK = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_round_trip(r in rat()) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
}

#[test]
fn arithmetic_examples() {
    let r = |s: &str| s.parse::<RatFunK>().unwrap();
    assert_eq!(RatFunK::apply(RatOp::Add, &r("(k + 1)/(k + 2)"), &r("(1)/(k + 2)")).unwrap(), RatFunK::one());
    assert_eq!(RatFunK::apply(RatOp::Mul, &RatFunK::k(), &r("(1)/(k)")).unwrap(), RatFunK::one());
    assert!(RatFunK::apply(RatOp::Sub, &RatFunK::k(), &RatFunK::k()).unwrap().is_zero());
}

#[test]
fn normalization_examples() {
    let p = |s: &str| s.parse::<PolyK>().unwrap();
    assert_eq!(RatFunK::normalize(p("2*k + 2"), p("2*k + 4")).unwrap().to_string(), "(k + 1)/(k + 2)");
    let z = RatFunK::normalize(PolyK::zero(), p("k^3 + 1")).unwrap();
    assert!(z.num().is_zero() && z.den().is_one());
    assert_eq!(RatFunK::normalize(p("k^2 - 1"), p("k - 1")).unwrap().to_string(), "k + 1");
}

#[test]
fn evaluation_examples() {
    // 1 - 6(k+1)^2/(k+2), evaluated independently at k = -1/2: 1 - 6(1/4)/(3/2) = 0.
    let k = RatFunK::k();
    let k1 = &k + &RatFunK::one();
    let c = &RatFunK::one() - &(&(&RatFunK::from(6) * &(&k1 * &k1)) / &(&k + &RatFunK::from(2)));
    assert_eq!(c.eval(&Rational::new(-1, 2)).unwrap(), Rational::zero());
    let inv = (&k + &RatFunK::from(2)).inv();
    assert_eq!(inv.eval(&Rational::from_int(-2)), Err(ArithError::PoleAtPoint(Rational::from_int(-2))));
    assert_eq!(k.eval(&Rational::new(7, 3)).unwrap(), Rational::new(7, 3));
}
