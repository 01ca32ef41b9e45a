// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use proptest::prelude::*;
use wbrst::arith::{Rational, Scalar};
use wbrst::brst::Complex;
use wbrst::calculus::axioms::{jacobi, quasi_associativity, random_composites, skewsymmetry, wick};
use wbrst::calculus::{
    normal_form, render_expr, substitute, ConformalAlgebra, GenBracket, GenSpec, Generator, LambdaPoly, RawExpr,
    Style, VAExpr,
};
use wbrst::catalog::builtin_datum;
use wbrst::lie::Parity;

const E: Generator = Generator::Current(0);
const H: Generator = Generator::Current(1);
const F: Generator = Generator::Current(2);
const PE: Generator = Generator::PhiLower(0);
const PU: Generator = Generator::PhiUpper(0);

fn int(n: i64) -> Scalar {
    Scalar::from(n)
}

fn spec(gen: Generator, parity: Parity, weight2: u32, conf_weight2: i64, charge: i32, text: &str) -> GenSpec {
    GenSpec { gen, parity, weight2, conf_weight2, charge, text: text.into(), latex: text.into() }
}

/// `V^k(sl_2) ⊗ F(φ_e, φ^e)` written out by hand, with `(e|f) = 1`,
/// `(h|h) = 2`. `he` overrides the `[h_λ e]` coefficient for fault tests.
fn sl2_with(he: i64) -> ConformalAlgebra {
    let gens = vec![
        spec(E, Parity::Even, 2, 0, 0, "e"),
        spec(H, Parity::Even, 2, 2, 0, "h"),
        spec(F, Parity::Even, 2, 4, 0, "f"),
        spec(PE, Parity::Odd, 1, 0, 1, "φ_e"),
        spec(PU, Parity::Odd, 1, 2, -1, "φ^e"),
    ];
    ConformalAlgebra::new(gens, move |a, b| {
        let k = Scalar::k();
        let lie = |v: Vec<(Generator, i64)>| v.into_iter().map(|(g, c)| (g, int(c))).collect();
        match (a, b) {
            (E, F) => GenBracket { lie: lie(vec![(H, 1)]), vac0: Scalar::zero(), vac1: k },
            (F, E) => GenBracket { lie: lie(vec![(H, -1)]), vac0: Scalar::zero(), vac1: k },
            (H, E) => GenBracket { lie: lie(vec![(E, he)]), ..Default::default() },
            (E, H) => GenBracket { lie: lie(vec![(E, -2)]), ..Default::default() },
            (H, F) => GenBracket { lie: lie(vec![(F, -2)]), ..Default::default() },
            (F, H) => GenBracket { lie: lie(vec![(F, 2)]), ..Default::default() },
            (H, H) => GenBracket { lie: vec![], vac0: Scalar::zero(), vac1: &int(2) * &k },
            (PE, PU) | (PU, PE) => GenBracket { lie: vec![], vac0: Scalar::one(), vac1: Scalar::zero() },
            _ => GenBracket::default(),
        }
    })
}

fn sl2() -> ConformalAlgebra {
    sl2_with(2)
}

fn g(a: &ConformalAlgebra, x: Generator) -> VAExpr {
    a.gen(x)
}

fn lam(coeffs: Vec<VAExpr>) -> LambdaPoly {
    LambdaPoly::from_coeffs(coeffs)
}

#[test]
fn quasi_commuted_product() {
    let a = sl2();
    let raw = RawExpr::nprod(RawExpr::gen(F), RawExpr::gen(E));
    let want = &a.nprod(&g(&a, E), &g(&a, F)) - &a.derive(&g(&a, H));
    assert_eq!(normal_form(&a, &raw), want);
    assert_eq!(a.nprod(&g(&a, F), &g(&a, E)), want);
}

#[test]
fn fermion_reordering_correction() {
    // ::φ_e φ^e: φ_e: = ∂φ_e, since :φ_e φ_e: = 0 and [φ^e_λ φ_e] = 1.
    let a = sl2();
    let inner = RawExpr::nprod(RawExpr::gen(PE), RawExpr::gen(PU));
    let raw = RawExpr::nprod(inner, RawExpr::gen(PE));
    assert_eq!(normal_form(&a, &raw), a.gen_d(PE, 1));
}

#[test]
fn unit_and_zero() {
    let a = sl2();
    let e = g(&a, E);
    assert_eq!(normal_form(&a, &RawExpr::nprod(RawExpr::Vacuum, RawExpr::gen(E))), e);
    assert_eq!(a.nprod(&e, &VAExpr::vacuum()), e);
    assert!(a.derive(&VAExpr::vacuum()).is_zero());
    assert_eq!(render_expr(&a, &VAExpr::vacuum(), Style::Text), "1");
    assert_eq!(render_expr(&a, &VAExpr::zero(), Style::Text), "0");
}

#[test]
fn generator_brackets() {
    let a = sl2();
    let (e, h, f) = (g(&a, E), g(&a, H), g(&a, F));
    assert_eq!(a.lambda_bracket(&e, &f), lam(vec![h.clone(), VAExpr::scalar(Scalar::k())]));
    assert_eq!(a.lambda_bracket(&g(&a, PE), &g(&a, PU)), lam(vec![VAExpr::vacuum()]));
    let ee = a.nprod(&e, &e);
    assert_eq!(a.lambda_bracket(&h, &ee), lam(vec![ee.scale(&int(4))]));
    assert_eq!(a.nth_product(&e, &f, 1), VAExpr::scalar(Scalar::k()));
    assert!(a.nth_product(&e, &f, 99).is_zero());
    assert!(a.nth_product(&ee, &a.nprod(&f, &f), 99).is_zero());
}

#[test]
fn derivation_rule() {
    let a = sl2();
    let (e, f) = (g(&a, E), g(&a, F));
    let lhs = a.derive(&a.nprod(&e, &f));
    let rhs = &a.nprod(&a.derive(&e), &f) + &a.nprod(&e, &a.derive(&f));
    assert_eq!(lhs, rhs);
}

#[test]
fn substitution() {
    let a = sl2();
    let ef = a.nprod(&g(&a, E), &g(&a, F));
    let kill: HashMap<Generator, VAExpr> = [(E, VAExpr::zero())].into_iter().collect();
    assert!(substitute(&a, &ef, &kill, &a).unwrap().is_zero());
    assert_eq!(substitute(&a, &ef, &HashMap::new(), &a).unwrap(), ef);
    // e ↦ f, f ↦ e, h ↦ -h is an automorphism of the current algebra.
    let swap: HashMap<Generator, VAExpr> =
        [(E, g(&a, F)), (F, g(&a, E)), (H, g(&a, H).scale(&int(-1)))].into_iter().collect();
    let fe = substitute(&a, &ef, &swap, &a).unwrap();
    assert_eq!(fe, a.nprod(&g(&a, F), &g(&a, E)));
}

#[test]
fn charge_and_weight() {
    let a = sl2();
    let m = a.monomial(&[(H, 0), (PE, 0)]);
    assert_eq!(a.charge(&m), 1);
    assert_eq!(a.conformal_weight(&a.monomial(&[(H, 1)])), Rational::from_int(2));

    let cx = Complex::with_default_mode(builtin_datum("sl3-minimal").unwrap()).unwrap();
    for s in cx.ca.generators() {
        if let Generator::NeutralPhi(_) = s.gen {
            assert_eq!(cx.ca.conformal_weight(&cx.ca.monomial(&[(s.gen, 0)])), Rational::new(1, 2));
        }
    }
}

#[test]
fn axiom_checks_detect_corruption() {
    // [h_λ e] = 3e contradicts [e_λ h] = -2e under skewsymmetry.
    let bad = sl2_with(3);
    let (e, h, f) = (g(&bad, E), g(&bad, H), g(&bad, F));
    assert!(!skewsymmetry(&bad, &h, &e).is_empty());
    assert!(!jacobi(&bad, &e, &f, &h).is_empty() || !jacobi(&bad, &h, &e, &f).is_empty());
    let good = sl2();
    let (e, h, f) = (g(&good, E), g(&good, H), g(&good, F));
    assert!(skewsymmetry(&good, &h, &e).is_empty());
    assert!(jacobi(&good, &h, &e, &f).is_empty());
}

fn sl3_minimal() -> Complex {
    Complex::with_default_mode(builtin_datum("sl3-minimal").unwrap()).unwrap()
}

/// `[b_λ a]` from `[a_λ b]` through `-p Σ_n (-λ-∂)^n/n! a_(n)b`, expanded by hand.
fn skew_oracle(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr) -> Vec<VAExpr> {
    let odd = |x| alg.parity(x) == Some(Parity::Odd);
    let p = if odd(a) && odd(b) { -1 } else { 1 };
    let ab = alg.lambda_bracket(a, b);
    let top = ab.coeffs().len();
    let mut out = vec![VAExpr::zero(); top];
    for n in 0..top {
        // (-λ-∂)^n/n! = Σ_m (-1)^n λ^m ∂^{n-m} / (m! (n-m)!)
        for m in 0..=n {
            let mut fact = Rational::one();
            for t in 1..=(n - m) as i64 {
                fact = &fact * &Rational::from_int(t);
            }
            let sign = if n % 2 == 0 { -p } else { p };
            let c = &Rational::from_int(sign) / &fact;
            out[m].add_scaled_rational(&alg.derive_n(&ab.coeff(n), (n - m) as u32), &c);
        }
    }
    out
}

fn composites(seed: u64) -> (Complex, Vec<VAExpr>) {
    let cx = sl3_minimal();
    let v = random_composites(&cx.ca, seed, 3);
    (cx, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skewsymmetry_on_composites(seed in any::<u64>()) {
        let (cx, v) = composites(seed);
        let ba = cx.ca.lambda_bracket(&v[1], &v[0]);
        let want = skew_oracle(&cx.ca, &v[0], &v[1]);
        for (n, w) in want.iter().enumerate() {
            prop_assert_eq!(&ba.coeff(n), w);
        }
        prop_assert!(ba.coeffs().len() <= want.len().max(1));
    }

    #[test]
    fn sesquilinearity_on_composites(seed in any::<u64>()) {
        let (cx, v) = composites(seed);
        let (a, b) = (&v[0], &v[1]);
        let ab = cx.ca.lambda_bracket(a, b);
        let da = cx.ca.lambda_bracket(&cx.ca.derive(a), b);
        let db = cx.ca.lambda_bracket(a, &cx.ca.derive(b));
        for n in 0..=ab.coeffs().len() {
            let prev = if n > 0 { ab.coeff(n - 1).scale_rational(&Rational::from_int(n as i64)) } else { VAExpr::zero() };
            prop_assert_eq!(da.coeff(n), -&prev);
            prop_assert_eq!(db.coeff(n), &cx.ca.derive(&ab.coeff(n)) + &prev);
        }
    }

    #[test]
    fn jacobi_on_generator_triples(i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let cx = sl3_minimal();
        let gens: Vec<VAExpr> = cx.ca.generators().iter().map(|s| cx.ca.gen(s.gen)).collect();
        let n = gens.len();
        let (a, b, c) = (&gens[i % n], &gens[j % n], &gens[k % n]);
        prop_assert!(jacobi(&cx.ca, a, b, c).is_empty());
        prop_assert!(wick(&cx.ca, a, b, c).is_empty());
    }

    #[test]
    fn jacobi_and_quasi_associativity_on_composites(seed in any::<u64>()) {
        let (cx, v) = composites(seed);
        prop_assert!(jacobi(&cx.ca, &v[0], &v[1], &v[2]).is_empty());
        prop_assert!(quasi_associativity(&cx.ca, &v[0], &v[1], &v[2]).is_empty());
    }

    #[test]
    fn normal_form_is_idempotent(seed in any::<u64>()) {
        let (cx, v) = composites(seed);
        let once = normal_form(&cx.ca, &RawExpr::nprod(RawExpr::Reduced(v[0].clone()), RawExpr::Reduced(v[1].clone())));
        prop_assert_eq!(&once, &cx.ca.nprod(&v[0], &v[1]));
        prop_assert_eq!(normal_form(&cx.ca, &RawExpr::Reduced(once.clone())), once);
    }

    #[test]
    fn charge_and_weight_are_additive(seed in any::<u64>()) {
        let (cx, v) = composites(seed);
        let alg = &cx.ca;
        for (m, _) in v[0].terms() {
            let parts = alg.decode(m);
            let ch: i64 = parts.iter().map(|(g, _)| alg.charge(&alg.monomial(&[(*g, 0)]))).sum();
            prop_assert_eq!(alg.charge(m), ch);
            let w: Rational = parts
                .iter()
                .map(|(g, n)| &alg.conformal_weight(&alg.monomial(&[(*g, 0)])) + &Rational::from_int(*n as i64))
                .sum();
            prop_assert_eq!(alg.conformal_weight(m), w);
        }
    }

    #[test]
    fn bracket_lowers_weight_by_n_plus_one(seed in any::<u64>()) {
        let cx = sl3_minimal();
        let alg = &cx.ca;
        let v = random_composites(alg, seed, 2);
        // Split into weight-homogeneous pieces first.
        let pieces = |e: &VAExpr| {
            let mut by_w: Vec<(Rational, VAExpr)> = Vec::new();
            for (m, c) in e.terms() {
                let w = alg.conformal_weight(m);
                let t = VAExpr::from_monomial(m.clone(), c.clone());
                match by_w.iter_mut().find(|(x, _)| *x == w) {
                    Some((_, acc)) => *acc = &*acc + &t,
                    None => by_w.push((w, t)),
                }
            }
            by_w
        };
        for (wa, a) in pieces(&v[0]) {
            for (wb, b) in pieces(&v[1]) {
                for (n, c) in alg.lambda_bracket(&a, &b).coeffs().iter().enumerate() {
                    let want = &(&wa + &wb) - &Rational::from_int(n as i64 + 1);
                    for (m, _) in c.terms() {
                        prop_assert_eq!(alg.conformal_weight(m), want.clone());
                    }
                }
            }
        }
    }
}
