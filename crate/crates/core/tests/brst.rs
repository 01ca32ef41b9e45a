// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use proptest::prelude::*;
use wbrst::arith::{Rational, Scalar};
use wbrst::brst::{Complex, Datum, Mode, IDENTITY_IDS};
use wbrst::calculus::axioms::random_composites;
use wbrst::calculus::{substitute, Generator, VAExpr};
use wbrst::catalog::{builtin_datum, AlgebraSpecFile, BUILTIN_NAMES};
use wbrst::lie::{DualCoxeter, Parity};

fn complex(name: &str) -> Complex {
    Complex::with_default_mode(builtin_datum(name).unwrap()).unwrap()
}

fn k() -> Scalar {
    Scalar::k()
}

fn int(n: i64) -> Scalar {
    Scalar::from(n)
}

fn rq(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn idx(cx: &Complex, name: &str) -> usize {
    cx.datum.alg.index_of(name).unwrap()
}

/// Generators of the sl2-principal complex: basis order e, h, f.
struct Sl2 {
    cx: Complex,
    e: VAExpr,
    h: VAExpr,
    f: VAExpr,
    pe: VAExpr,
    pu: VAExpr,
}

fn sl2() -> Sl2 {
    let cx = complex("sl2-principal");
    let g = |gen| cx.ca.gen(gen);
    let (e, h, f) = (idx(&cx, "e"), idx(&cx, "h"), idx(&cx, "f"));
    Sl2 {
        e: g(Generator::Current(e)),
        h: g(Generator::Current(h)),
        f: g(Generator::Current(f)),
        pe: g(Generator::PhiLower(e)),
        pu: g(Generator::PhiUpper(e)),
        cx,
    }
}

#[test]
fn sl2_differential_and_its_action() {
    let s = sl2();
    let ca = &s.cx.ca;
    assert_eq!(*s.cx.d(), ca.nprod(&s.e, &s.pu) + s.pu.clone());
    // d_(0) f = :φ^e h: + k ∂φ^e.
    let want = ca.nprod(&s.pu, &s.h) + ca.derive(&s.pu).scale(&k());
    assert_eq!(s.cx.d0(&s.f), want);
    // d_(0) φ_e = e + (f|e).
    assert_eq!(s.cx.d0(&s.pe), s.e.clone() + VAExpr::vacuum());
    assert!(s.cx.d0(&s.pu).is_zero());
    assert!(s.cx.d0(&VAExpr::vacuum()).is_zero());
    assert!(s.cx.check_d_squared().ok());
}

#[test]
fn sl2_building_blocks() {
    let s = sl2();
    let ca = &s.cx.ca;
    let u = |n: &str| s.cx.unit(idx(&s.cx, n));
    let jh = s.h.clone() + ca.nprod(&s.pe, &s.pu).scale(&int(2));
    assert_eq!(s.cx.j_block(&u("h")), jh);
    assert_eq!(s.cx.j_block(&u("f")), s.f);
    assert!(s.cx.j_block(&s.cx.datum.alg.zero_vector()).is_zero());

    // J^{f} = f - ¼:J(h)J(h): - ((k+1)/2) ∂J(h).
    let k1 = &k() + &int(1);
    let mut jf = s.f.clone();
    jf.add_scaled_rational(&ca.nprod(&jh, &jh), &rq(-1, 4));
    jf.add_scaled(&ca.derive(&jh), &-(k1.scale(&rq(1, 2))));
    assert_eq!(s.cx.j_f(), jf);

    // L^g = (:ef: + :fe: + ½:hh:) / (2(k+2)).
    let mut cas = ca.nprod(&s.e, &s.f) + ca.nprod(&s.f, &s.e);
    cas.add_scaled_rational(&ca.nprod(&s.h, &s.h), &rq(1, 2));
    let kh = &k() + &int(2);
    assert_eq!(s.cx.l_sugawara(), cas.scale(&(&kh * &int(2)).inv()));
    assert_eq!(s.cx.l_charged(), -ca.nprod(&s.pu, &ca.derive(&s.pe)));
    assert!(s.cx.l_neutral().is_zero());
}

#[test]
fn sl2_central_charge_and_closedness() {
    let s = sl2();
    let kh = &k() + &int(2);
    let k1 = &k() + &int(1);
    let c = &int(1) - &(&(&int(6) * &(&k1 * &k1)) * &kh.inv());
    let (check, got) = s.cx.central_charge();
    assert!(check.ok());
    assert_eq!(got, c);
    assert_eq!(s.cx.central_charge_ope(), Some(c));
    assert_eq!(s.cx.central_charge_at(&rq(-1, 2)).unwrap(), Rational::zero());
    assert!(s.cx.central_charge_at(&rq(-2, 1)).is_err());
    assert!(s.cx.verify_thm31().ok());
    assert!(s.cx.verify_thm32().ok());
    assert!(s.cx.p2().is_zero());
}

#[test]
fn sl2_free_field_images() {
    let s = sl2();
    let t = s.cx.ffr_target();
    let h = t.gen(Generator::Current(idx(&s.cx, "h")));
    let kh = (&k() + &int(2)).inv();
    let mut want = t.nprod(&h, &h).scale(&kh.scale(&rq(1, 4)));
    want.add_scaled(&t.derive(&h), &(&(&k() + &int(1)) * &kh).scale(&rq(1, 2)));
    assert_eq!(s.cx.ffr_l().unwrap(), want);
    // J^{(v)} with v of negative degree and no ghosts maps to zero.
    assert!(s.cx.ffr(&s.f).unwrap().is_zero());
    assert!(s.cx.check_ffr().ok());
}

#[test]
fn sl3_minimal_differential_shape() {
    let cx = complex("sl3-minimal");
    let d = cx.d();
    assert!(d.terms().all(|(m, _)| cx.ca.charge(m) == -1));
    assert!(d.terms().all(|(m, _)| cx.ca.conformal_weight2(m) == 2));
    assert!(d.terms().any(|(m, _)| m.len() == 3), "cubic ghost term missing");
    assert!(cx.check_d_squared().ok());
}

#[test]
fn sl3_minimal_neutral_current_image() {
    // a = -h1 + h2 spans g^f_0; ⟨e12, e23⟩ = (f|[e12, e23]) = 1 gives
    // Φ^{e12} = Φ_{e23}, Φ^{e23} = -Φ_{e12}, and ½ Σ :Φ^j Φ_{[u_j, a]}: = 3 :Φ_{e12} Φ_{e23}:.
    let cx = complex("sl3-minimal");
    let a = cx.datum.alg.parse_vector("-h1 + h2").unwrap();
    let t = cx.ffr_target();
    let g = |n: &str| t.gen(Generator::Current(idx(&cx, n)));
    let p = |n: &str| t.gen(Generator::NeutralPhi(idx(&cx, n)));
    let want = g("h2") - g("h1") + t.nprod(&p("e12"), &p("e23")).scale(&int(3));
    let jz = cx.j_zero(&a).unwrap();
    assert!(cx.d0(&jz).is_zero());
    assert_eq!(cx.ffr(&jz).unwrap(), want);
}

#[test]
fn sl3_minimal_bilinear_forms() {
    let cx = complex("sl3-minimal");
    let a = cx.datum.alg.parse_vector("h1 - h2").unwrap();
    // κ_{1/2}(a, a) = Σ over g_{1/2} of α(a)²: 3² + 3².
    let half = cx.kappa(&a, &a, wbrst::lie::KillingSelector::Degree(1));
    assert_eq!(half, rq(18, 1));
    let diff = &cx.b_zero(&a, &a) - &cx.b_half(&a, &a);
    // B_0 - B_{1/2} = ½κ_{1/2} + ½(κ - κ_0) - κ_{>0} on g_0.
    let full = cx.kappa(&a, &a, wbrst::lie::KillingSelector::Full);
    let zero = cx.kappa(&a, &a, wbrst::lie::KillingSelector::Degree(0));
    let want = &(&(&half + &full) - &zero) * &rq(1, 2);
    let want = &want - &cx.kappa_pos(&a, &a);
    assert_eq!(diff, Scalar::from_rational(want));
    assert_eq!(zero, Rational::zero());
}

#[test]
fn sl3_minimal_half_current() {
    let cx = complex("sl3-minimal");
    for v in cx.centralizer_basis(-1) {
        let j = cx.j_half(&v).unwrap();
        assert!(cx.d0(&j).is_zero());
        assert!(j.terms().all(|(m, _)| cx.ca.conformal_weight2(m) == 3));
    }
    assert!(cx.j_half(&cx.datum.alg.zero_vector()).unwrap().is_zero());
    assert!(cx.j_half(&cx.unit(idx(&cx, "h1"))).is_err());
}

#[test]
fn beta_components_sl3_minimal() {
    // (ρ_{>0}|ρ_{>0}) = |2x|² = 2, |ρ|² = 2, ρ_{1/2} = x, str Ω_0 = 2 + 2.
    let cx = complex("sl3-minimal");
    let [pp, rr, hp, st] = cx.beta_terms();
    assert_eq!([pp.clone(), rr.clone(), hp.clone(), st.clone()], [rq(2, 1), rq(2, 1), rq(1, 1), rq(4, 1)]);
    let with = |s: i64| &(&(&pp - &rr) + &(&hp * &rq(s, 6))) + &(&st * &rq(1, 24));
    assert_eq!(with(1), rq(1, 3));
    assert_eq!(with(-1), Rational::zero());
    assert!(cx.beta_from_bracket().is_zero());
}

#[test]
fn every_catalog_datum_passes_structural_checks() {
    for name in BUILTIN_NAMES {
        let cx = complex(name);
        for (id, c) in [
            ("d2", cx.check_d_squared()),
            ("closed", cx.check_closed_forms()),
            ("2.10", cx.check_ope_2_10()),
            ("2.15", cx.check_ope_2_15()),
            ("2.18", cx.check_ope_2_18()),
            ("thm3.1", cx.verify_thm31()),
            ("thm3.2", cx.verify_thm32()),
            ("c", cx.central_charge().0),
            ("ffr", cx.check_ffr()),
        ] {
            assert!(c.ok(), "{name} {id}: {:?}", c.summary());
        }
        for id in IDENTITY_IDS {
            let c = cx.verify_identity(id).unwrap();
            assert!(c.ok(), "{name} {id}: {:?}", c.summary());
        }
    }
    assert!(complex("sl2-principal").verify_identity("nope").is_err());
}

#[test]
fn differential_is_primary_of_weight_one() {
    for name in ["sl2-principal", "sl3-minimal", "osp12-principal"] {
        let cx = complex(name);
        let b = cx.ca.lambda_bracket(cx.d(), &cx.l_total());
        assert!(b.coeff(0).is_zero(), "{name}");
        assert_eq!(b.coeff(1), *cx.d(), "{name}");
        assert!(b.coeff(2).is_zero() && b.degree() == Some(1), "{name}");
    }
}

#[test]
fn gl22_currents_are_primary_for_sugawara() {
    let cx = complex("gl22-principal");
    let lg = cx.l_sugawara();
    for i in 0..cx.datum.alg.dim() {
        let a = cx.cur(&cx.unit(i));
        let b = cx.ca.lambda_bracket(&a, &lg);
        assert!(b.coeff(0).is_zero(), "{}", cx.datum.alg.basis_name(i));
        assert_eq!(b.coeff(1), a);
        assert_eq!(b.degree(), Some(1));
    }
    assert!(cx.ca.lambda_bracket(&lg, &lg).coeff(3).terms().all(|(m, _)| m.is_vacuum()));
}

fn corrupted_sl3(i: &str, j: &str, kk: &str, c: i64) -> Result<Complex, String> {
    let base = builtin_datum("sl3-minimal").unwrap().alg;
    let ix = |n: &str| base.index_of(n).unwrap();
    let alg = base.with_bracket_coefficient(ix(i), ix(j), ix(kk), Rational::from_int(c));
    assert!(!alg.validate().is_ok());
    let mut datum = Datum::new_unchecked(alg).map_err(|e| e.to_string())?;
    // The corrupted Casimir is no longer scalar; keep the uncorrupted h∨.
    datum.hvee = DualCoxeter::Scalar(Rational::from_int(3));
    Complex::new(datum, Mode::Standard).map_err(|e| e.to_string())
}

#[test]
fn corrupted_structure_constant_is_detected() {
    for (i, j, kk) in [("e12", "e23", "e13"), ("e12", "e21", "h1"), ("e13", "e32", "e12"), ("h1", "e13", "e13")] {
        let cx = corrupted_sl3(i, j, kk, 2).expect("corrupted datum builds");
        assert_caught(&cx);
    }
}

fn assert_caught(cx: &Complex) {
    let d2 = cx.check_d_squared();
    let t31 = cx.verify_thm31();
    assert!(!d2.ok() || !t31.ok());
    for c in [d2, t31] {
        if !c.ok() {
            assert!(!c.residuals.is_empty());
        }
    }
}

#[test]
fn corrupted_rho_is_detected() {
    let mut datum = builtin_datum("sl3-minimal").unwrap();
    let x = datum.alg.x().clone();
    for (r, xi) in datum.rho.rho_pos.iter_mut().zip(&x) {
        *r = &*r + xi;
    }
    let cx = Complex::with_default_mode(datum).unwrap();
    let c = cx.verify_thm32();
    assert!(!c.ok());
    let res = cx.thm_exact_residual();
    assert!(!res.is_zero());
    assert!(res.terms().all(|(m, _)| cx.ca.conformal_weight2(m) == 4));
}

/// Same algebra with the basis listed in the order given by `perm`
/// (`perm[old] = new`).
fn permuted(spec: &AlgebraSpecFile, perm: &[usize]) -> AlgebraSpecFile {
    let mut out = spec.clone();
    for (old, b) in spec.basis.iter().enumerate() {
        out.basis[perm[old]] = b.clone();
    }
    let remap = |v: &[String]| {
        let mut w = v.to_vec();
        for (old, s) in v.iter().enumerate() {
            w[perm[old]] = s.clone();
        }
        w
    };
    out.x = remap(&spec.x);
    out.f = remap(&spec.f);
    out.identity_element = spec.identity_element.as_deref().map(remap);
    for e in &mut out.form {
        e.i = perm[e.i];
        e.j = perm[e.j];
    }
    for b in &mut out.brackets {
        b.i = perm[b.i];
        b.j = perm[b.j];
        for t in &mut b.terms {
            t.k = perm[t.k];
        }
    }
    out
}

fn relabel(a: &Complex, e: &VAExpr, b: &Complex, perm: &[usize]) -> VAExpr {
    let mut images = HashMap::new();
    for spec in a.ca.generators() {
        let g = match spec.gen {
            Generator::Current(i) => Generator::Current(perm[i]),
            Generator::PhiLower(i) => Generator::PhiLower(perm[i]),
            Generator::PhiUpper(i) => Generator::PhiUpper(perm[i]),
            Generator::NeutralPhi(i) => Generator::NeutralPhi(perm[i]),
        };
        images.insert(spec.gen, b.ca.gen(g));
    }
    substitute(&a.ca, e, &images, &b.ca).unwrap()
}

fn composites(cx: &Complex, seed: u64, n: usize) -> Vec<VAExpr> {
    random_composites(&cx.ca, seed, n)
}

fn parity_sign(cx: &Complex, a: &VAExpr) -> i64 {
    match cx.ca.parity(a) {
        Some(Parity::Odd) => -1,
        _ => 1,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn differential_is_basis_independent(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let a = complex("sl3-minimal");
        let spec = AlgebraSpecFile::from_algebra(&a.datum.alg);
        let alg = permuted(&spec, &perm).to_algebra().unwrap();
        let b = Complex::with_default_mode(Datum::new(alg).unwrap()).unwrap();
        prop_assert_eq!(relabel(&a, a.d(), &b, &perm), b.d().clone());
        let jf = relabel(&a, &a.j_f(), &b, &perm);
        prop_assert_eq!(jf, b.j_f());
    }

    #[test]
    fn d0_is_an_odd_derivation(seed in any::<u64>(), which in 0usize..3) {
        let name = ["sl2-principal", "sl3-minimal", "osp12-principal"][which];
        let cx = complex(name);
        let xs = composites(&cx, seed, 2);
        let (a, b) = (&xs[0], &xs[1]);
        let lhs = cx.d0(&cx.np(a, b));
        let mut rhs = cx.np(&cx.d0(a), b);
        rhs.add_scaled_rational(&cx.np(a, &cx.d0(b)), &Rational::from_int(parity_sign(&cx, a)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d0_lowers_charge_and_keeps_weight(seed in any::<u64>(), which in 0usize..3) {
        let name = ["sl2-principal", "sl3-minimal", "sl21-minimal"][which];
        let cx = complex(name);
        let monos: Vec<_> = composites(&cx, seed, 3).iter().flat_map(|a| a.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>()).collect();
        for m in monos {
            let (ch, w) = (cx.ca.charge(&m), cx.ca.conformal_weight2(&m));
            let da = cx.d0(&VAExpr::from_monomial(m, Scalar::one()));
            prop_assert!(da.terms().all(|(m, _)| cx.ca.charge(m) == ch - 1));
            prop_assert!(da.terms().all(|(m, _)| cx.ca.conformal_weight2(m) == w));
            prop_assert!(cx.d0(&da).is_zero());
        }
    }
}
