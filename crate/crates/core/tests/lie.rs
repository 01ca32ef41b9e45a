// SPDX-License-Identifier: Apache-2.0

use wbrst::arith::Rational;
use wbrst::catalog::{builtin_algebra, BUILTIN_NAMES};
use wbrst::lie::linalg::{self, Matrix};
use wbrst::lie::*;

fn alg(name: &str) -> SuperAlgebra {
    builtin_algebra(name).unwrap().unwrap()
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn vec_of(a: &SuperAlgebra, s: &str) -> Vector {
    a.parse_vector(s).unwrap()
}

fn idx(a: &SuperAlgebra, name: &str) -> usize {
    a.index_of(name).unwrap()
}

/// Same tables with a different `x` and `f`.
fn regraded(a: &SuperAlgebra, x: Vector, f: Vector) -> SuperAlgebra {
    SuperAlgebra::new(a.name(), a.basis().to_vec(), a.bracket_entries(), a.form_entries(), x, f, None).unwrap()
}

fn structure(a: &SuperAlgebra) -> (Grading, CentralizerData, DualBases) {
    let g = grade_by_x(a).unwrap();
    let c = check_datum(a, &g).unwrap();
    let d = dual_basis(a, &g).unwrap();
    (g, c, d)
}

#[test]
fn catalog_entries_validate() {
    for name in BUILTIN_NAMES {
        let a = alg(name);
        let rep = a.validate();
        assert!(rep.is_ok(), "{name}: {rep}");
    }
}

#[test]
fn catalog_entries_are_good_with_half_isomorphism() {
    for name in BUILTIN_NAMES {
        let a = alg(name);
        let g = grade_by_x(&a).unwrap();
        let c = check_datum(&a, &g).unwrap();
        assert!(c.good && c.iso_half, "{name}");
    }
}

#[test]
fn corrupted_bracket_breaks_invariance() {
    let a = alg("sl2-principal");
    let (e, h, f) = (idx(&a, "e"), idx(&a, "h"), idx(&a, "f"));
    let bad = a.with_bracket_coefficient(e, f, h, r(2));
    let rep = bad.validate();
    assert!(!rep.is_ok());
    // ([e,f]|h) = 2(h|h) = 4 while (e|[f,h]) = (e|2f) = 2.
    assert!(rep.violations.iter().any(|v| matches!(
        v,
        Violation::FormNotInvariant { i, j, k, lhs, rhs } if (*i, *j, *k) == (e, f, h) && *lhs == r(4) && *rhs == r(2)
    )));
}

#[test]
fn osp12_passes_odd_jacobi() {
    let a = alg("osp12-principal");
    assert!(a.validate().is_ok());
    let odd: Vec<usize> = (0..a.dim()).filter(|&i| a.p(i) == 1).collect();
    assert_eq!(odd.len(), 2);
    // The odd-odd brackets are symmetric and land in the even part.
    for &i in &odd {
        for &j in &odd {
            let b = a.bracket(&a.unit(i), &a.unit(j));
            assert_eq!(b, a.bracket(&a.unit(j), &a.unit(i)));
            assert_eq!(a.vector_parity(&b).unwrap_or(Parity::Even), Parity::Even);
        }
    }
}

#[test]
fn gradings() {
    let a = alg("sl2-principal");
    let g = grade_by_x(&a).unwrap();
    assert_eq!([g.degree2(idx(&a, "e")), g.degree2(idx(&a, "h")), g.degree2(idx(&a, "f"))], [2, 0, -2]);

    let a = alg("sl3-minimal");
    let g = grade_by_x(&a).unwrap();
    assert_eq!(g.dims(), vec![(2, 1), (1, 2), (0, 2), (-1, 2), (-2, 1)]);

    let a = alg("osp12-principal");
    let g = grade_by_x(&a).unwrap();
    for i in 0..a.dim() {
        assert_eq!(g.degree2(i).rem_euclid(2) as u8, a.p(i), "{}", a.basis_name(i));
    }
    assert_eq!(g.dims(), vec![(2, 1), (1, 1), (0, 1), (-1, 1), (-2, 1)]);

    let sl2 = alg("sl2-principal");
    let flat = regraded(&sl2, sl2.zero_vector(), sl2.zero_vector());
    let g = grade_by_x(&flat).unwrap();
    assert!(g.all().iter().all(|&i| g.degree2(i) == 0));
    assert!(g.s_pos().is_empty());
}

#[test]
fn centralizers() {
    let a = alg("sl2-principal");
    let (_, c, _) = structure(&a);
    assert!(c.good && c.iso_half);
    assert_eq!(c.basis.len(), 1);

    let a = alg("sl3-minimal");
    let (_, c, _) = structure(&a);
    assert!(c.good && c.iso_half);
    assert_eq!(c.basis.len(), 4);
    assert_eq!(c.degree(0).len(), 1);
    assert_eq!(c.degree(-1).len(), 2);
    assert_eq!(c.degree(-2).len(), 1);

    let no_f = regraded(&a, a.x().clone(), a.zero_vector());
    let g = grade_by_x(&no_f).unwrap();
    match check_datum(&no_f, &g) {
        Ok(c) => assert!(!c.good),
        Err(e) => assert_eq!(e, LieError::FNotDegreeMinusOne),
    }
}

#[test]
fn dual_bases_sl2() {
    let a = alg("sl2-principal");
    let (_, _, d) = structure(&a);
    assert_eq!(d.dual_of(idx(&a, "e")), &vec_of(&a, "f"));
    assert_eq!(d.dual_of(idx(&a, "h")), &vec_of(&a, "1/2*h"));
    assert_eq!(d.dual_of(idx(&a, "f")), &vec_of(&a, "e"));
}

#[test]
fn neutral_pairing_sl3_minimal() {
    let a = alg("sl3-minimal");
    let (g, _, d) = structure(&a);
    let half = g.s_half();
    assert_eq!(half.len(), 2);
    let m = &d.neutral_gram;
    for i in 0..2 {
        for j in 0..2 {
            // Even g_{1/2}: the pairing is skew.
            assert_eq!(m[i][j], -&m[j][i]);
            assert_eq!(m[i][j], neutral_pairing(&a, &a.unit(half[i]), &a.unit(half[j])));
        }
    }
    assert_eq!(linalg::rank(m), 2);
    // Φ^i are dual to Φ_j under the pairing.
    for i in 0..2 {
        for j in 0..2 {
            let s: Rational = (0..2).map(|b| &d.neutral_dual[i][b] * &m[b][j]).sum();
            let t: Rational = (0..2).map(|b| &m[j][b] * &d.neutral_dual[i][b]).sum();
            assert!(s == Rational::from_int(i64::from(i == j)) || t == Rational::from_int(i64::from(i == j)));
        }
    }
}

#[test]
fn half_isomorphism_failure_is_singular() {
    // x = diag(1/2, 1/2, 0, -1/2) shifted traceless; f = E41 has rank one on g_{1/2}.
    let a = alg("sl4-minimal");
    let x = vec_of(&a, "3/8*h1 + 3/4*h2 + 5/8*h3");
    let f = vec_of(&a, "e41");
    let b = regraded(&a, x, f);
    let g = grade_by_x(&b).unwrap();
    assert_eq!(g.s_half().len(), 3);
    if let Ok(c) = check_datum(&b, &g) {
        assert!(!c.iso_half);
    }
    assert!(matches!(dual_basis(&b, &g), Err(LieError::SingularGram(_))));
}

#[test]
fn killing_forms_sl2() {
    let a = alg("sl2-principal");
    let g = grade_by_x(&a).unwrap();
    let h = vec_of(&a, "h");
    assert_eq!(killing_form(&a, &g, &h, &h, KillingSelector::Full), r(8));
    assert_eq!(killing_form(&a, &g, &h, &h, KillingSelector::Degree(0)), r(0));
    assert_eq!(killing_form(&a, &g, &h, &h, KillingSelector::Positive), r(4));
}

#[test]
fn killing_decomposes_by_degree() {
    for name in BUILTIN_NAMES {
        let a = alg(name);
        let g = grade_by_x(&a).unwrap();
        let degrees: Vec<i64> = g.dims().iter().map(|(d, _)| *d).collect();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (u, v) = (a.unit(i), a.unit(j));
                let total: Rational =
                    degrees.iter().map(|&d| killing_form(&a, &g, &u, &v, KillingSelector::Degree(d))).sum();
                assert_eq!(total, killing_form(&a, &g, &u, &v, KillingSelector::Full), "{name}");
            }
        }
    }
}

#[test]
fn positive_and_negative_killing_relations() {
    for name in BUILTIN_NAMES {
        let a = alg(name);
        let g = grade_by_x(&a).unwrap();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (u, v) = (a.unit(i), a.unit(j));
                let kp = killing_form(&a, &g, &u, &v, KillingSelector::Positive);
                let kn = killing_form(&a, &g, &u, &v, KillingSelector::Negative);
                let k = killing_form(&a, &g, &u, &v, KillingSelector::Full);
                let k0 = killing_form(&a, &g, &u, &v, KillingSelector::Degree(0));
                let s = str_pos_ad(&a, &g, &a.bracket(&u, &v));
                assert_eq!(kn, &kp - &s, "{name} κ<0");
                assert_eq!(kp, &(&(&k - &k0) + &s) * &q(1, 2), "{name} κ>0");
            }
        }
    }
}

#[test]
fn dual_coxeter_numbers() {
    let expect = [
        ("sl2-principal", r(2)),
        ("sl3-principal", r(3)),
        ("sl3-minimal", r(3)),
        ("sl4-minimal", r(4)),
        ("osp12-principal", q(3, 2)),
        ("sl21-minimal", r(1)),
    ];
    for (name, h) in expect {
        let a = alg(name);
        let (g, _, d) = structure(&a);
        assert_eq!(dual_coxeter(&a, &d).scalar(), Some(&h), "{name}");
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (u, v) = (a.unit(i), a.unit(j));
                let lhs = killing_form(&a, &g, &u, &v, KillingSelector::Full);
                assert_eq!(lhs, &(&r(2) * &h) * &a.form(&u, &v), "{name}");
            }
        }
    }
}

#[test]
fn gl22_casimir_is_not_scalar() {
    let a = alg("gl22-principal");
    let (_, _, d) = structure(&a);
    let id = a.identity_element().unwrap().clone();
    let DualCoxeter::NotScalar(omega) = dual_coxeter(&a, &d) else { panic!("expected a non-scalar Casimir") };
    for i in 0..a.dim() {
        let u = a.unit(i);
        let got = linalg::mat_vec(&omega, &u);
        let c = &r(-2) * &a.form(&u, &id);
        let want: Vector = id.iter().map(|t| &c * t).collect();
        assert_eq!(got, want, "{}", a.basis_name(i));
    }
}

fn rho(name: &str) -> (SuperAlgebra, RhoData) {
    let a = alg(name);
    let (g, c, d) = structure(&a);
    let rho = rho_vectors(&a, &g, &d, &c).unwrap();
    (a, rho)
}

#[test]
fn rho_vectors_examples() {
    let (a, rh) = rho("sl2-principal");
    assert_eq!(rh.rho_pos, vec_of(&a, "1/2*h"));
    assert_eq!(&rh.rho_pos, a.x());

    let (a, rh) = rho("sl3-minimal");
    let two_x: Vector = a.x().iter().map(|c| c * &r(2)).collect();
    assert_eq!(rh.rho_pos, two_x);

    let (a, rh) = rho("sl3-principal");
    assert_eq!(rh.rho_pos, rh.rho);
    assert_eq!(rh.rho, vec_of(&a, "h1 + h2"));
}

fn omega(name: &str) -> (SuperAlgebra, Grading, RhoData, Omega0Report) {
    let a = alg(name);
    let (g, c, d) = structure(&a);
    let rh = rho_vectors(&a, &g, &d, &c).unwrap();
    let o = omega0(&a, &g, &d, &rh);
    (a, g, rh, o)
}

#[test]
fn omega0_on_half_is_twice_ad_rho_pos() {
    let (a, g, rh, o) = omega("sl3-minimal");
    assert!(o.half_twice_rho);
    let ad_rho: Matrix = a.ad(&rh.rho_pos);
    for i in g.s_half() {
        let u = a.unit(i);
        let want: Vector = linalg::mat_vec(&ad_rho, &u).iter().map(|c| c * &r(2)).collect();
        assert_eq!(linalg::mat_vec(&o.matrix, &u), want);
    }
}

#[test]
fn omega0_sl2() {
    let (a, _, _, o) = omega("sl2-principal");
    let h = vec_of(&a, "h");
    assert!(linalg::mat_vec(&o.matrix, &h).iter().all(Rational::is_zero));
    // Ω_0 = ad(h/2) ad h is 2 on e, matching κ_0(e, f) = 2.
    let e = vec_of(&a, "e");
    assert_eq!(linalg::mat_vec(&o.matrix, &e), vec_of(&a, "2*e"));
}

#[test]
fn omega0_is_symmetric() {
    for name in BUILTIN_NAMES {
        let (a, _, _, o) = omega(name);
        assert!(o.killing_zero, "{name}");
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (u, v) = (a.unit(i), a.unit(j));
                let l = a.form(&linalg::mat_vec(&o.matrix, &u), &v);
                let rr = a.form(&u, &linalg::mat_vec(&o.matrix, &v));
                assert_eq!(l, rr, "{name}");
            }
        }
    }
}

#[test]
fn vector_text_round_trip() {
    let a = alg("sl3-minimal");
    for s in ["e12", "1/2*h1 - h2", "-e31 + 3*e23", "0"] {
        let v = vec_of(&a, s);
        assert_eq!(vec_of(&a, &a.format_vector(&v)), v);
    }
}
