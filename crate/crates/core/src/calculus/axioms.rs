// SPDX-License-Identifier: Apache-2.0

//! λ-bracket axioms evaluated on concrete elements, and seeded random
//! composites to feed them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::ConformalAlgebra;
use super::expr::{binomial, factorial, Generator, LambdaPoly, VAExpr};
use super::skew;
use crate::arith::{Rational, Scalar};
use crate::lie::Parity;

/// A named nonzero leftover.
pub type AxiomResidual = (String, VAExpr);

fn sign(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr) -> Rational {
    let odd = |e| alg.parity(e) == Some(Parity::Odd);
    if odd(a) && odd(b) {
        Rational::from_int(-1)
    } else {
        Rational::one()
    }
}

fn push(out: &mut Vec<AxiomResidual>, label: String, e: VAExpr) {
    if !e.is_zero() {
        out.push((label, e));
    }
}

fn degree(p: &LambdaPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// `[b_λ a]` computed directly against skewsymmetry applied to `[a_λ b]`.
pub fn skewsymmetry(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr) -> Vec<AxiomResidual> {
    let par = if sign(alg, a, b).is_one() { Parity::Even } else { Parity::Odd };
    let ba = alg.lambda_bracket(b, a);
    let via = skew(alg, &alg.lambda_bracket(a, b), par);
    let mut out = Vec::new();
    let top = degree(&ba).max(degree(&via));
    for n in 0..=top {
        push(&mut out, format!("skew λ^{n}"), &ba.coeff(n) - &via.coeff(n));
    }
    out
}

/// `(∂a)_(n) b = -n a_(n-1) b` and `a_(n) ∂b = ∂(a_(n) b) + n a_(n-1) b`.
pub fn sesquilinearity(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr) -> Vec<AxiomResidual> {
    let ab = alg.lambda_bracket(a, b);
    let da_b = alg.lambda_bracket(&alg.derive(a), b);
    let a_db = alg.lambda_bracket(a, &alg.derive(b));
    let top = degree(&ab) + 1;
    let mut out = Vec::new();
    for n in 0..=top {
        let prev = if n > 0 { ab.coeff(n - 1).scale_rational(&Rational::from_int(n as i64)) } else { VAExpr::zero() };
        push(&mut out, format!("(∂a)_({n})b"), &da_b.coeff(n) + &prev);
        push(&mut out, format!("a_({n})∂b"), &(&a_db.coeff(n) - &alg.derive(&ab.coeff(n))) - &prev);
    }
    out
}

/// Conformal Jacobi identity in terms of n-th products.
pub fn jacobi(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> Vec<AxiomResidual> {
    let s = sign(alg, a, b);
    let bc = alg.lambda_bracket(b, c);
    let ac = alg.lambda_bracket(a, c);
    let ab = alg.lambda_bracket(a, b);
    let mut mmax = degree(&ab).max(degree(&ac));
    for x in bc.coeffs() {
        mmax = mmax.max(degree(&alg.lambda_bracket(a, x)));
    }
    let mut nmax = degree(&bc);
    for x in ac.coeffs() {
        nmax = nmax.max(degree(&alg.lambda_bracket(b, x)));
    }
    for x in ab.coeffs() {
        nmax = nmax.max(degree(&alg.lambda_bracket(x, c)));
    }
    let mut out = Vec::new();
    for m in 0..=mmax {
        for n in 0..=nmax {
            let mut e = alg.nth_product(a, &bc.coeff(n), m as u32);
            e.add_scaled_rational(&alg.nth_product(b, &ac.coeff(m), n as u32), &-&s);
            for j in 0..=m {
                let t = alg.nth_product(&ab.coeff(j), c, (m + n - j) as u32);
                e.add_scaled_rational(&t, &-&binomial(m as u64, j as u64));
            }
            push(&mut out, format!("jacobi m={m} n={n}"), e);
        }
    }
    out
}

/// Right Wick formula `[a_λ :bc:]`.
pub fn wick(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> Vec<AxiomResidual> {
    let s = sign(alg, a, b);
    let bc = alg.nprod(b, c);
    let lhs = alg.lambda_bracket(a, &bc);
    let ab = alg.lambda_bracket(a, b);
    let ac = alg.lambda_bracket(a, c);
    let top = degree(&lhs).max(degree(&ab) + degree(&ac) + 2);
    let mut out = Vec::new();
    for n in 0..=top {
        let mut e = lhs.coeff(n);
        e.add_scaled_rational(&alg.nprod(&ab.coeff(n), c), &Rational::from_int(-1));
        e.add_scaled_rational(&alg.nprod(b, &ac.coeff(n)), &-&s);
        for j in 0..n {
            let t = alg.nth_product(&ab.coeff(j), c, (n - 1 - j) as u32);
            e.add_scaled_rational(&t, &-&binomial(n as u64, j as u64));
        }
        push(&mut out, format!("wick λ^{n}"), e);
    }
    out
}

/// `:ab: - p:ba: = Σ_j (-1)^j ∂^{j+1}/(j+1)! a_(j) b`.
pub fn quasi_commutativity(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr) -> Vec<AxiomResidual> {
    let s = sign(alg, a, b);
    let mut e = alg.nprod(a, b);
    e.add_scaled_rational(&alg.nprod(b, a), &-&s);
    for (j, x) in alg.lambda_bracket(a, b).coeffs().iter().enumerate() {
        let c = &Rational::from_int(if j % 2 == 0 { -1 } else { 1 }) / &factorial(j as u64 + 1);
        e.add_scaled_rational(&alg.derive_n(x, j as u32 + 1), &c);
    }
    let mut out = Vec::new();
    push(&mut out, "quasi-commutativity".into(), e);
    out
}

/// `::ab:c: = :a:bc:: + Σ_j :(∂^{j+1}a/(j+1)!)(b_(j)c): + p Σ_j :(∂^{j+1}b/(j+1)!)(a_(j)c):`.
pub fn quasi_associativity(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> Vec<AxiomResidual> {
    let s = sign(alg, a, b);
    let mut e = alg.nprod(&alg.nprod(a, b), c);
    e.add_scaled_rational(&alg.nprod(a, &alg.nprod(b, c)), &Rational::from_int(-1));
    for (x, y, coef) in [(a, b, Rational::from_int(-1)), (b, a, -&s)] {
        for (j, t) in alg.lambda_bracket(y, c).coeffs().iter().enumerate() {
            let dx = alg.derive_n(x, j as u32 + 1);
            e.add_scaled_rational(&alg.nprod(&dx, t), &(&coef / &factorial(j as u64 + 1)));
        }
    }
    let mut out = Vec::new();
    push(&mut out, "quasi-associativity".into(), e);
    out
}

/// Every axiom on one ordered triple.
pub fn all_axioms(alg: &ConformalAlgebra, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> Vec<AxiomResidual> {
    let mut out = skewsymmetry(alg, a, b);
    out.extend(sesquilinearity(alg, a, b));
    out.extend(jacobi(alg, a, b, c));
    out.extend(wick(alg, a, b, c));
    out.extend(quasi_commutativity(alg, a, b));
    out.extend(quasi_associativity(alg, a, b, c));
    out
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let r = Rational::new(rng.gen_range(1..=3), rng.gen_range(1..=2));
    let r = if rng.gen_bool(0.5) { -r } else { r };
    if rng.gen_bool(0.25) {
        Scalar::k().scale(&r)
    } else {
        Scalar::from_rational(r)
    }
}

fn random_term(alg: &ConformalAlgebra, gens: &[Generator], rng: &mut ChaCha8Rng) -> VAExpr {
    let nf = rng.gen_range(1..=2);
    let parts: Vec<VAExpr> = (0..nf)
        .map(|_| {
            let g = *gens.choose(rng).expect("nonempty generator list");
            alg.gen_d(g, rng.gen_range(0..=1))
        })
        .collect();
    alg.nprod_all(&parts).scale(&random_coefficient(rng))
}

/// Homogeneous random composites of up to two normally ordered words with
/// at most two factors, built through the product engine.
pub fn random_composites(alg: &ConformalAlgebra, seed: u64, count: usize) -> Vec<VAExpr> {
    let gens: Vec<Generator> = alg.generators().iter().map(|g| g.gen).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut e = random_term(alg, &gens, &mut rng);
        if rng.gen_bool(0.5) {
            let f = random_term(alg, &gens, &mut rng);
            if alg.parity(&f) == alg.parity(&e) {
                e = &e + &f;
            }
        }
        if !e.is_zero() && alg.parity(&e).is_some() {
            out.push(e);
        }
    }
    out
}
