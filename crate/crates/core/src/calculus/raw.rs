// SPDX-License-Identifier: Apache-2.0

//! Unreduced expression trees and their reduction to normal form.

use super::algebra::ConformalAlgebra;
use super::expr::{Generator, VAExpr};
use crate::arith::Scalar;

/// An expression built from sums, scalar multiples, ∂ and binary normally
/// ordered products, nested arbitrarily.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawExpr {
    Vacuum,
    Gen(Generator),
    Reduced(VAExpr),
    Scale(Scalar, Box<RawExpr>),
    Sum(Vec<RawExpr>),
    Deriv(Box<RawExpr>),
    NProd(Box<RawExpr>, Box<RawExpr>),
}

impl RawExpr {
    pub fn gen(g: Generator) -> Self {
        RawExpr::Gen(g)
    }

    pub fn nprod(a: RawExpr, b: RawExpr) -> Self {
        RawExpr::NProd(Box::new(a), Box::new(b))
    }

    pub fn deriv(a: RawExpr) -> Self {
        RawExpr::Deriv(Box::new(a))
    }

    pub fn scale(c: Scalar, a: RawExpr) -> Self {
        RawExpr::Scale(c, Box::new(a))
    }
}

/// Fully reduced PBW normal form of a raw tree.
pub fn normal_form(alg: &ConformalAlgebra, raw: &RawExpr) -> VAExpr {
    match raw {
        RawExpr::Vacuum => VAExpr::vacuum(),
        RawExpr::Gen(g) => alg.gen(*g),
        RawExpr::Reduced(e) => {
            // re-reduce every word so foreign input becomes canonical
            let mut out = VAExpr::zero();
            for (m, c) in e.terms() {
                out.add_scaled(&alg.normalize_word(m.factors()), c);
            }
            out
        }
        RawExpr::Scale(c, a) => normal_form(alg, a).scale(c),
        RawExpr::Sum(parts) => parts.iter().map(|p| normal_form(alg, p)).sum(),
        RawExpr::Deriv(a) => alg.derive(&normal_form(alg, a)),
        RawExpr::NProd(a, b) => alg.nprod(&normal_form(alg, a), &normal_form(alg, b)),
    }
}
