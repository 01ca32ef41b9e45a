// SPDX-License-Identifier: Apache-2.0

//! λ-bracket calculus on normally ordered monomials.

pub mod axioms;
mod algebra;
mod expr;
mod raw;
mod render;
mod substitute;

pub use algebra::{ConformalAlgebra, ExecMode, GenBracket, GenSpec};
pub use expr::{Factor, GenId, Generator, LambdaPoly, Monomial, VAExpr};
pub use raw::{normal_form, RawExpr};
pub use render::{render_by_weight, render_expr, render_lambda, render_monomial, render_scalar, Style};
pub use substitute::substitute;

pub(crate) use expr::factorial;

use crate::arith::Rational;
use crate::lie::Parity;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("image of `{0}` has the wrong parity")]
    ParityMismatch(String),
    #[error("generator `{0}` has no counterpart in the target algebra")]
    UnknownGenerator(String),
}

/// `[b_λ a]` from `[a_λ b]` by skewsymmetry, where `p(a)p(b)` is the parity product.
pub fn skew(alg: &ConformalAlgebra, ab: &LambdaPoly, parity_product: Parity) -> LambdaPoly {
    let s = if parity_product == Parity::Odd { Rational::one() } else { Rational::from_int(-1) };
    let top = match ab.degree() {
        None => return LambdaPoly::zero(),
        Some(d) => d,
    };
    let coeffs = (0..=top)
        .map(|k| {
            let mut acc = VAExpr::zero();
            for n in k..=top {
                let c = ab.coeff(n);
                if c.is_zero() {
                    continue;
                }
                let d = alg.derive_n(&c, (n - k) as u32);
                let sign = if n % 2 == 0 { s.clone() } else { -&s };
                acc.add_scaled_rational(&d, &(&sign / &factorial((n - k) as u64)));
            }
            acc
        })
        .collect();
    LambdaPoly::from_coeffs(coeffs)
}
