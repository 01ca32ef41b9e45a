// SPDX-License-Identifier: Apache-2.0

//! Exact coefficient arithmetic: ℚ, ℚ[k] and ℚ(k).

mod poly;
mod ratfun;
mod rational;

pub use poly::PolyK;
pub use ratfun::{RatFunK, RatOp};
pub use rational::Rational;

/// Scalars of every expression in the engine.
pub type Scalar = RatFunK;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at k = {0}")]
    PoleAtPoint(Rational),
    #[error("cannot parse `{0}`")]
    Parse(String),
}
