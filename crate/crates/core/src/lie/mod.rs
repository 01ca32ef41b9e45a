// SPDX-License-Identifier: Apache-2.0

//! Finite-dimensional Lie superalgebras and the structure attached to a
//! grading element `x` and a nilpotent `f`.

mod algebra;
mod duals;
mod grading;
mod killing;
pub mod linalg;

pub use algebra::{BasisElement, BracketEntry, FormEntry, Parity, SuperAlgebra, ValidationReport, Vector, Violation};
pub use duals::{dual_basis, neutral_pairing, DualBases};
pub use grading::{check_datum, grade_by_x, CentralizerData, Grading};
pub use killing::{
    casimir_on, dual_coxeter, half_signed_sum, killing_form, omega0, rho_vectors, str_pos_ad, supertrace_where,
    DualCoxeter, KillingSelector, Omega0Block, Omega0Report, RhoData, RootChoice,
};

pub(crate) use algebra::sign_of;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("basis element `{0}` is not an ad x eigenvector")]
    NotHomogeneous(String),
    #[error("ad x eigenvalue {eigenvalue} of `{element}` is not a half-integer")]
    NotHalfInteger { element: String, eigenvalue: Rational },
    #[error("f is not concentrated in degree -1")]
    FNotDegreeMinusOne,
    #[error("singular pairing matrix: {0}")]
    SingularGram(String),
    #[error("rho_{{>0}} does not commute with `{0}` although ad f is bijective on g_{{1/2}}")]
    CentralityFailure(String),
    #[error("algebra fails validation:\n{0}")]
    Invalid(String),
}
