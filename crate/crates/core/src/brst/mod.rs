// SPDX-License-Identifier: Apache-2.0

//! The BRST complex of a datum and the structures built on it.

mod axioms;
mod check;
mod claims;
mod complex;
mod datum;
mod elements;
mod ffr;
mod identities;

pub use check::{Check, Residual};
pub use claims::{NamedElement, Tag, TAG_NAMES};
pub use complex::{Complex, Mode};
pub use identities::IDENTITY_IDS;
pub use datum::Datum;

use crate::arith::ArithError;
use crate::calculus::CalculusError;
use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BrstError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error("ad x restricted to g_{{-1/2}} ⊕ g_{{1/2}} does not give g^f_{{-1/2}} ≅ g_{{1/2}}")]
    NotIsoHalf,
    #[error("the Casimir operator is not a scalar; use the gl(n|n) mode")]
    NotScalarHvee,
    #[error("the gl(n|n) mode needs an identity element")]
    MissingIdentityElement,
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("element is not in the required graded piece of g^f: {0}")]
    NotInCentralizer(String),
    #[error("element does not lie in the image of the bar subalgebra: {0}")]
    NotInBarSubalgebra(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("unknown element tag: {0}")]
    UnknownTag(String),
    #[error("gl(n|n) mode has denominators in k; k = 0 is critical")]
    CriticalStructure,
    #[error(transparent)]
    Arith(#[from] ArithError),
}
