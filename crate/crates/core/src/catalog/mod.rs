// SPDX-License-Identifier: Apache-2.0

//! Built-in data, algebra-spec files and verification reports.

mod builtin;
mod report;
mod spec;

pub use builtin::{builtin_algebra, BUILTIN_NAMES};
pub use report::{
    expand_claims, latex_document, latex_text, run_claim, verify_claims, ClaimResult, Report, RootSystemRecord, RunOptions, Status,
    COMPOSITES,
    CLAIM_GROUPS, ENGINE_VERSION, SCHEMA_VERSION,
};
pub use spec::{
    load_datum, parse_spec, render_spec, save_datum, AlgebraSpecFile, BasisSpec, BracketSpec, FormSpec, ParitySpec,
    TermSpec,
};

use crate::brst::{BrstError, Datum};
use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown datum `{0}`; known: {known}", known = BUILTIN_NAMES.join(", "))]
    UnknownDatum(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("parse error{}, field `{field}`: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, field: String, message: String },
    #[error("validation failed:\n{0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Brst(#[from] BrstError),
}

impl From<LieError> for CatalogError {
    fn from(e: LieError) -> Self {
        CatalogError::Brst(e.into())
    }
}

/// A named catalog datum, validated and with all derived data.
pub fn builtin_datum(name: &str) -> Result<Datum, CatalogError> {
    let alg = builtin_algebra(name).ok_or_else(|| CatalogError::UnknownDatum(name.to_string()))??;
    Ok(Datum::new(alg)?)
}
