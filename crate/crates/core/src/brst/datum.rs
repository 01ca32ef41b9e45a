// SPDX-License-Identifier: Apache-2.0

//! A validated datum `(g, x, f)` with all derived Lie-theoretic data.

use super::BrstError;
use crate::lie::{
    check_datum, dual_basis, dual_coxeter, grade_by_x, omega0, rho_vectors, CentralizerData, DualBases, DualCoxeter,
    Grading, LieError, Omega0Report, RhoData, SuperAlgebra,
};

#[derive(Debug, Clone)]
pub struct Datum {
    pub alg: SuperAlgebra,
    pub grading: Grading,
    pub duals: DualBases,
    pub centralizer: CentralizerData,
    pub hvee: DualCoxeter,
    pub rho: RhoData,
    pub omega0: Omega0Report,
}

impl Datum {
    pub fn new(alg: SuperAlgebra) -> Result<Self, BrstError> {
        let report = alg.validate();
        if !report.is_ok() {
            return Err(LieError::Invalid(report.to_string()).into());
        }
        Self::new_unchecked(alg)
    }

    /// Skips the axiom check; used to study deliberately corrupted tables.
    pub fn new_unchecked(alg: SuperAlgebra) -> Result<Self, BrstError> {
        let grading = grade_by_x(&alg)?;
        let centralizer = check_datum(&alg, &grading)?;
        if !centralizer.iso_half {
            return Err(BrstError::NotIsoHalf);
        }
        let duals = dual_basis(&alg, &grading)?;
        let hvee = dual_coxeter(&alg, &duals);
        let rho = rho_vectors(&alg, &grading, &duals, &centralizer)?;
        let omega0 = omega0(&alg, &grading, &duals, &rho);
        Ok(Datum { alg, grading, duals, centralizer, hvee, rho, omega0 })
    }

    pub fn name(&self) -> &str {
        self.alg.name()
    }
}
