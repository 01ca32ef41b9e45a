// SPDX-License-Identifier: Apache-2.0

//! Outcomes of symbolic zero-tests.

use crate::arith::Scalar;
use crate::calculus::{render_by_weight, ConformalAlgebra, LambdaPoly, Style, VAExpr};

/// One nonzero leftover, rendered in both styles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub label: String,
    pub text: String,
    pub latex: String,
}

/// Result of a verification: passes iff no residual was recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub residuals: Vec<Residual>,
    /// Set when the check does not apply to the datum.
    pub skipped: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>) -> Self {
        Check { id: id.into(), residuals: Vec::new(), skipped: None }
    }

    pub fn skipped(id: impl Into<String>, why: impl Into<String>) -> Self {
        Check { id: id.into(), residuals: Vec::new(), skipped: Some(why.into()) }
    }

    pub fn ok(&self) -> bool {
        self.residuals.is_empty()
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn expr(&mut self, alg: &ConformalAlgebra, label: impl Into<String>, e: &VAExpr) {
        if e.is_zero() {
            return;
        }
        self.residuals.push(Residual {
            label: label.into(),
            text: render_by_weight(alg, e, Style::Text),
            latex: render_by_weight(alg, e, Style::Latex),
        });
    }

    pub fn lambda(&mut self, alg: &ConformalAlgebra, label: impl Into<String>, p: &LambdaPoly) {
        if p.is_zero() {
            return;
        }
        let label = label.into();
        for (n, c) in p.coeffs().iter().enumerate() {
            self.expr(alg, format!("{label} [λ^{n}/{n}!]"), c);
        }
    }

    pub fn value(&mut self, label: impl Into<String>, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let s = v.to_string();
        self.residuals.push(Residual { label: label.into(), text: s.clone(), latex: s });
    }

    pub fn fail(&mut self, label: impl Into<String>, why: impl Into<String>) {
        let s = why.into();
        self.residuals.push(Residual { label: label.into(), text: s.clone(), latex: s });
    }

    pub fn absorb(&mut self, other: Check) {
        self.residuals.extend(other.residuals);
    }

    /// First residual, for one-line summaries.
    pub fn summary(&self) -> Option<String> {
        self.residuals.first().map(|r| format!("{}: {}", r.label, r.text))
    }
}
