// SPDX-License-Identifier: Apache-2.0

//! Dual bases for the invariant form and for the neutral fermion pairing.

use super::algebra::{SuperAlgebra, Vector};
use super::grading::Grading;
use super::linalg::{self, Matrix};
use super::LieError;
use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualBases {
    /// `dual[j]` holds the coordinates of `u^j`, with `(u_i | u^j) = δ_ij`.
    pub dual: Vec<Vector>,
    /// Indices of `S_{1/2}` in basis order; rows below are indexed by position here.
    pub half: Vec<usize>,
    /// `neutral_dual[a][b]`: coefficient of `Φ_{half[b]}` in `Φ^{half[a]}`.
    pub neutral_dual: Matrix,
    /// `half_lift[a]`: coordinates of `u^{(half[a])}` in `g_{1/2}`.
    pub half_lift: Vec<Vector>,
    /// Gram matrix of the neutral pairing on `S_{1/2}`.
    pub neutral_gram: Matrix,
}

impl DualBases {
    pub fn dual_of(&self, j: usize) -> &Vector {
        &self.dual[j]
    }

    /// Position of basis index `i` inside `S_{1/2}`.
    pub fn half_pos(&self, i: usize) -> Option<usize> {
        self.half.iter().position(|&h| h == i)
    }
}

/// `⟨a, b⟩ = (f | [a, b])`.
pub fn neutral_pairing(alg: &SuperAlgebra, a: &[Rational], b: &[Rational]) -> Rational {
    alg.form(alg.f(), &alg.bracket(a, b))
}

pub fn dual_basis(alg: &SuperAlgebra, grading: &Grading) -> Result<DualBases, LieError> {
    let n = alg.dim();
    let gram = alg.form_matrix();
    // u^j = Σ_l M[j][l] u_l with M = (G^T)^{-1}
    let m = linalg::inverse(&linalg::transpose(gram))
        .ok_or_else(|| LieError::SingularGram("invariant form".into()))?;
    let dual: Vec<Vector> = (0..n).map(|j| m[j].clone()).collect();

    let half = grading.s_half();
    let h = half.len();
    let mut ngram = linalg::zeros(h, h);
    for (a, &ia) in half.iter().enumerate() {
        for (b, &ib) in half.iter().enumerate() {
            ngram[a][b] = neutral_pairing(alg, &alg.unit(ia), &alg.unit(ib));
        }
    }
    let nd = if h == 0 {
        Vec::new()
    } else {
        linalg::inverse(&linalg::transpose(&ngram))
            .ok_or_else(|| LieError::SingularGram("neutral pairing on g_{1/2}".into()))?
    };
    let half_lift = nd
        .iter()
        .map(|row| {
            let mut v = vec![Rational::zero(); n];
            for (b, &ib) in half.iter().enumerate() {
                v[ib] = row[b].clone();
            }
            v
        })
        .collect();
    Ok(DualBases { dual, half, neutral_dual: nd, half_lift, neutral_gram: ngram })
}
