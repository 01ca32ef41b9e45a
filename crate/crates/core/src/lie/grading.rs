// SPDX-License-Identifier: Apache-2.0

//! The ad x eigenspace decomposition and the centralizer of f.

use std::collections::BTreeMap;

use super::algebra::{Parity, SuperAlgebra, Vector};
use super::linalg;
use super::LieError;
use crate::arith::Rational;

/// Degrees of basis elements, stored doubled so they are integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degree2: Vec<i64>,
}

impl Grading {
    pub fn from_doubled(degree2: Vec<i64>) -> Self {
        Grading { degree2 }
    }

    pub fn len(&self) -> usize {
        self.degree2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degree2.is_empty()
    }

    /// `2 m_i`.
    pub fn degree2(&self, i: usize) -> i64 {
        self.degree2[i]
    }

    /// `m_i` as a rational.
    pub fn degree(&self, i: usize) -> Rational {
        Rational::new(self.degree2[i], 2)
    }

    pub fn all(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    fn select(&self, pred: impl Fn(i64) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&i| pred(self.degree2[i])).collect()
    }

    /// `S_j` for `j = d2 / 2`.
    pub fn s_deg(&self, d2: i64) -> Vec<usize> {
        self.select(|d| d == d2)
    }

    pub fn s_pos(&self) -> Vec<usize> {
        self.select(|d| d > 0)
    }

    pub fn s_neg(&self) -> Vec<usize> {
        self.select(|d| d < 0)
    }

    pub fn s_le0(&self) -> Vec<usize> {
        self.select(|d| d <= 0)
    }

    pub fn s_half(&self) -> Vec<usize> {
        self.s_deg(1)
    }

    pub fn s_zero(&self) -> Vec<usize> {
        self.s_deg(0)
    }

    /// Dimensions of the graded pieces, keyed by doubled degree, highest first.
    pub fn dims(&self) -> Vec<(i64, usize)> {
        let mut m: BTreeMap<i64, usize> = BTreeMap::new();
        for d in &self.degree2 {
            *m.entry(*d).or_default() += 1;
        }
        m.into_iter().rev().collect()
    }

    fn project_by(&self, v: &[Rational], pred: impl Fn(i64) -> bool) -> Vector {
        v.iter()
            .enumerate()
            .map(|(i, c)| if pred(self.degree2[i]) { c.clone() } else { Rational::zero() })
            .collect()
    }

    /// `p_{>0}`.
    pub fn project_pos(&self, v: &[Rational]) -> Vector {
        self.project_by(v, |d| d > 0)
    }

    /// `p_j` with `j = d2 / 2`.
    pub fn project_deg(&self, v: &[Rational], d2: i64) -> Vector {
        self.project_by(v, |d| d == d2)
    }

    pub fn project_le0(&self, v: &[Rational]) -> Vector {
        self.project_by(v, |d| d <= 0)
    }

    /// Doubled degree of a nonzero homogeneous vector.
    pub fn vector_degree2(&self, v: &[Rational]) -> Option<i64> {
        let mut found = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.degree2[i]),
                Some(d) if d != self.degree2[i] => return None,
                _ => {}
            }
        }
        found
    }
}

/// Reads degrees off `ad x`, which must be diagonal with eigenvalues in ½ℤ.
pub fn grade_by_x(alg: &SuperAlgebra) -> Result<Grading, LieError> {
    let adx = alg.ad(alg.x());
    let n = alg.dim();
    let mut degree2 = Vec::with_capacity(n);
    for j in 0..n {
        for (k, row) in adx.iter().enumerate() {
            if k != j && !row[j].is_zero() {
                return Err(LieError::NotHomogeneous(alg.basis_name(j).to_string()));
            }
        }
        let m = &adx[j][j];
        match m.to_half_int() {
            Some(d2) => degree2.push(d2),
            None => {
                return Err(LieError::NotHalfInteger {
                    element: alg.basis_name(j).to_string(),
                    eigenvalue: m.clone(),
                })
            }
        }
    }
    Ok(Grading { degree2 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerData {
    /// Homogeneous basis of `g^f`.
    pub basis: Vec<Vector>,
    /// Basis of `g^f_j` keyed by doubled degree.
    pub by_degree: BTreeMap<i64, Vec<Vector>>,
    /// `g^f ⊆ g_{≤0}`.
    pub good: bool,
    /// `ad f: g_{1/2} → g_{-1/2}` is bijective.
    pub iso_half: bool,
}

impl CentralizerData {
    pub fn degree(&self, d2: i64) -> &[Vector] {
        self.by_degree.get(&d2).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Computes `g^f` degree by degree and tests goodness and the ½-isomorphism.
pub fn check_datum(alg: &SuperAlgebra, grading: &Grading) -> Result<CentralizerData, LieError> {
    let f = alg.f();
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() && grading.degree2(i) != -2 {
            return Err(LieError::FNotDegreeMinusOne);
        }
    }
    let adf = alg.ad(f);
    let n = alg.dim();
    let mut by_degree: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    let mut basis = Vec::new();
    for (d2, _) in grading.dims() {
        for parity in [Parity::Even, Parity::Odd] {
            let idx: Vec<usize> = grading
                .s_deg(d2)
                .into_iter()
                .filter(|&i| alg.parity(i) == parity)
                .collect();
            if idx.is_empty() {
                continue;
            }
            let sub: linalg::Matrix = adf
                .iter()
                .map(|row| idx.iter().map(|&j| row[j].clone()).collect())
                .collect();
            for kv in linalg::kernel(&sub, idx.len()) {
                let mut v = vec![Rational::zero(); n];
                for (pos, &j) in idx.iter().enumerate() {
                    v[j] = kv[pos].clone();
                }
                by_degree.entry(d2).or_default().push(v.clone());
                basis.push(v);
            }
        }
    }
    let good = by_degree.keys().all(|&d| d <= 0);
    let half = grading.s_deg(1);
    let mhalf = grading.s_deg(-1);
    let iso_half = half.len() == mhalf.len() && {
        let sub: linalg::Matrix = mhalf
            .iter()
            .map(|&r| half.iter().map(|&c| adf[r][c].clone()).collect())
            .collect();
        linalg::rank(&sub) == half.len()
    };
    Ok(CentralizerData { basis, by_degree, good, iso_half })
}
