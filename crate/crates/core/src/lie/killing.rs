// SPDX-License-Identifier: Apache-2.0

//! Killing forms, Casimir operators, ρ-vectors and Ω_0.

use std::collections::BTreeMap;

use super::algebra::{sign_of, SuperAlgebra, Vector};
use super::duals::DualBases;
use super::grading::{CentralizerData, Grading};
use super::linalg::{self, Matrix};
use super::LieError;
use crate::arith::{PolyK, Rational};

/// Which rows of the supertrace to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KillingSelector {
    Full,
    /// Degree `d2 / 2`.
    Degree(i64),
    Positive,
    Negative,
}

fn selected(grading: &Grading, sel: KillingSelector, i: usize) -> bool {
    let d = grading.degree2(i);
    match sel {
        KillingSelector::Full => true,
        KillingSelector::Degree(d2) => d == d2,
        KillingSelector::Positive => d > 0,
        KillingSelector::Negative => d < 0,
    }
}

/// Supertrace of `m` over the basis indices accepted by `keep`.
pub fn supertrace_where(alg: &SuperAlgebra, m: &Matrix, keep: impl Fn(usize) -> bool) -> Rational {
    (0..alg.dim())
        .filter(|&i| keep(i))
        .map(|i| &sign_of(alg.p(i)) * &m[i][i])
        .sum()
}

/// `str(p_sel (ad a)(ad b))`.
pub fn killing_form(
    alg: &SuperAlgebra,
    grading: &Grading,
    a: &[Rational],
    b: &[Rational],
    sel: KillingSelector,
) -> Rational {
    let m = linalg::matmul(&alg.ad(a), &alg.ad(b));
    supertrace_where(alg, &m, |i| selected(grading, sel, i))
}

/// `str_{g>0} p_{>0} ad v`.
pub fn str_pos_ad(alg: &SuperAlgebra, grading: &Grading, v: &[Rational]) -> Rational {
    supertrace_where(alg, &alg.ad(v), |i| grading.degree2(i) > 0)
}

/// `Σ_{j ∈ idx} (ad u^j)(ad u_j)`.
pub fn casimir_on(alg: &SuperAlgebra, duals: &DualBases, idx: &[usize]) -> Matrix {
    let n = alg.dim();
    let mut acc = linalg::zeros(n, n);
    for &j in idx {
        let prod = linalg::matmul(&alg.ad(&duals.dual[j]), alg.ad_basis(j));
        acc = linalg::mat_add(&acc, &prod);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualCoxeter {
    Scalar(Rational),
    /// The Casimir operator on `g` when it is not a multiple of the identity.
    NotScalar(Matrix),
}

impl DualCoxeter {
    pub fn scalar(&self) -> Option<&Rational> {
        match self {
            DualCoxeter::Scalar(h) => Some(h),
            DualCoxeter::NotScalar(_) => None,
        }
    }
}

pub fn dual_coxeter(alg: &SuperAlgebra, duals: &DualBases) -> DualCoxeter {
    let n = alg.dim();
    let all: Vec<usize> = (0..n).collect();
    let omega = casimir_on(alg, duals, &all);
    let c = omega[0][0].clone();
    if omega == linalg::mat_scale(&linalg::identity(n), &c) {
        DualCoxeter::Scalar(&c / &Rational::from_int(2))
    } else {
        DualCoxeter::NotScalar(omega)
    }
}

/// The positive system used for ρ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootChoice {
    /// Basis indices spanning the Cartan subalgebra.
    pub cartan: Vec<usize>,
    /// Basis indices of positive root vectors.
    pub positive: Vec<usize>,
    /// Weight of each basis element on the Cartan basis.
    pub weights: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoData {
    pub rho: Vector,
    pub rho_pos: Vector,
    pub rho_half: Vector,
    /// `ρ_j` keyed by doubled degree, for every positive degree present.
    pub rho_by_degree: BTreeMap<i64, Vector>,
    pub roots: RootChoice,
}

/// `½ Σ_{i ∈ idx} (-1)^{p(i)} [u_i, u^i]`.
pub fn half_signed_sum(alg: &SuperAlgebra, duals: &DualBases, idx: &[usize]) -> Vector {
    let mut acc = alg.zero_vector();
    let half = Rational::new(1, 2);
    for &i in idx {
        let b = alg.bracket(&alg.unit(i), &duals.dual[i]);
        let c = &sign_of(alg.p(i)) * &half;
        for (a, x) in acc.iter_mut().zip(&b) {
            *a += &(&c * x);
        }
    }
    acc
}

fn detect_cartan(alg: &SuperAlgebra, grading: &Grading) -> Vec<usize> {
    let n = alg.dim();
    (0..n)
        .filter(|&i| alg.p(i) == 0 && grading.degree2(i) == 0)
        .filter(|&i| {
            let m = alg.ad_basis(i);
            (0..n).all(|r| (0..n).all(|c| r == c || m[r][c].is_zero()))
        })
        .collect()
}

/// Computes ρ, ρ_{>0}, ρ_{1/2} and the ρ_j; checks that ρ_{>0} is central in
/// `g_0` when the ½-isomorphism holds.
pub fn rho_vectors(
    alg: &SuperAlgebra,
    grading: &Grading,
    duals: &DualBases,
    centralizer: &CentralizerData,
) -> Result<RhoData, LieError> {
    let n = alg.dim();
    let rho_pos = half_signed_sum(alg, duals, &grading.s_pos());
    let rho_half = half_signed_sum(alg, duals, &grading.s_half());
    let mut rho_by_degree = BTreeMap::new();
    for (d2, _) in grading.dims() {
        if d2 > 0 {
            rho_by_degree.insert(d2, half_signed_sum(alg, duals, &grading.s_deg(d2)));
        }
    }

    let cartan = detect_cartan(alg, grading);
    let weights: Vec<Vec<Rational>> = (0..n)
        .map(|j| cartan.iter().map(|&c| alg.ad_basis(c)[j][j].clone()).collect())
        .collect();
    let positive: Vec<usize> = (0..n)
        .filter(|j| !cartan.contains(j))
        .filter(|&j| {
            let d = grading.degree2(j);
            d > 0
                || (d == 0
                    && weights[j]
                        .iter()
                        .find(|w| !w.is_zero())
                        .is_some_and(|w| !w.is_negative()))
        })
        .collect();
    // ρ(h_c) = ½ Σ_{α > 0} (-1)^{p(α)} α(h_c), then pulled back to h via the form
    let half = Rational::new(1, 2);
    let values: Vec<Rational> = (0..cartan.len())
        .map(|c| {
            positive
                .iter()
                .map(|&j| &(&sign_of(alg.p(j)) * &weights[j][c]) * &half)
                .sum()
        })
        .collect();
    let gram: Matrix = cartan
        .iter()
        .map(|&a| cartan.iter().map(|&b| alg.form_matrix()[a][b].clone()).collect())
        .collect();
    let coords = if cartan.is_empty() {
        Vec::new()
    } else {
        linalg::solve(&gram, &values).ok_or_else(|| LieError::SingularGram("form on the Cartan".into()))?
    };
    let mut rho = alg.zero_vector();
    for (pos, &c) in cartan.iter().enumerate() {
        rho[c] = coords[pos].clone();
    }

    if centralizer.iso_half {
        for j in grading.s_zero() {
            let b = alg.bracket(&rho_pos, &alg.unit(j));
            if !SuperAlgebra::is_zero_vector(&b) {
                return Err(LieError::CentralityFailure(alg.basis_name(j).to_string()));
            }
        }
    }
    Ok(RhoData {
        rho,
        rho_pos,
        rho_half,
        rho_by_degree,
        roots: RootChoice { cartan, positive, weights },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omega0Block {
    pub eigenvalues: Vec<(Rational, usize)>,
    /// `None` when part of the spectrum is irrational.
    pub diagonalizable: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omega0Report {
    /// `Ω_0` on all of `g`.
    pub matrix: Matrix,
    /// Restrictions to `g_j`, keyed by doubled degree.
    pub blocks: BTreeMap<i64, Omega0Block>,
    /// `Ω_0 u = 2[ρ_{>0}, u]` on `g_{1/2}`.
    pub half_twice_rho: bool,
    /// `κ_0(u, v) = (Ω_0 u | v) = (u | Ω_0 v)` on all pairs.
    pub killing_zero: bool,
}

fn restrict(m: &Matrix, idx: &[usize]) -> Matrix {
    idx.iter()
        .map(|&r| idx.iter().map(|&c| m[r][c].clone()).collect())
        .collect()
}

fn diagonalizable(m: &Matrix) -> Omega0Block {
    let p: PolyK = linalg::char_poly(m);
    let eig = linalg::rational_roots(&p);
    let total: usize = eig.iter().map(|(_, k)| k).sum();
    if total < m.len() {
        return Omega0Block { eigenvalues: eig, diagonalizable: None };
    }
    let n = m.len();
    let mut prod = linalg::identity(n);
    for (l, _) in &eig {
        let shifted = linalg::mat_add(m, &linalg::mat_scale(&linalg::identity(n), &-l));
        prod = linalg::matmul(&prod, &shifted);
    }
    Omega0Block { eigenvalues: eig, diagonalizable: Some(linalg::is_zero_matrix(&prod)) }
}

pub fn omega0(alg: &SuperAlgebra, grading: &Grading, duals: &DualBases, rho: &RhoData) -> Omega0Report {
    let matrix = casimir_on(alg, duals, &grading.s_zero());
    let mut blocks = BTreeMap::new();
    for (d2, _) in grading.dims() {
        blocks.insert(d2, diagonalizable(&restrict(&matrix, &grading.s_deg(d2))));
    }
    let two = Rational::from_int(2);
    let half_twice_rho = grading.s_half().into_iter().all(|i| {
        let lhs = linalg::mat_vec(&matrix, &alg.unit(i));
        let rhs: Vector = alg.bracket(&rho.rho_pos, &alg.unit(i)).iter().map(|c| c * &two).collect();
        lhs == rhs
    });
    let n = alg.dim();
    let mut killing_zero = true;
    'outer: for i in 0..n {
        let oi = linalg::mat_vec(&matrix, &alg.unit(i));
        for j in 0..n {
            let oj = linalg::mat_vec(&matrix, &alg.unit(j));
            let k0 = killing_form(alg, grading, &alg.unit(i), &alg.unit(j), KillingSelector::Degree(0));
            if k0 != alg.form(&oi, &alg.unit(j)) || k0 != alg.form(&alg.unit(i), &oj) {
                killing_zero = false;
                break 'outer;
            }
        }
    }
    Omega0Report { matrix, blocks, half_twice_rho, killing_zero }
}
