// SPDX-License-Identifier: Apache-2.0

//! Generators, PBW monomials, expressions and λ-polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use smallvec::SmallVec;

use crate::arith::{Rational, Scalar};

/// A free generator of the ambient vertex algebra.
///
/// The derived order (currents first, then `φ_i`, `φ^i`, `Φ_i`, each by basis
/// index) is the factor order of normal forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Current(usize),
    PhiLower(usize),
    PhiUpper(usize),
    NeutralPhi(usize),
}

/// Dense generator id inside one conformal algebra.
pub type GenId = u16;

/// `∂^n g` as a factor of a normally ordered word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub gen: GenId,
    pub n: u16,
}

impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gen.cmp(&other.gen).then(other.n.cmp(&self.n))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Right-nested normally ordered product `:F_1(F_2(⋯ F_r)⋯):`; empty is the vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub(crate) SmallVec<[Factor; 4]>);

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn single(f: Factor) -> Self {
        let mut v = SmallVec::new();
        v.push(f);
        Monomial(v)
    }

    pub(crate) fn from_factors(fs: &[Factor]) -> Self {
        Monomial(SmallVec::from_slice(fs))
    }

    pub(crate) fn tail(&self) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[1..]))
    }

    pub(crate) fn prepend(&self, f: Factor) -> Monomial {
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(f);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }
}

/// A finite ℚ(k)-linear combination of normal-form monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct VAExpr {
    terms: BTreeMap<Monomial, Scalar>,
}

impl VAExpr {
    pub fn zero() -> Self {
        VAExpr::default()
    }

    pub fn vacuum() -> Self {
        VAExpr::from_monomial(Monomial::vacuum(), Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        VAExpr::from_monomial(Monomial::vacuum(), c)
    }

    pub fn from_monomial(m: Monomial, c: Scalar) -> Self {
        let mut e = VAExpr::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the vacuum.
    pub fn vacuum_coefficient(&self) -> Scalar {
        self.coefficient(&Monomial::vacuum())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &VAExpr, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (m, a) in &other.terms {
            let t = if one { a.clone() } else { a * c };
            self.add_term(m.clone(), t);
        }
    }

    pub fn add_scaled_rational(&mut self, other: &VAExpr, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.add_scaled(other, &Scalar::from_rational(c.clone()));
    }

    pub fn scale(&self, c: &Scalar) -> VAExpr {
        let mut out = VAExpr::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> VAExpr {
        self.scale(&Scalar::from_rational(c.clone()))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> VAExpr {
        let mut out = VAExpr::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    /// Maximal number of factors in a monomial.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }
}

impl<'a> Add<&'a VAExpr> for &'a VAExpr {
    type Output = VAExpr;
    fn add(self, rhs: &'a VAExpr) -> VAExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Add for VAExpr {
    type Output = VAExpr;
    fn add(mut self, rhs: VAExpr) -> VAExpr {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a VAExpr> for &'a VAExpr {
    type Output = VAExpr;
    fn sub(self, rhs: &'a VAExpr) -> VAExpr {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Sub for VAExpr {
    type Output = VAExpr;
    fn sub(self, rhs: VAExpr) -> VAExpr {
        &self - &rhs
    }
}

impl Neg for &VAExpr {
    type Output = VAExpr;
    fn neg(self) -> VAExpr {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for VAExpr {
    type Output = VAExpr;
    fn neg(self) -> VAExpr {
        -&self
    }
}

impl std::iter::Sum for VAExpr {
    fn sum<I: Iterator<Item = VAExpr>>(iter: I) -> Self {
        iter.fold(VAExpr::zero(), |a, b| a + b)
    }
}

/// `Σ_n λ^n/n! · coeffs[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    coeffs: Vec<VAExpr>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<VAExpr>) -> Self {
        while coeffs.last().is_some_and(VAExpr::is_zero) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[VAExpr] {
        &self.coeffs
    }

    /// The `n`-th product, i.e. the coefficient of `λ^n/n!`.
    pub fn coeff(&self, n: usize) -> VAExpr {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the plain power `λ^n` (that is, `coeff(n) / n!`).
    pub fn power_coeff(&self, n: usize) -> VAExpr {
        let fact = factorial(n as u64);
        self.coeff(n).scale_rational(&fact.inv())
    }
}

impl<'a> Sub<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Add<&'a LambdaPoly> for &'a LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &'a LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LambdaPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

pub(crate) fn factorial(n: u64) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * Rational::from_int(k))
}

pub(crate) fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    &factorial(n) / &(&factorial(k) * &factorial(n - k))
}
