// SPDX-License-Identifier: Apache-2.0

//! Lie superalgebras given by structure constants in a homogeneous basis.

use std::collections::HashSet;
use std::fmt;

use super::linalg::{self, Matrix};
use super::LieError;
use crate::arith::Rational;

/// Coordinates of an element in the basis.
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        Parity::from_bit(self.bit() + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub parity: Parity,
}

/// One nonzero bracket entry `[u_i, u_j] = Σ c u_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Rational)>,
}

/// One nonzero form entry `(u_i | u_j) = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormEntry {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    basis: Vec<BasisElement>,
    /// `table[i][j]` is the sparse expansion of `[u_i, u_j]`.
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    form: Matrix,
    x: Vector,
    f: Vector,
    identity: Option<Vector>,
    ad: Vec<Matrix>,
}

impl SuperAlgebra {
    /// Builds an algebra from sparse tables. Entries not listed are zero.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<BasisElement>,
        brackets: Vec<BracketEntry>,
        form: Vec<FormEntry>,
        x: Vector,
        f: Vector,
        identity: Option<Vector>,
    ) -> Result<Self, LieError> {
        let n = basis.len();
        let bad = |m: String| Err(LieError::MalformedTable(m));
        let mut seen = HashSet::new();
        for b in &basis {
            if b.name.is_empty() || !seen.insert(b.name.clone()) {
                return bad(format!("empty or duplicate basis name `{}`", b.name));
            }
        }
        let mut table = vec![vec![Vec::new(); n]; n];
        let mut filled = vec![vec![false; n]; n];
        for e in brackets {
            if e.i >= n || e.j >= n {
                return bad(format!("bracket index ({}, {}) out of range", e.i, e.j));
            }
            if filled[e.i][e.j] {
                return bad(format!("bracket ({}, {}) given twice", e.i, e.j));
            }
            filled[e.i][e.j] = true;
            let mut v = vec![Rational::zero(); n];
            for (k, c) in e.terms {
                if k >= n {
                    return bad(format!("bracket ({}, {}) term index {k} out of range", e.i, e.j));
                }
                v[k] += &c;
            }
            table[e.i][e.j] = sparse(&v);
        }
        let mut fm = linalg::zeros(n, n);
        let mut ffilled = vec![vec![false; n]; n];
        for e in form {
            if e.i >= n || e.j >= n {
                return bad(format!("form index ({}, {}) out of range", e.i, e.j));
            }
            if ffilled[e.i][e.j] {
                return bad(format!("form entry ({}, {}) given twice", e.i, e.j));
            }
            ffilled[e.i][e.j] = true;
            fm[e.i][e.j] = e.value;
        }
        for (label, v) in [("x", Some(&x)), ("f", Some(&f)), ("identity_element", identity.as_ref())] {
            if let Some(v) = v {
                if v.len() != n {
                    return bad(format!("{label} has {} coordinates, expected {n}", v.len()));
                }
            }
        }
        let ad = (0..n)
            .map(|i| {
                let mut m = linalg::zeros(n, n);
                for (j, col) in table[i].iter().enumerate() {
                    for (k, c) in col {
                        m[*k][j] = c.clone();
                    }
                }
                m
            })
            .collect();
        Ok(SuperAlgebra {
            name: name.into(),
            basis,
            table,
            form: fm,
            x,
            f,
            identity,
            ad,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    /// `p(i)` as 0 or 1.
    pub fn p(&self, i: usize) -> u8 {
        self.basis[i].parity.bit()
    }

    pub fn x(&self) -> &Vector {
        &self.x
    }

    pub fn f(&self) -> &Vector {
        &self.f
    }

    pub fn identity_element(&self) -> Option<&Vector> {
        self.identity.as_ref()
    }

    pub fn form_matrix(&self) -> &Matrix {
        &self.form
    }

    /// Sparse expansion of `[u_i, u_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Rational::zero(); self.dim()]
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let mut out = self.zero_vector();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, t) in &self.table[i][j] {
                    out[*k] += &(&c * t);
                }
            }
        }
        out
    }

    pub fn form(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() && !self.form[i][j].is_zero() {
                    acc += &(&(ai * bj) * &self.form[i][j]);
                }
            }
        }
        acc
    }

    /// Matrix of `ad u_i`; column `j` holds `[u_i, u_j]`.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    pub fn ad(&self, a: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = linalg::zeros(n, n);
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                m = linalg::mat_add(&m, &linalg::mat_scale(&self.ad[i], ai));
            }
        }
        m
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn vector_parity(&self, v: &[Rational]) -> Option<Parity> {
        let mut found = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parity(i)),
                Some(p) if p != self.parity(i) => return None,
                _ => {}
            }
        }
        found
    }

    pub fn is_zero_vector(v: &[Rational]) -> bool {
        v.iter().all(Rational::is_zero)
    }

    /// Inverse of [`format_vector`](Self::format_vector): `"2*h1 - h2"`, `"1/2*h"`, `"e"`.
    pub fn parse_vector(&self, s: &str) -> Result<Vector, LieError> {
        let bad = || LieError::MalformedTable(format!("cannot parse element '{s}'"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut v = self.zero_vector();
        if compact == "0" {
            return Ok(v);
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('*') && !cur.ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coef, name) = match body.rsplit_once('*') {
                Some((c, n)) => (c.parse::<Rational>().map_err(|_| bad())?, n),
                None => (Rational::one(), body),
            };
            let idx = self.index_of(name).ok_or_else(bad)?;
            let c = if neg { -coef } else { coef };
            v[idx] += &c;
        }
        Ok(v)
    }

    /// Human-readable linear combination of basis names.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        let mut s = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&self.basis[i].name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// All nonzero bracket entries in row-major order.
    pub fn bracket_entries(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.table[i][j].is_empty() {
                    out.push(BracketEntry { i, j, terms: self.table[i][j].clone() });
                }
            }
        }
        out
    }

    pub fn form_entries(&self) -> Vec<FormEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.form[i][j].is_zero() {
                    out.push(FormEntry { i, j, value: self.form[i][j].clone() });
                }
            }
        }
        out
    }

    /// Copy with one structure constant overwritten; for fault injection.
    pub fn with_bracket_coefficient(&self, i: usize, j: usize, k: usize, c: Rational) -> Self {
        let mut out = self.clone();
        let mut v = out.zero_vector();
        for (kk, t) in &out.table[i][j] {
            v[*kk] = t.clone();
        }
        v[k] = c;
        out.table[i][j] = sparse(&v);
        out.ad[i] = {
            let n = out.dim();
            let mut m = linalg::zeros(n, n);
            for (jj, col) in out.table[i].iter().enumerate() {
                for (kk, t) in col {
                    m[*kk][jj] = t.clone();
                }
            }
            m
        };
        out
    }

    /// Checks every axiom and lists each violation found.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, _) in &self.table[i][j] {
                    if self.p(*k) != (self.p(i) + self.p(j)) % 2 {
                        violations.push(Violation::BracketParity { i, j, k: *k });
                    }
                }
                let sign = sign_of(self.p(i) * self.p(j));
                let lhs = self.bracket(&self.unit(i), &self.unit(j));
                let rhs: Vector = self
                    .bracket(&self.unit(j), &self.unit(i))
                    .iter()
                    .map(|c| -&(c * &sign))
                    .collect();
                if lhs != rhs {
                    violations.push(Violation::Antisymmetry { i, j });
                }
            }
        }
        // [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
        for a in 0..n {
            let ua = self.unit(a);
            for b in 0..n {
                let ub = self.unit(b);
                let ab = self.bracket(&ua, &ub);
                let sign = sign_of(self.p(a) * self.p(b));
                for c in 0..n {
                    let uc = self.unit(c);
                    let lhs = self.bracket(&ua, &self.bracket(&ub, &uc));
                    let r1 = self.bracket(&ab, &uc);
                    let r2 = self.bracket(&ub, &self.bracket(&ua, &uc));
                    let ok = lhs
                        .iter()
                        .zip(r1.iter().zip(&r2))
                        .all(|(l, (x, y))| *l == x + &(&sign * y));
                    if !ok {
                        violations.push(Violation::Jacobi { i: a, j: b, k: c });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = &self.form[i][j];
                if !v.is_zero() && self.p(i) != self.p(j) {
                    violations.push(Violation::FormNotEven { i, j });
                }
                let sign = sign_of(self.p(i) * self.p(j));
                if *v != &sign * &self.form[j][i] {
                    violations.push(Violation::FormNotSupersymmetric { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.bracket(&self.unit(i), &self.unit(j));
                for k in 0..n {
                    let lhs = self.form(&ij, &self.unit(k));
                    let jk = self.bracket(&self.unit(j), &self.unit(k));
                    let rhs = self.form(&self.unit(i), &jk);
                    if lhs != rhs {
                        violations.push(Violation::FormNotInvariant { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        if linalg::rank(&self.form) < n {
            violations.push(Violation::Degenerate);
        }
        ValidationReport { names: self.basis.iter().map(|b| b.name.clone()).collect(), violations }
    }
}

pub(crate) fn sparse(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

pub(crate) fn sign_of(e: u8) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BracketParity { i: usize, j: usize, k: usize },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    FormNotEven { i: usize, j: usize },
    FormNotSupersymmetric { i: usize, j: usize },
    FormNotInvariant { i: usize, j: usize, k: usize, lhs: Rational, rhs: Rational },
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    names: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, v: &Violation) -> String {
        let n = |i: &usize| self.names[*i].as_str();
        match v {
            Violation::BracketParity { i, j, k } => {
                format!("[{}, {}] has a component along {} of the wrong parity", n(i), n(j), n(k))
            }
            Violation::Antisymmetry { i, j } => {
                format!("super-antisymmetry fails for ({}, {})", n(i), n(j))
            }
            Violation::Jacobi { i, j, k } => {
                format!("super-Jacobi fails for ({}, {}, {})", n(i), n(j), n(k))
            }
            Violation::FormNotEven { i, j } => format!("form pairs even and odd: ({}, {})", n(i), n(j)),
            Violation::FormNotSupersymmetric { i, j } => {
                format!("form not supersymmetric at ({}, {})", n(i), n(j))
            }
            Violation::FormNotInvariant { i, j, k, lhs, rhs } => format!(
                "form not invariant at ({}, {}, {}): ([{}, {}] | {}) = {lhs} but ({} | [{}, {}]) = {rhs}",
                n(i), n(j), n(k), n(i), n(j), n(k), n(i), n(j), n(k)
            ),
            Violation::Degenerate => "form is degenerate".to_string(),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (idx, v) in self.violations.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.describe(v))?;
        }
        Ok(())
    }
}
