// SPDX-License-Identifier: Apache-2.0

//! The vertex algebra `C^k = V^k(g) ⊗ F^ch ⊗ F^ne`, the element `d` and the
//! closed forms for `d_(0)` on generators.

use std::sync::OnceLock;

use super::datum::Datum;
use super::BrstError;
use crate::arith::{Rational, Scalar};
use crate::calculus::{ConformalAlgebra, GenBracket, GenSpec, Generator, VAExpr};
use crate::lie::{sign_of, Parity, SuperAlgebra, Vector};

/// Which `J^{f}` and Sugawara element to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Scalar Casimir; `k + h∨` denominators.
    Standard,
    /// `gl(n|n)`: `h∨ = 0` and the modified Sugawara element.
    GlNN,
}

/// The BRST complex of one datum.
#[derive(Debug)]
pub struct Complex {
    pub datum: Datum,
    pub mode: Mode,
    pub ca: ConformalAlgebra,
    d: VAExpr,
    pub(crate) ffr_algebras: OnceLock<super::ffr::FfrAlgebras>,
}

pub(crate) fn sc(r: Rational) -> Scalar {
    Scalar::from_rational(r)
}

pub(crate) fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

fn generator_specs(datum: &Datum) -> Vec<GenSpec> {
    let alg = &datum.alg;
    let gr = &datum.grading;
    let mut out = Vec::new();
    for i in 0..alg.dim() {
        let name = alg.basis_name(i).to_string();
        let d2 = gr.degree2(i);
        out.push(GenSpec {
            gen: Generator::Current(i),
            parity: alg.parity(i),
            weight2: 2,
            conf_weight2: 2 - d2,
            charge: 0,
            text: name.clone(),
            latex: latex_name(&name),
        });
        if d2 > 0 {
            out.push(GenSpec {
                gen: Generator::PhiLower(i),
                parity: alg.parity(i).flip(),
                weight2: 1,
                conf_weight2: 2 - d2,
                charge: 1,
                text: format!("φ_{name}"),
                latex: format!("\\varphi_{{{}}}", latex_name(&name)),
            });
            out.push(GenSpec {
                gen: Generator::PhiUpper(i),
                parity: alg.parity(i).flip(),
                weight2: 1,
                conf_weight2: d2,
                charge: -1,
                text: format!("φ^{name}"),
                latex: format!("\\varphi^{{{}}}", latex_name(&name)),
            });
        }
        if d2 == 1 {
            out.push(GenSpec {
                gen: Generator::NeutralPhi(i),
                parity: alg.parity(i),
                weight2: 1,
                conf_weight2: 1,
                charge: 0,
                text: format!("Φ_{name}"),
                latex: format!("\\Phi_{{{}}}", latex_name(&name)),
            });
        }
    }
    out
}

/// `½([u_i, u_j] - (-1)^{p(i)p(j)} [u_j, u_i])` read from the table, so a
/// one-sided table error shows up in both orders.
fn antisymmetrized(alg: &SuperAlgebra, i: usize, j: usize) -> Vec<(usize, Rational)> {
    let mut acc = alg.zero_vector();
    let half = q(1, 2);
    let other = &-sign_of(alg.p(i) * alg.p(j)) * &half;
    for (k, c) in alg.bracket_basis(i, j) {
        acc[*k] = &acc[*k] + &(c * &half);
    }
    for (k, c) in alg.bracket_basis(j, i) {
        acc[*k] = &acc[*k] + &(c * &other);
    }
    acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn latex_name(name: &str) -> String {
    match name.char_indices().find(|(_, c)| c.is_ascii_digit()) {
        Some((pos, _)) if pos > 0 => format!("{}_{{{}}}", &name[..pos], &name[pos..]),
        _ => name.to_string(),
    }
}

impl Complex {
    pub fn new(datum: Datum, mode: Mode) -> Result<Self, BrstError> {
        match mode {
            Mode::Standard if datum.hvee.scalar().is_none() => return Err(BrstError::NotScalarHvee),
            Mode::GlNN if datum.alg.identity_element().is_none() => {
                return Err(BrstError::MissingIdentityElement)
            }
            _ => {}
        }
        let specs = generator_specs(&datum);
        let alg = &datum.alg;
        let ca = ConformalAlgebra::new(specs, |a, b| {
            use Generator::*;
            match (a, b) {
                (Current(i), Current(j)) => GenBracket {
                    lie: antisymmetrized(alg, i, j).into_iter().map(|(k, c)| (Current(k), sc(c))).collect(),
                    vac0: Scalar::zero(),
                    vac1: &Scalar::k() * &sc(alg.form_matrix()[i][j].clone()),
                },
                (PhiLower(i), PhiUpper(j)) if i == j => GenBracket { vac0: Scalar::one(), ..Default::default() },
                (PhiUpper(j), PhiLower(i)) if i == j => {
                    GenBracket { vac0: sc(sign_of(alg.p(i))), ..Default::default() }
                }
                (NeutralPhi(i), NeutralPhi(j)) => {
                    let v = crate::lie::neutral_pairing(alg, &alg.unit(i), &alg.unit(j));
                    GenBracket { vac0: sc(v), ..Default::default() }
                }
                _ => GenBracket::default(),
            }
        });
        let mut cx = Complex { datum, mode, ca, d: VAExpr::zero(), ffr_algebras: OnceLock::new() };
        cx.d = cx.build_d();
        Ok(cx)
    }

    /// Standard mode when the Casimir is scalar, `gl(n|n)` mode otherwise.
    pub fn default_mode(datum: &Datum) -> Mode {
        if datum.hvee.scalar().is_some() {
            Mode::Standard
        } else {
            Mode::GlNN
        }
    }

    pub fn with_default_mode(datum: Datum) -> Result<Self, BrstError> {
        let mode = Self::default_mode(&datum);
        Self::new(datum, mode)
    }

    // ---- small builders ------------------------------------------------

    pub fn k(&self) -> Scalar {
        Scalar::k()
    }

    /// `k + h∨` (standard) or `k` (`gl(n|n)` mode).
    pub fn kh(&self) -> Scalar {
        match self.mode {
            Mode::Standard => Scalar::k_plus(self.datum.hvee.scalar().expect("scalar h∨")),
            Mode::GlNN => Scalar::k(),
        }
    }

    pub fn hvee(&self) -> Rational {
        match self.mode {
            Mode::Standard => self.datum.hvee.scalar().cloned().unwrap_or_default(),
            Mode::GlNN => Rational::zero(),
        }
    }

    pub fn unit(&self, i: usize) -> Vector {
        self.datum.alg.unit(i)
    }

    pub fn p(&self, i: usize) -> u8 {
        self.datum.alg.p(i)
    }

    pub fn s_pos(&self) -> Vec<usize> {
        self.datum.grading.s_pos()
    }

    pub fn s_half(&self) -> Vec<usize> {
        self.datum.grading.s_half()
    }

    pub fn s_zero(&self) -> Vec<usize> {
        self.datum.grading.s_zero()
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vector {
        self.datum.alg.bracket(a, b)
    }

    pub fn form(&self, a: &[Rational], b: &[Rational]) -> Rational {
        self.datum.alg.form(a, b)
    }

    /// Parity of a homogeneous vector (`0` for the zero vector).
    pub fn vparity(&self, v: &[Rational]) -> Result<u8, BrstError> {
        if v.iter().all(Rational::is_zero) {
            return Ok(0);
        }
        self.datum
            .alg
            .vector_parity(v)
            .map(Parity::bit)
            .ok_or_else(|| BrstError::NotHomogeneous(self.datum.alg.format_vector(v)))
    }

    /// The current `v ∈ g`.
    pub fn cur(&self, v: &[Rational]) -> VAExpr {
        let mut e = VAExpr::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_scaled_rational(&self.ca.gen(Generator::Current(i)), c);
            }
        }
        e
    }

    /// `φ_u`, built from `p_{>0} u`.
    pub fn phi_low(&self, v: &[Rational]) -> VAExpr {
        let mut e = VAExpr::zero();
        for i in self.s_pos() {
            if !v[i].is_zero() {
                e.add_scaled_rational(&self.ca.gen(Generator::PhiLower(i)), &v[i]);
            }
        }
        e
    }

    /// `φ^i`.
    pub fn phi_up(&self, i: usize) -> VAExpr {
        self.ca.gen(Generator::PhiUpper(i))
    }

    /// `Φ_u`, built from `p_{1/2} u`.
    pub fn neu(&self, v: &[Rational]) -> VAExpr {
        let mut e = VAExpr::zero();
        for i in self.s_half() {
            if !v[i].is_zero() {
                e.add_scaled_rational(&self.ca.gen(Generator::NeutralPhi(i)), &v[i]);
            }
        }
        e
    }

    /// `Φ^i` expanded in the `Φ_j`.
    pub fn neu_up(&self, i: usize) -> VAExpr {
        let du = &self.datum.duals;
        let pos = du.half_pos(i).expect("index in S_{1/2}");
        let mut e = VAExpr::zero();
        for (b, &j) in du.half.iter().enumerate() {
            e.add_scaled_rational(&self.ca.gen(Generator::NeutralPhi(j)), &du.neutral_dual[pos][b]);
        }
        e
    }

    pub fn np(&self, a: &VAExpr, b: &VAExpr) -> VAExpr {
        self.ca.nprod(a, b)
    }

    pub fn np3(&self, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> VAExpr {
        self.ca.nprod(a, &self.ca.nprod(b, c))
    }

    pub fn der(&self, a: &VAExpr) -> VAExpr {
        self.ca.derive(a)
    }

    // ---- d and its action ---------------------------------------------

    fn build_d(&self) -> VAExpr {
        let alg = &self.datum.alg;
        let mut d = VAExpr::zero();
        let pos = self.s_pos();
        for &i in &pos {
            let t = self.np(&self.cur(&self.unit(i)), &self.phi_up(i));
            d.add_scaled_rational(&t, &sign_of(self.p(i)));
            d.add_scaled_rational(&self.phi_up(i), &alg.form(alg.f(), &self.unit(i)));
        }
        for i in self.s_half() {
            d = d + self.np(&self.phi_up(i), &self.ca.gen(Generator::NeutralPhi(i)));
        }
        for &i in &pos {
            for &j in &pos {
                let b = self.bracket(&self.unit(j), &self.unit(i));
                let phib = self.phi_low(&b);
                if phib.is_zero() {
                    continue;
                }
                let t = self.np3(&self.phi_up(i), &self.phi_up(j), &phib);
                d.add_scaled_rational(&t, &(&sign_of(self.p(i)) * &q(1, 2)));
            }
        }
        d
    }

    pub fn d(&self) -> &VAExpr {
        &self.d
    }

    /// `d_(0) a`.
    pub fn d0(&self, a: &VAExpr) -> VAExpr {
        self.ca.nth_product(&self.d, a, 0)
    }

    /// Closed form of `d_(0)` on the current `a`.
    pub fn d0_current_closed(&self, a: &[Rational]) -> VAExpr {
        let mut e = VAExpr::zero();
        for j in self.s_pos() {
            let b = self.bracket(&self.unit(j), a);
            e.add_scaled_rational(&self.np(&self.phi_up(j), &self.cur(&b)), &sign_of(self.p(j)));
            let c = self.form(a, &self.unit(j));
            if !c.is_zero() {
                e.add_scaled(&self.der(&self.phi_up(j)), &(&self.k() * &sc(c)));
            }
        }
        e
    }

    /// Closed form of `d_(0) φ_a`.
    pub fn d0_phi_low_closed(&self, a: &[Rational]) -> Result<VAExpr, BrstError> {
        let gr = &self.datum.grading;
        let alg = &self.datum.alg;
        let pa = gr.project_pos(a);
        let mut e = self.cur(&pa);
        e.add_term(Default::default(), sc(alg.form(a, alg.f())));
        if !SuperAlgebraExt::is_zero(&pa) {
            e.add_scaled_rational(&self.neu(a), &sign_of(self.vparity(&pa)?));
        }
        for j in self.s_pos() {
            let b = self.bracket(&self.unit(j), &pa);
            e = e + self.np(&self.phi_up(j), &self.phi_low(&b));
        }
        Ok(e)
    }

    /// Closed form of `d_(0) φ^i`.
    pub fn d0_phi_up_closed(&self, i: usize) -> VAExpr {
        let alg = &self.datum.alg;
        let pos = self.s_pos();
        let mut e = VAExpr::zero();
        for &j in &pos {
            for &s in &pos {
                let c = alg.bracket_basis(j, s).iter().find(|(k, _)| *k == i).map(|(_, c)| c.clone());
                let Some(c) = c else { continue };
                let coef = &(&sign_of(self.p(i) * self.p(j)) * &q(-1, 2)) * &c;
                e.add_scaled_rational(&self.np(&self.phi_up(j), &self.phi_up(s)), &coef);
            }
        }
        e
    }

    /// Closed form of `d_(0) Φ_a`.
    pub fn d0_neutral_closed(&self, a: &[Rational]) -> VAExpr {
        let alg = &self.datum.alg;
        let af = self.bracket(a, alg.f());
        let mut e = VAExpr::zero();
        for j in self.s_half() {
            e.add_scaled_rational(&self.phi_up(j), &self.form(&self.unit(j), &af));
        }
        e
    }
}

/// Local helper so vector zero tests read naturally.
struct SuperAlgebraExt;

impl SuperAlgebraExt {
    fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Rational::is_zero)
    }
}
