// SPDX-License-Identifier: Apache-2.0

//! Named elements and top-level checks.

use super::check::Check;
use super::complex::{q, sc, Complex, Mode};
use super::BrstError;
use crate::arith::{Rational, Scalar};
use crate::calculus::{LambdaPoly, VAExpr};
use crate::lie::{sign_of, Vector};

/// Which named element of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tag {
    D,
    J(Vector),
    Jhat0(Vector),
    Jhalf(Vector),
    Jf,
    L,
    Lg,
    Lch,
    Lne,
    Witness1,
    Witness2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedElement {
    pub tag: Tag,
    pub value: VAExpr,
}

pub const TAG_NAMES: [&str; 11] = ["d", "J:<v>", "Jhat0:<a>", "Jhalf:<v>", "Jf", "L", "Lg", "Lch", "Lne", "W1", "W2"];

impl Complex {
    /// Element of `g^f_j` given as an index into the centralizer basis or a
    /// linear combination of basis names.
    pub fn centralizer_element(&self, d2: i64, s: &str) -> Result<Vector, BrstError> {
        if let Ok(i) = s.trim().parse::<usize>() {
            return self
                .datum
                .centralizer
                .degree(d2)
                .get(i)
                .cloned()
                .ok_or_else(|| BrstError::NotInCentralizer(format!("index {i}")));
        }
        Ok(self.datum.alg.parse_vector(s)?)
    }

    pub fn parse_tag(&self, s: &str) -> Result<Tag, BrstError> {
        let alg = &self.datum.alg;
        Ok(match s {
            "d" => Tag::D,
            "Jf" => Tag::Jf,
            "L" => Tag::L,
            "Lg" => Tag::Lg,
            "Lch" => Tag::Lch,
            "Lne" => Tag::Lne,
            "W1" => Tag::Witness1,
            "W2" => Tag::Witness2,
            _ => match s.split_once(':') {
                Some(("J", v)) => Tag::J(alg.parse_vector(v)?),
                Some(("Jhat0", v)) => Tag::Jhat0(self.centralizer_element(0, v)?),
                Some(("Jhalf", v)) => Tag::Jhalf(self.centralizer_element(-1, v)?),
                _ => return Err(BrstError::UnknownTag(s.to_string())),
            },
        })
    }

    pub fn element(&self, tag: &Tag) -> Result<NamedElement, BrstError> {
        let value = match tag {
            Tag::D => self.d().clone(),
            Tag::J(v) => self.j_block(v),
            Tag::Jhat0(a) => self.j_zero(a)?,
            Tag::Jhalf(v) => self.j_half(v)?,
            Tag::Jf => self.j_f(),
            Tag::L => self.l_total(),
            Tag::Lg => self.l_sugawara(),
            Tag::Lch => self.l_charged(),
            Tag::Lne => self.l_neutral(),
            Tag::Witness1 => self.exactness_witnesses().0,
            Tag::Witness2 => self.exactness_witnesses().1,
        };
        Ok(NamedElement { tag: tag.clone(), value })
    }

    /// `[d_λ d]`, which must vanish identically.
    pub fn d_self_bracket(&self) -> LambdaPoly {
        self.ca.lambda_bracket(self.d(), self.d())
    }

    pub fn check_d_squared(&self) -> Check {
        let mut c = Check::new("d2");
        c.lambda(&self.ca, "[d_λ d]", &self.d_self_bracket());
        c
    }

    /// Closed forms of `d_(0)` on every generator and on every `J^{(u_i)}`.
    pub fn check_closed_forms(&self) -> Check {
        let mut c = Check::new("closed-forms");
        let alg = &self.datum.alg;
        for i in 0..alg.dim() {
            let u = self.unit(i);
            let name = alg.basis_name(i);
            let d2 = self.datum.grading.degree2(i);
            c.expr(&self.ca, format!("d0 {name}"), &(self.d0(&self.cur(&u)) - self.d0_current_closed(&u)));
            if d2 > 0 {
                match self.d0_phi_low_closed(&u) {
                    Ok(e) => c.expr(&self.ca, format!("d0 φ_{name}"), &(self.d0(&self.phi_low(&u)) - e)),
                    Err(e) => c.fail(format!("d0 φ_{name}"), e.to_string()),
                }
                c.expr(&self.ca, format!("d0 φ^{name}"), &(self.d0(&self.phi_up(i)) - self.d0_phi_up_closed(i)));
            }
            if d2 == 1 {
                c.expr(&self.ca, format!("d0 Φ_{name}"), &(self.d0(&self.neu(&u)) - self.d0_neutral_closed(&u)));
                c.expr(&self.ca, format!("d0 Φ^{name}"), &(self.d0(&self.neu_up(i)) - self.phi_up(i)));
            }
            match self.d0_j_block_closed(&u) {
                Ok(e) => c.expr(&self.ca, format!("d0 J({name})"), &(self.d0(&self.j_block(&u)) - e)),
                Err(e) => c.fail(format!("d0 J({name})"), e.to_string()),
            }
        }
        c
    }

    fn lambda_of(&self, coeffs: Vec<VAExpr>) -> LambdaPoly {
        LambdaPoly::from_coeffs(coeffs)
    }

    /// `[J^{(a)}_λ J^{(b)}] = J^{([a,b])} + λB_0(a,b)` for basis `a, b ∈ g_{≤0}`.
    pub fn check_ope_2_10(&self) -> Check {
        let mut c = Check::new("ope2.10");
        let le0: Vec<usize> = (0..self.datum.alg.dim()).filter(|&i| self.datum.grading.degree2(i) <= 0).collect();
        for &i in &le0 {
            for &j in &le0 {
                let (a, b) = (self.unit(i), self.unit(j));
                let got = self.ca.lambda_bracket(&self.j_block(&a), &self.j_block(&b));
                let want = self.lambda_of(vec![
                    self.j_block(&self.bracket(&a, &b)),
                    VAExpr::scalar(self.b_zero(&a, &b)),
                ]);
                let name = |k| self.datum.alg.basis_name(k).to_string();
                c.lambda(&self.ca, format!("[J({})_λ J({})]", name(i), name(j)), &(&got - &want));
            }
        }
        c
    }

    pub fn centralizer_basis(&self, d2: i64) -> Vec<Vector> {
        self.datum.centralizer.degree(d2).to_vec()
    }

    /// Closedness of every `J^{a}` and `[J^{a}_λ J^{b}] = J^{[a,b]} + λB_{1/2}(a,b)`.
    pub fn check_ope_2_15(&self) -> Check {
        let mut c = Check::new("ope2.15");
        let basis = self.centralizer_basis(0);
        let fmt = |v: &Vector| self.datum.alg.format_vector(v);
        let mut elems = Vec::new();
        for a in &basis {
            match self.j_zero(a) {
                Ok(e) => {
                    c.expr(&self.ca, format!("d0 J{{{}}}", fmt(a)), &self.d0(&e));
                    elems.push((a.clone(), e));
                }
                Err(e) => c.fail(format!("J{{{}}}", fmt(a)), e.to_string()),
            }
        }
        for (a, ja) in &elems {
            for (b, jb) in &elems {
                let got = self.ca.lambda_bracket(ja, jb);
                let ab = self.bracket(a, b);
                let jab = match self.j_zero(&ab) {
                    Ok(e) => e,
                    Err(e) => {
                        c.fail(format!("J{{[{}, {}]}}", fmt(a), fmt(b)), e.to_string());
                        continue;
                    }
                };
                let want = self.lambda_of(vec![jab, VAExpr::scalar(self.b_half(a, b))]);
                c.lambda(&self.ca, format!("[J{{{}}}_λ J{{{}}}]", fmt(a), fmt(b)), &(&got - &want));
            }
        }
        c
    }

    /// Closedness of every `J^{v}` and `[J^{a}_λ J^{v}] = J^{[a,v]}`.
    pub fn check_ope_2_18(&self) -> Check {
        let mut c = Check::new("ope2.18");
        let fmt = |v: &Vector| self.datum.alg.format_vector(v);
        let mut halves = Vec::new();
        for v in self.centralizer_basis(-1) {
            match self.j_half(&v) {
                Ok(e) => {
                    c.expr(&self.ca, format!("d0 J{{{}}}", fmt(&v)), &self.d0(&e));
                    halves.push((v, e));
                }
                Err(e) => c.fail(format!("J{{{}}}", fmt(&v)), e.to_string()),
            }
        }
        for a in self.centralizer_basis(0) {
            let ja = match self.j_zero(&a) {
                Ok(e) => e,
                Err(e) => {
                    c.fail(format!("J{{{}}}", fmt(&a)), e.to_string());
                    continue;
                }
            };
            for (v, jv) in &halves {
                let got = self.ca.lambda_bracket(&ja, jv);
                match self.j_half(&self.bracket(&a, v)) {
                    Ok(want) => c.lambda(
                        &self.ca,
                        format!("[J{{{}}}_λ J{{{}}}]", fmt(&a), fmt(v)),
                        &(&got - &LambdaPoly::from_coeffs(vec![want])),
                    ),
                    Err(e) => c.fail(format!("J{{[{}, {}]}}", fmt(&a), fmt(v)), e.to_string()),
                }
            }
        }
        c
    }

    pub fn verify_thm31(&self) -> Check {
        let mut c = Check::new("thm3.1");
        c.expr(&self.ca, "d0 J{f}", &self.thm_closed_residual());
        c
    }

    /// Witness identity and the vanishing of the weight-2 remainder `P_2`.
    pub fn verify_thm32(&self) -> Check {
        let mut c = Check::new("thm3.2");
        c.expr(&self.ca, "(k+h∨)L + J{f} - d0 W1 - ½ d0 W2", &self.thm_exact_residual());
        c.expr(&self.ca, "P2", &self.p2());
        c
    }

    /// Both evaluations of the central charge; they must agree.
    pub fn central_charge(&self) -> (Check, Scalar) {
        let mut c = Check::new("central-charge");
        let formula = self.central_charge_formula();
        let l = self.l_total();
        let ll = self.l_bracket();
        let ope = &ll.coeff(3).vacuum_coefficient() * &sc(q(2, 1));
        let want = LambdaPoly::from_coeffs(vec![
            self.der(&l),
            l.scale_rational(&Rational::from_int(2)),
            VAExpr::zero(),
            VAExpr::scalar(formula.scale(&q(1, 2))),
        ]);
        c.lambda(&self.ca, "[L_λ L] - (∂+2λ)L - λ³c/12", &(&ll - &want));
        c.value("c(formula) - c(ope)", &(&formula - &ope));
        (c, formula)
    }

    /// `c` at a numeric level.
    pub fn central_charge_at(&self, k: &Rational) -> Result<Rational, BrstError> {
        if self.mode == Mode::GlNN && k.is_zero() {
            return Err(BrstError::CriticalStructure);
        }
        Ok(self.central_charge_formula().eval(k)?)
    }

    /// `Σ_{i∈S>0} (-1)^{p(i)} :φ_i ∂φ^i:`.
    pub(crate) fn ghost_number_derivative(&self) -> VAExpr {
        let mut e = VAExpr::zero();
        for i in self.s_pos() {
            let t = self.np(&self.phi_low(&self.unit(i)), &self.der(&self.phi_up(i)));
            e.add_scaled_rational(&t, &sign_of(self.p(i)));
        }
        e
    }
}
