// SPDX-License-Identifier: Apache-2.0

//! The building blocks `J^{(v)}`, the generators `J^{a}`, `J^{v}`, `J^{f}` and
//! the conformal vector.

use super::complex::{q, sc, Complex, Mode};
use super::BrstError;
use crate::arith::{Rational, Scalar};
use crate::calculus::{LambdaPoly, VAExpr};
use crate::lie::{killing_form, sign_of, KillingSelector};

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

impl Complex {
    pub fn kappa(&self, a: &[Rational], b: &[Rational], sel: KillingSelector) -> Rational {
        killing_form(&self.datum.alg, &self.datum.grading, a, b, sel)
    }

    /// `κ_{>0}(a, b)`.
    pub fn kappa_pos(&self, a: &[Rational], b: &[Rational]) -> Rational {
        self.kappa(a, b, KillingSelector::Positive)
    }

    /// `k(a|b) + κ_{>0}(a,b)`.
    fn k_form_pos(&self, a: &[Rational], b: &[Rational]) -> Scalar {
        &(&self.k() * &sc(self.form(a, b))) + &sc(self.kappa_pos(a, b))
    }

    /// `B_{1/2}(a,b) = k(a|b) + κ_{>0}(a,b) - ½κ_{1/2}(a,b)`.
    pub fn b_half(&self, a: &[Rational], b: &[Rational]) -> Scalar {
        let h = self.kappa(a, b, KillingSelector::Degree(1));
        &self.k_form_pos(a, b) - &sc(&h * &q(1, 2))
    }

    /// `B_0(a,b) = k(a|b) + ½(κ - κ_0)(a,b)`.
    pub fn b_zero(&self, a: &[Rational], b: &[Rational]) -> Scalar {
        let full = self.kappa(a, b, KillingSelector::Full);
        let zero = self.kappa(a, b, KillingSelector::Degree(0));
        &(&self.k() * &sc(self.form(a, b))) + &sc(&(&full - &zero) * &q(1, 2))
    }

    /// `J^{(v)} = v + Σ_{j,l∈S>0} (-1)^{p(l)} c^l_j(v) :φ_l φ^j:` where
    /// `[v,u_j] = Σ_l c^l_j(v) u_l`.
    pub fn j_block(&self, v: &[Rational]) -> VAExpr {
        let mut e = self.cur(v);
        let pos = self.s_pos();
        for &j in &pos {
            let b = self.bracket(v, &self.unit(j));
            let mut signed = self.datum.alg.zero_vector();
            for &l in &pos {
                signed[l] = &sign_of(self.p(l)) * &b[l];
            }
            let phib = self.phi_low(&signed);
            if phib.is_zero() {
                continue;
            }
            e = e + self.np(&phib, &self.phi_up(j));
        }
        e
    }

    /// Closed form of `d_(0) J^{(v)}` for homogeneous `v`.
    pub fn d0_j_block_closed(&self, v: &[Rational]) -> Result<VAExpr, BrstError> {
        let gr = &self.datum.grading;
        let alg = &self.datum.alg;
        let pv = self.vparity(v)?;
        let fv = self.bracket(alg.f(), v);
        let mut e = VAExpr::zero();
        for j in self.s_pos() {
            let uj = self.unit(j);
            let pj = self.p(j);
            e.add_scaled_rational(&self.phi_up(j), &self.form(&fv, &uj));
            let b = self.bracket(v, &uj);
            let b_half = gr.project_deg(&b, 1);
            if !is_zero(&b_half) {
                let t = self.np(&self.phi_up(j), &self.neu(&b_half));
                e.add_scaled_rational(&t, &sign_of(pv * (pj + 1)));
            }
            let b_le0 = gr.project_le0(&b);
            if !is_zero(&b_le0) {
                let t = self.np(&self.phi_up(j), &self.j_block(&b_le0));
                e.add_scaled_rational(&t, &-sign_of(pj * (pv + 1)));
            }
            let c = self.k_form_pos(v, &uj);
            if !c.is_zero() {
                e.add_scaled(&self.der(&self.phi_up(j)), &c);
            }
        }
        Ok(e)
    }

    fn check_centralizer(&self, v: &[Rational], d2: i64) -> Result<u8, BrstError> {
        let alg = &self.datum.alg;
        let gr = &self.datum.grading;
        let in_deg = gr.project_deg(v, d2) == *v;
        if !in_deg || !is_zero(&self.bracket(alg.f(), v)) {
            return Err(BrstError::NotInCentralizer(alg.format_vector(v)));
        }
        self.vparity(v)
    }

    /// `J^{a}` for `a ∈ g^f_0`.
    pub fn j_zero(&self, a: &[Rational]) -> Result<VAExpr, BrstError> {
        let pa = self.check_centralizer(a, 0)?;
        let mut e = self.j_block(a);
        let c = &sign_of(pa) * &q(1, 2);
        for j in self.s_half() {
            let b = self.bracket(&self.unit(j), a);
            let nb = self.neu(&b);
            if nb.is_zero() {
                continue;
            }
            e.add_scaled_rational(&self.np(&self.neu_up(j), &nb), &c);
        }
        Ok(e)
    }

    /// `J^{v}` for `v ∈ g^f_{-1/2}`.
    pub fn j_half(&self, v: &[Rational]) -> Result<VAExpr, BrstError> {
        let pv = self.check_centralizer(v, -1)?;
        let mut e = self.j_block(v);
        let half = self.s_half();
        let c3 = &-sign_of(pv) * &q(1, 3);
        for &i in &half {
            let ui = self.unit(i);
            let vi = self.bracket(v, &ui);
            for &j in &half {
                let b = self.bracket(&self.unit(j), &self.bracket(&ui, v));
                let nb = self.neu(&b);
                if nb.is_zero() {
                    continue;
                }
                e.add_scaled_rational(&self.np3(&self.neu_up(i), &self.neu_up(j), &nb), &c3);
            }
            if !is_zero(&vi) {
                e = e + self.np(&self.j_block(&vi), &self.neu_up(i));
            }
            let c = self.k_form_pos(v, &ui);
            if !c.is_zero() {
                e.add_scaled(&self.der(&self.neu_up(i)), &-c);
            }
        }
        Ok(e)
    }

    /// `J^{f}` (with `h∨ = 0` and the `:I²:` correction in `gl(n|n)` mode).
    pub fn j_f(&self) -> VAExpr {
        let alg = &self.datum.alg;
        let du = &self.datum.duals;
        let f = alg.f().clone();
        let kh = self.kh();
        let mut e = self.j_block(&f);
        for j in self.s_half() {
            let b = self.bracket(&f, &self.unit(j));
            if is_zero(&b) {
                continue;
            }
            let t = self.np(&self.neu_up(j), &self.j_block(&b));
            e.add_scaled_rational(&t, &sign_of(self.p(j)));
        }
        for j in self.s_zero() {
            let t = self.np(&self.j_block(&du.dual[j]), &self.j_block(&self.unit(j)));
            e.add_scaled_rational(&t, &q(-1, 2));
        }
        e.add_scaled(&self.der(&self.j_block(alg.x())), &-kh.clone());
        e = e + self.der(&self.j_block(&self.datum.rho.rho_pos));
        let khalf = &kh * &sc(q(1, 2));
        for j in self.s_half() {
            let t = self.np(&self.neu_up(j), &self.der(&self.neu(&self.unit(j))));
            e.add_scaled(&t, &khalf);
        }
        if self.mode == Mode::GlNN {
            let id = self.cur(alg.identity_element().expect("identity element"));
            let c = (&self.k() * &sc(q(2, 1))).inv();
            e.add_scaled(&self.np(&id, &id), &-c);
        }
        e
    }

    /// `Σ_{j∈S} :u^j u_j:`.
    pub fn casimir_field(&self) -> VAExpr {
        let du = &self.datum.duals;
        (0..self.datum.alg.dim())
            .map(|j| self.np(&self.cur(&du.dual[j]), &self.cur(&self.unit(j))))
            .sum()
    }

    /// Sugawara part `L^g`.
    pub fn l_sugawara(&self) -> VAExpr {
        let omega = self.casimir_field();
        match self.mode {
            Mode::Standard => omega.scale(&(&self.kh() * &sc(q(2, 1))).inv()),
            Mode::GlNN => {
                let k = self.k();
                let id = self.cur(self.datum.alg.identity_element().expect("identity element"));
                let mut e = omega.scale(&(&k * &sc(q(2, 1))).inv());
                e.add_scaled(&self.np(&id, &id), &(&(&k * &k) * &sc(q(2, 1))).inv());
                e
            }
        }
    }

    /// Charged fermion part `L^ch`.
    pub fn l_charged(&self) -> VAExpr {
        let gr = &self.datum.grading;
        let mut e = VAExpr::zero();
        for j in self.s_pos() {
            let m = Rational::new(gr.degree2(j), 2);
            let lo = self.phi_low(&self.unit(j));
            let up = self.phi_up(j);
            e.add_scaled_rational(&self.np(&self.der(&up), &lo), &(&Rational::one() - &m));
            e.add_scaled_rational(&self.np(&up, &self.der(&lo)), &-m);
        }
        e
    }

    /// Neutral fermion part `L^ne`.
    pub fn l_neutral(&self) -> VAExpr {
        let mut e = VAExpr::zero();
        for j in self.s_half() {
            let t = self.np(&self.der(&self.neu_up(j)), &self.neu(&self.unit(j)));
            e.add_scaled_rational(&t, &q(1, 2));
        }
        e
    }

    /// `L = L^g + ∂x + L^ch + L^ne`.
    pub fn l_total(&self) -> VAExpr {
        self.l_sugawara() + self.der(&self.cur(self.datum.alg.x())) + self.l_charged() + self.l_neutral()
    }

    fn sdim(&self, d2: i64) -> i64 {
        self.datum
            .grading
            .s_deg(d2)
            .iter()
            .map(|&i| if self.p(i) == 0 { 1 } else { -1 })
            .sum()
    }

    /// `c = sdim g_0 - ½ sdim g_{1/2} - 12/(k+h∨) |ρ - (k+h∨)x|²`.
    pub fn central_charge_formula(&self) -> Scalar {
        let alg = &self.datum.alg;
        let rho = &self.datum.rho.rho;
        let x = alg.x();
        let kh = self.kh();
        let rr = sc(self.form(rho, rho));
        let rx = sc(self.form(rho, x));
        let xx = sc(self.form(x, x));
        let norm = &(&rr - &(&(&kh * &rx) * &sc(q(2, 1)))) + &(&(&kh * &kh) * &xx);
        let base = sc(&Rational::from_int(self.sdim(0)) - &Rational::new(self.sdim(1), 2));
        &base - &(&norm * &(&sc(q(12, 1)) * &kh.inv()))
    }

    /// `[L_λ L]`.
    pub fn l_bracket(&self) -> LambdaPoly {
        let l = self.l_total();
        self.ca.lambda_bracket(&l, &l)
    }

    /// `c` read off the `λ³` term of `[L_λ L]`; `None` if that term is not a scalar.
    pub fn central_charge_ope(&self) -> Option<Scalar> {
        let c3 = self.l_bracket().coeff(3);
        let vac = c3.vacuum_coefficient();
        if c3.len() > usize::from(!vac.is_zero()) {
            return None;
        }
        Some(&vac * &sc(q(2, 1)))
    }

    /// `d_(0) J^{f}`; vanishes exactly when `J^{f}` is closed.
    pub fn thm_closed_residual(&self) -> VAExpr {
        self.d0(&self.j_f())
    }

    /// The two witnesses `W_1`, `W_2` with `(k+h∨)L + J^{f} = d_(0)(W_1 + ½W_2)`.
    pub fn exactness_witnesses(&self) -> (VAExpr, VAExpr) {
        let du = &self.datum.duals;
        let pos = self.s_pos();
        let mut w1 = VAExpr::zero();
        for &i in &pos {
            let t = self.np(&self.phi_low(&self.unit(i)), &self.cur(&du.dual[i]));
            w1.add_scaled_rational(&t, &sign_of(self.p(i)));
        }
        let mut w2 = VAExpr::zero();
        for &i in &pos {
            for &j in &pos {
                let b = self.bracket(&self.unit(i), &du.dual[j]);
                let pb = self.phi_low(&b);
                if pb.is_zero() {
                    continue;
                }
                let t = self.np3(&pb, &self.phi_low(&self.unit(j)), &self.phi_up(i));
                w2.add_scaled_rational(&t, &sign_of(self.p(j)));
            }
        }
        (w1, w2)
    }

    /// `(k+h∨)L + J^{f} - d_(0)W_1 - ½ d_(0)W_2`.
    pub fn thm_exact_residual(&self) -> VAExpr {
        let (w1, w2) = self.exactness_witnesses();
        let mut e = self.l_total().scale(&self.kh()) + self.j_f();
        e = e - self.d0(&w1);
        e.add_scaled_rational(&self.d0(&w2), &q(-1, 2));
        e
    }
}
