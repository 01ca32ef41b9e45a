// SPDX-License-Identifier: Apache-2.0

//! Free field realization: the subalgebra generated by the `J^{(v)}`,
//! `v ∈ g_{≤0}`, and the neutral fermions, projected to `V(g_0) ⊗ F^ne`.

use std::collections::HashMap;

use super::check::Check;
use super::complex::{latex_name, q, sc, Complex, Mode};
use super::BrstError;
use crate::arith::{Rational, Scalar};
use crate::calculus::{substitute, ConformalAlgebra, GenBracket, GenSpec, Generator, LambdaPoly, VAExpr};
use crate::lie::sign_of;

/// The bar subalgebra, with `Current(i)` standing for `J^{(u_i)}`, and the
/// target `V^{B_0}(g_0) ⊗ F^ne`.
#[derive(Debug)]
pub(crate) struct FfrAlgebras {
    pub cbar: ConformalAlgebra,
    pub target: ConformalAlgebra,
}

fn build(cx: &Complex) -> FfrAlgebras {
    let alg = &cx.datum.alg;
    let gr = &cx.datum.grading;
    let make = |keep: &dyn Fn(i64) -> bool, bar: bool| {
        let mut specs = Vec::new();
        for i in 0..alg.dim() {
            let d2 = gr.degree2(i);
            let name = alg.basis_name(i);
            if keep(d2) {
                let (text, latex) = if bar {
                    (format!("J({name})"), format!("J^{{({})}}", latex_name(name)))
                } else {
                    (name.to_string(), latex_name(name))
                };
                specs.push(GenSpec {
                    gen: Generator::Current(i),
                    parity: alg.parity(i),
                    weight2: 2,
                    conf_weight2: 2 - d2,
                    charge: 0,
                    text,
                    latex,
                });
            }
            if d2 == 1 {
                specs.push(GenSpec {
                    gen: Generator::NeutralPhi(i),
                    parity: alg.parity(i),
                    weight2: 1,
                    conf_weight2: 1,
                    charge: 0,
                    text: format!("Φ_{name}"),
                    latex: format!("\\Phi_{{{}}}", latex_name(name)),
                });
            }
        }
        ConformalAlgebra::new(specs, |a, b| match (a, b) {
            (Generator::Current(i), Generator::Current(j)) => {
                let (ui, uj) = (alg.unit(i), alg.unit(j));
                GenBracket {
                    lie: alg.bracket_basis(i, j).iter().map(|(k, c)| (Generator::Current(*k), sc(c.clone()))).collect(),
                    vac0: Scalar::zero(),
                    vac1: cx.b_zero(&ui, &uj),
                }
            }
            (Generator::NeutralPhi(i), Generator::NeutralPhi(j)) => GenBracket {
                vac0: sc(crate::lie::neutral_pairing(alg, &alg.unit(i), &alg.unit(j))),
                ..Default::default()
            },
            _ => GenBracket::default(),
        })
    };
    FfrAlgebras { cbar: make(&|d2| d2 <= 0, true), target: make(&|d2| d2 == 0, false) }
}

impl Complex {
    pub(crate) fn ffr_algebras(&self) -> &FfrAlgebras {
        self.ffr_algebras.get_or_init(|| build(self))
    }

    /// The target algebra `V^{B_0}(g_0) ⊗ F^ne`.
    pub fn ffr_target(&self) -> &ConformalAlgebra {
        &self.ffr_algebras().target
    }

    /// Rewrites `a ∈ C^k` in the bar subalgebra: `Current(i)` there means `J^{(u_i)}`.
    pub fn to_bar(&self, a: &VAExpr) -> Result<VAExpr, BrstError> {
        let fa = self.ffr_algebras();
        let gr = &self.datum.grading;
        let mut b = VAExpr::zero();
        for (m, c) in a.terms() {
            let fs = self.ca.decode(m);
            if fs.iter().any(|(g, _)| matches!(g, Generator::PhiLower(_) | Generator::PhiUpper(_))) {
                continue;
            }
            if let Some((g, _)) = fs.iter().find(|(g, _)| matches!(g, Generator::Current(i) if gr.degree2(*i) > 0)) {
                return Err(BrstError::NotInBarSubalgebra(format!("{g:?}")));
            }
            b.add_term(fa.cbar.monomial(&fs), c.clone());
        }
        let back = self.from_bar(&b)?;
        if back != *a {
            return Err(BrstError::NotInBarSubalgebra("charged fermions outside the J-span".into()));
        }
        Ok(b)
    }

    /// The embedding of the bar subalgebra into `C^k`.
    pub fn from_bar(&self, b: &VAExpr) -> Result<VAExpr, BrstError> {
        let fa = self.ffr_algebras();
        let images: HashMap<Generator, VAExpr> = (0..self.datum.alg.dim())
            .filter(|&i| self.datum.grading.degree2(i) <= 0)
            .map(|i| (Generator::Current(i), self.j_block(&self.unit(i))))
            .collect();
        Ok(substitute(&fa.cbar, b, &images, &self.ca)?)
    }

    /// Projection of the bar subalgebra onto `V(g_0) ⊗ F^ne`.
    pub fn project_bar(&self, b: &VAExpr) -> Result<VAExpr, BrstError> {
        let fa = self.ffr_algebras();
        let images: HashMap<Generator, VAExpr> = (0..self.datum.alg.dim())
            .filter(|&i| self.datum.grading.degree2(i) < 0)
            .map(|i| (Generator::Current(i), VAExpr::zero()))
            .collect();
        Ok(substitute(&fa.cbar, b, &images, &fa.target)?)
    }

    /// Free field realization of `a`.
    pub fn ffr(&self, a: &VAExpr) -> Result<VAExpr, BrstError> {
        self.project_bar(&self.to_bar(a)?)
    }

    /// `ffr(L)`, computed as `ffr(-J^{f}/(k+h∨))`.
    pub fn ffr_l(&self) -> Result<VAExpr, BrstError> {
        self.ffr(&self.j_f().scale(&-self.kh().inv()))
    }

    fn t_cur(&self, v: &[Rational]) -> VAExpr {
        let t = self.ffr_target();
        let mut e = VAExpr::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_scaled_rational(&t.gen(Generator::Current(i)), c);
            }
        }
        e
    }

    fn t_neu(&self, v: &[Rational]) -> VAExpr {
        let t = self.ffr_target();
        let mut e = VAExpr::zero();
        for i in self.s_half() {
            if !v[i].is_zero() {
                e.add_scaled_rational(&t.gen(Generator::NeutralPhi(i)), &v[i]);
            }
        }
        e
    }

    fn t_neu_up(&self, i: usize) -> VAExpr {
        let du = &self.datum.duals;
        let pos = du.half_pos(i).expect("index in S_{1/2}");
        let mut v = self.datum.alg.zero_vector();
        for (b, &j) in du.half.iter().enumerate() {
            v[j] = du.neutral_dual[pos][b].clone();
        }
        self.t_neu(&v)
    }

    /// Expected image of `J^{a}`: `a + ((-1)^{p(a)}/2) Σ :Φ^j Φ_{[u_j,a]}:`.
    pub fn ffr_expected_j_zero(&self, a: &[Rational]) -> Result<VAExpr, BrstError> {
        let t = self.ffr_target();
        let pa = self.vparity(a)?;
        let mut e = self.t_cur(a);
        for j in self.s_half() {
            let n = self.t_neu(&self.bracket(&self.unit(j), a));
            if n.is_zero() {
                continue;
            }
            e.add_scaled_rational(&t.nprod(&self.t_neu_up(j), &n), &(&sign_of(pa) * &q(1, 2)));
        }
        Ok(e)
    }

    /// Expected image of `J^{v}`, `v ∈ g^f_{-1/2}`.
    pub fn ffr_expected_j_half(&self, v: &[Rational]) -> Result<VAExpr, BrstError> {
        let t = self.ffr_target();
        let pv = self.vparity(v)?;
        let half = self.s_half();
        let mut e = VAExpr::zero();
        for &i in &half {
            let ui = self.unit(i);
            let c = self.t_cur(&self.bracket(v, &ui));
            if !c.is_zero() {
                e = e + t.nprod(&c, &self.t_neu_up(i));
            }
            for &j in &half {
                let n = self.t_neu(&self.bracket(&self.unit(j), &self.bracket(&ui, v)));
                if n.is_zero() {
                    continue;
                }
                let w = t.nprod(&self.t_neu_up(i), &t.nprod(&self.t_neu_up(j), &n));
                e.add_scaled_rational(&w, &(&-sign_of(pv) * &q(1, 3)));
            }
            let k = &(&self.k() * &sc(self.form(v, &ui))) + &sc(self.kappa_pos(v, &ui));
            if !k.is_zero() {
                e.add_scaled(&t.derive(&self.t_neu_up(i)), &-k);
            }
        }
        Ok(e)
    }

    /// Expected image of `L`.
    pub fn ffr_expected_l(&self) -> VAExpr {
        let t = self.ffr_target();
        let du = &self.datum.duals;
        let alg = &self.datum.alg;
        let kh = self.kh();
        let mut e = VAExpr::zero();
        for j in self.s_zero() {
            e = e + t.nprod(&self.t_cur(&du.dual[j]), &self.t_cur(&self.unit(j)));
        }
        e = e.scale(&sc(q(1, 2)));
        let mut d = self.t_cur(alg.x()).scale(&kh);
        d = d - self.t_cur(&self.datum.rho.rho_pos);
        e = e + t.derive(&d);
        let mut e = e.scale(&kh.inv());
        for j in self.s_half() {
            let w = t.nprod(&self.t_neu_up(j), &t.derive(&self.t_neu(&self.unit(j))));
            e.add_scaled_rational(&w, &q(-1, 2));
        }
        if self.mode == Mode::GlNN {
            let id = self.t_cur(alg.identity_element().expect("identity element"));
            let k = self.k();
            e.add_scaled(&t.nprod(&id, &id), &(&(&k * &k) * &sc(q(2, 1))).inv());
        }
        e
    }

    /// The three realization formulas, `J^{(v)} ↦ 0` for `v ∈ g_{<0}`, and the
    /// bracket families of `J^{a}`, `J^{v}` carried over to the target.
    pub fn check_ffr(&self) -> Check {
        let mut c = Check::new("cor3.1");
        let t = self.ffr_target();
        let fmt = |v: &[Rational]| self.datum.alg.format_vector(v);
        match self.ffr_l() {
            Ok(img) => c.expr(t, "ffr(L) - expected", &(img - self.ffr_expected_l())),
            Err(e) => c.fail("ffr(L)", e.to_string()),
        }
        for i in 0..self.datum.alg.dim() {
            if self.datum.grading.degree2(i) < 0 {
                match self.ffr(&self.j_block(&self.unit(i))) {
                    Ok(img) => c.expr(t, format!("ffr(J({}))", self.datum.alg.basis_name(i)), &img),
                    Err(e) => c.fail(format!("ffr(J({}))", self.datum.alg.basis_name(i)), e.to_string()),
                }
            }
        }
        let mut zeros = Vec::new();
        for a in self.centralizer_basis(0) {
            let r = self.j_zero(&a).and_then(|j| Ok((self.ffr(&j)?, self.ffr_expected_j_zero(&a)?)));
            match r {
                Ok((img, want)) => {
                    c.expr(t, format!("ffr(J{{{}}}) - expected", fmt(&a)), &(&img - &want));
                    zeros.push((a, img));
                }
                Err(e) => c.fail(format!("ffr(J{{{}}})", fmt(&a)), e.to_string()),
            }
        }
        let mut halves = Vec::new();
        for v in self.centralizer_basis(-1) {
            let r = self.j_half(&v).and_then(|j| Ok((self.ffr(&j)?, self.ffr_expected_j_half(&v)?)));
            match r {
                Ok((img, want)) => {
                    c.expr(t, format!("ffr(J{{{}}}) - expected", fmt(&v)), &(&img - &want));
                    halves.push((v, img));
                }
                Err(e) => c.fail(format!("ffr(J{{{}}})", fmt(&v)), e.to_string()),
            }
        }
        // Homomorphism on the bracket families.
        for (a, ia) in &zeros {
            for (b, ib) in &zeros {
                let got = t.lambda_bracket(ia, ib);
                let ab = self.bracket(a, b);
                match self.ffr_expected_j_zero(&ab) {
                    Ok(img) => {
                        let want = LambdaPoly::from_coeffs(vec![img, VAExpr::scalar(self.b_half(a, b))]);
                        c.lambda(t, format!("[ffr J{{{}}} _λ ffr J{{{}}}]", fmt(a), fmt(b)), &(&got - &want));
                    }
                    Err(e) => c.fail("bracket image", e.to_string()),
                }
            }
            for (v, iv) in &halves {
                let got = t.lambda_bracket(ia, iv);
                match self.ffr_expected_j_half(&self.bracket(a, v)) {
                    Ok(img) => c.lambda(
                        t,
                        format!("[ffr J{{{}}} _λ ffr J{{{}}}]", fmt(a), fmt(v)),
                        &(&got - &LambdaPoly::from_coeffs(vec![img])),
                    ),
                    Err(e) => c.fail("bracket image", e.to_string()),
                }
            }
        }
        c
    }
}
