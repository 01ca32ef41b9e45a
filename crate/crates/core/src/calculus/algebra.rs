// SPDX-License-Identifier: Apache-2.0

//! Universal enveloping vertex algebra of a Lie conformal superalgebra whose
//! brackets are linear in the generators plus central terms.
//!
//! States are PBW words `D(F_1) ⋯ D(F_r)|0⟩` with `D(∂^n g) = n!·g_{(-n-1)}`.
//! All products are computed by commuting modes through such words.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;

use super::expr::{binomial, factorial, Factor, GenId, Generator, LambdaPoly, Monomial, VAExpr};
use crate::arith::{Rational, Scalar};
use crate::lie::Parity;

/// Static data of one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub gen: Generator,
    pub parity: Parity,
    /// Doubled weight used for truncation; must make every bracket homogeneous.
    pub weight2: u32,
    /// Doubled conformal weight in the sense of the Virasoro element.
    pub conf_weight2: i64,
    pub charge: i32,
    pub text: String,
    pub latex: String,
}

/// `[a_λ b] = Σ c_g g + vac0·|0⟩ + λ·vac1·|0⟩`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenBracket {
    pub lie: Vec<(Generator, Scalar)>,
    pub vac0: Scalar,
    pub vac1: Scalar,
}

impl GenBracket {
    pub fn is_zero(&self) -> bool {
        self.lie.is_empty() && self.vac0.is_zero() && self.vac1.is_zero()
    }
}

#[derive(Debug, Clone, Default)]
struct Entry {
    lie: Vec<(GenId, Scalar)>,
    vac0: Scalar,
    vac1: Scalar,
}

/// How top-level products fan out over monomial pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

type Cache<K> = DashMap<K, Arc<VAExpr>, FxBuildHasher>;

pub struct ConformalAlgebra {
    gens: Vec<GenSpec>,
    ids: HashMap<Generator, GenId>,
    table: Vec<Vec<Entry>>,
    mode: ExecMode,
    create_cache: Cache<(Factor, Monomial)>,
    ann_cache: Cache<(GenId, u32, Monomial)>,
    mode_cache: Cache<(Monomial, i64, Monomial)>,
}

impl std::fmt::Debug for ConformalAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConformalAlgebra").field("generators", &self.gens.len()).finish()
    }
}

fn sign(bit: u8) -> Rational {
    if bit % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

impl ConformalAlgebra {
    /// `bracket(a, b)` gives `[a_λ b]` for every ordered pair of generators.
    pub fn new(mut gens: Vec<GenSpec>, bracket: impl Fn(Generator, Generator) -> GenBracket) -> Self {
        gens.sort_by_key(|g| g.gen);
        assert!(gens.len() < GenId::MAX as usize, "too many generators");
        let ids: HashMap<Generator, GenId> = gens.iter().enumerate().map(|(i, g)| (g.gen, i as GenId)).collect();
        let table = gens
            .iter()
            .map(|a| {
                gens.iter()
                    .map(|b| {
                        let br = bracket(a.gen, b.gen);
                        Entry {
                            lie: br
                                .lie
                                .into_iter()
                                .filter(|(_, c)| !c.is_zero())
                                .map(|(g, c)| (*ids.get(&g).expect("bracket names an unknown generator"), c))
                                .collect(),
                            vac0: br.vac0,
                            vac1: br.vac1,
                        }
                    })
                    .collect()
            })
            .collect();
        ConformalAlgebra {
            gens,
            ids,
            table,
            mode: ExecMode::default(),
            create_cache: DashMap::with_hasher(FxBuildHasher),
            ann_cache: DashMap::with_hasher(FxBuildHasher),
            mode_cache: DashMap::with_hasher(FxBuildHasher),
        }
    }

    pub fn with_mode(mut self, mode: ExecMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn set_mode(&mut self, mode: ExecMode) {
        self.mode = mode;
    }

    pub fn mode(&self) -> ExecMode {
        self.mode
    }

    pub fn clear_caches(&self) {
        self.create_cache.clear();
        self.ann_cache.clear();
        self.mode_cache.clear();
    }

    pub fn generators(&self) -> &[GenSpec] {
        &self.gens
    }

    pub fn spec(&self, id: GenId) -> &GenSpec {
        &self.gens[id as usize]
    }

    pub fn id(&self, g: Generator) -> Option<GenId> {
        self.ids.get(&g).copied()
    }

    pub fn has(&self, g: Generator) -> bool {
        self.ids.contains_key(&g)
    }

    /// The declared bracket `[a_λ b]` of two generators.
    pub fn generator_bracket(&self, a: Generator, b: Generator) -> GenBracket {
        let (ia, ib) = (self.ids[&a], self.ids[&b]);
        let e = &self.table[ia as usize][ib as usize];
        GenBracket {
            lie: e.lie.iter().map(|(g, c)| (self.gens[*g as usize].gen, c.clone())).collect(),
            vac0: e.vac0.clone(),
            vac1: e.vac1.clone(),
        }
    }

    fn p(&self, g: GenId) -> u8 {
        self.gens[g as usize].parity.bit()
    }

    fn w2(&self, g: GenId) -> i64 {
        self.gens[g as usize].weight2 as i64
    }

    pub(crate) fn mono_w2(&self, m: &Monomial) -> i64 {
        m.factors().iter().map(|f| self.w2(f.gen) + 2 * f.n as i64).sum()
    }

    pub fn monomial_parity(&self, m: &Monomial) -> Parity {
        Parity::from_bit(m.factors().iter().map(|f| self.p(f.gen)).sum::<u8>() % 2)
    }

    /// Parity of a homogeneous expression; `None` if mixed, `Even` for zero.
    pub fn parity(&self, e: &VAExpr) -> Option<Parity> {
        let mut found = None;
        for (m, _) in e.terms() {
            let p = self.monomial_parity(m);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// `∂^n g` as an expression.
    pub fn gen_d(&self, g: Generator, n: u16) -> VAExpr {
        let id = self.ids[&g];
        VAExpr::from_monomial(Monomial::single(Factor { gen: id, n }), Scalar::one())
    }

    pub fn gen(&self, g: Generator) -> VAExpr {
        self.gen_d(g, 0)
    }

    // ---- mode engine -------------------------------------------------

    /// `D(f)·w`.
    fn create(&self, f: Factor, w: &Monomial) -> Arc<VAExpr> {
        if let Some(first) = w.factors().first() {
            if f < *first || (f == *first && self.p(f.gen) == 0) {
                return Arc::new(VAExpr::from_monomial(w.prepend(f), Scalar::one()));
            }
        } else {
            return Arc::new(VAExpr::from_monomial(w.prepend(f), Scalar::one()));
        }
        let key = (f, w.clone());
        if let Some(hit) = self.create_cache.get(&key) {
            return hit.clone();
        }
        let out = Arc::new(self.create_uncached(f, w));
        self.create_cache.insert(key, out.clone());
        out
    }

    fn create_uncached(&self, f: Factor, w: &Monomial) -> VAExpr {
        let f1 = w.factors()[0];
        let rest = w.tail();
        let mut out = VAExpr::zero();
        let n = f.n as u64;
        if f == f1 {
            // odd square: D D = ½ [D, D]
            let coef = &(&factorial(n) * &factorial(n)) / &(&factorial(2 * n + 1) * &Rational::from_int(2));
            let entry = &self.table[f.gen as usize][f.gen as usize];
            for (h, c) in &entry.lie {
                let y = self.create(Factor { gen: *h, n: 2 * f.n + 1 }, &rest);
                out.add_scaled(&y, &c.scale(&coef));
            }
            return out;
        }
        let s = Scalar::from_rational(sign(self.p(f.gen) * self.p(f1.gen)));
        let x = self.create(f, &rest);
        for (m, c) in x.terms() {
            let y = self.create(f1, m);
            out.add_scaled(&y, &(c * &s));
        }
        let m = f1.n as u64;
        let coef = &(&factorial(n) * &factorial(m)) / &factorial(n + m + 1);
        let entry = &self.table[f.gen as usize][f1.gen as usize];
        for (h, c) in &entry.lie {
            let y = self.create(Factor { gen: *h, n: f.n + f1.n + 1 }, &rest);
            out.add_scaled(&y, &c.scale(&coef));
        }
        out
    }

    /// `g_{(p)} w` for `p ≥ 0`.
    fn ann(&self, g: GenId, p: u32, w: &Monomial) -> Arc<VAExpr> {
        if w.is_vacuum() || self.mono_w2(w) + self.w2(g) - 2 * (p as i64 + 1) < 0 {
            return Arc::new(VAExpr::zero());
        }
        let key = (g, p, w.clone());
        if let Some(hit) = self.ann_cache.get(&key) {
            return hit.clone();
        }
        let out = Arc::new(self.ann_uncached(g, p, w));
        self.ann_cache.insert(key, out.clone());
        out
    }

    fn ann_uncached(&self, g: GenId, p: u32, w: &Monomial) -> VAExpr {
        let f1 = w.factors()[0];
        let rest = w.tail();
        let mut out = VAExpr::zero();
        let s = Scalar::from_rational(sign(self.p(g) * self.p(f1.gen)));
        let x = self.ann(g, p, &rest);
        for (m, c) in x.terms() {
            let y = self.create(f1, m);
            out.add_scaled(&y, &(c * &s));
        }
        // [g_(p), D_m(b)] = m!·( Σ c_h h_(p-m-1) + vac0 δ_{p,m} + p·vac1 δ_{p,m+1} )
        let m = f1.n as u32;
        let mf = factorial(m as u64);
        let entry = &self.table[g as usize][f1.gen as usize];
        for (h, c) in &entry.lie {
            if p > m {
                let y = self.ann(*h, p - m - 1, &rest);
                out.add_scaled(&y, &c.scale(&mf));
            } else {
                let j = m - p;
                let y = self.create(Factor { gen: *h, n: j as u16 }, &rest);
                out.add_scaled(&y, &c.scale(&(&mf / &factorial(j as u64))));
            }
        }
        if p == m && !entry.vac0.is_zero() {
            out.add_term(rest.clone(), entry.vac0.scale(&mf));
        }
        if p == m + 1 && !entry.vac1.is_zero() {
            out.add_term(rest, entry.vac1.scale(&(&mf * &Rational::from_int(p as i64))));
        }
        out
    }

    /// `g_{(r)} w` for any integer `r`.
    fn gen_mode(&self, g: GenId, r: i64, w: &Monomial) -> VAExpr {
        if r >= 0 {
            (*self.ann(g, r as u32, w)).clone()
        } else {
            let j = (-r - 1) as u64;
            let y = self.create(Factor { gen: g, n: j as u16 }, w);
            if j <= 1 {
                (*y).clone()
            } else {
                y.scale_rational(&factorial(j).inv())
            }
        }
    }

    fn create_expr(&self, f: Factor, e: &VAExpr) -> VAExpr {
        let mut out = VAExpr::zero();
        for (m, c) in e.terms() {
            out.add_scaled(&self.create(f, m), c);
        }
        out
    }

    /// `A_{(q)} C` for monomials `A`, `C`.
    fn mono_mode(&self, a: &Monomial, q: i64, c: &Monomial) -> Arc<VAExpr> {
        if a.is_vacuum() {
            return Arc::new(if q == -1 {
                VAExpr::from_monomial(c.clone(), Scalar::one())
            } else {
                VAExpr::zero()
            });
        }
        if self.mono_w2(a) + self.mono_w2(c) - 2 * (q + 1) < 0 {
            return Arc::new(VAExpr::zero());
        }
        let key = (a.clone(), q, c.clone());
        if let Some(hit) = self.mode_cache.get(&key) {
            return hit.clone();
        }
        let out = Arc::new(self.mono_mode_uncached(a, q, c));
        self.mode_cache.insert(key, out.clone());
        out
    }

    fn mono_mode_uncached(&self, a: &Monomial, q: i64, c: &Monomial) -> VAExpr {
        let first = a.factors()[0];
        let n = first.n as i64;
        let rest = a.tail();
        if rest.is_vacuum() {
            // (∂^n g)_(q) = (-1)^n q(q-1)⋯(q-n+1) g_(q-n)
            let mut ff = Rational::one();
            for t in 0..n {
                ff = ff * Rational::from_int(q - t);
            }
            if ff.is_zero() {
                return VAExpr::zero();
            }
            let coef = &ff * &sign((n % 2) as u8);
            let y = self.gen_mode(first.gen, q - n, c);
            return if coef.is_one() { y } else { y.scale_rational(&coef) };
        }
        let mut out = VAExpr::zero();
        let w_rest = self.mono_w2(&rest);
        let w_c = self.mono_w2(c);
        // Σ_j (1/j!) D_{n+j}(a) · A'_(q+j) C
        let mut j: i64 = 0;
        while 2 * (q + j + 1) <= w_rest + w_c {
            let y = self.mono_mode(&rest, q + j, c);
            if !y.is_zero() {
                let z = self.create_expr(Factor { gen: first.gen, n: (n + j) as u16 }, &y);
                out.add_scaled_rational(&z, &factorial(j as u64).inv());
            }
            j += 1;
        }
        // ± Σ_i (-1)^n n! C(n+i, i) A'_(q-n-1-i) (a_(i) C)
        let s = sign(self.p(first.gen) * self.monomial_parity(&rest).bit() + (n % 2) as u8);
        let nf = factorial(n as u64);
        let mut i: i64 = 0;
        while 2 * (i + 1) <= self.w2(first.gen) + w_c {
            let z = self.ann(first.gen, i as u32, c);
            if !z.is_zero() {
                let coef = &(&s * &nf) * &binomial((n + i) as u64, i as u64);
                for (m, cz) in z.terms() {
                    let y = self.mono_mode(&rest, q - n - 1 - i, m);
                    out.add_scaled(&y, &cz.scale(&coef));
                }
            }
            i += 1;
        }
        out
    }

    fn pairs<'a>(&self, a: &'a VAExpr, b: &'a VAExpr) -> Vec<(&'a Monomial, &'a Scalar, &'a Monomial, &'a Scalar)> {
        let mut v = Vec::with_capacity(a.len() * b.len());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                v.push((ma, ca, mb, cb));
            }
        }
        v
    }

    fn reduce<T: Sync>(&self, items: &[T], f: impl Fn(&T) -> Vec<VAExpr> + Sync + Send, width: usize) -> Vec<VAExpr> {
        let merge = |mut x: Vec<VAExpr>, y: Vec<VAExpr>| {
            for (a, b) in x.iter_mut().zip(y) {
                let cur = std::mem::take(a);
                *a = if cur.len() < b.len() { b + cur } else { cur + b };
            }
            x
        };
        #[cfg(feature = "parallel")]
        if self.mode == ExecMode::Parallel && items.len() > 1 {
            use rayon::prelude::*;
            return items
                .par_iter()
                .map(&f)
                .reduce(|| vec![VAExpr::zero(); width], merge);
        }
        items.iter().map(f).fold(vec![VAExpr::zero(); width], merge)
    }

    /// `a_{(q)} b` for any integer `q`.
    pub fn mode_product(&self, a: &VAExpr, b: &VAExpr, q: i64) -> VAExpr {
        let pairs = self.pairs(a, b);
        self.reduce(
            &pairs,
            |(ma, ca, mb, cb)| {
                let y = self.mono_mode(ma, q, mb);
                vec![y.scale(&(*ca * *cb))]
            },
            1,
        )
        .pop()
        .unwrap_or_default()
    }

    /// The `n`-th product `a_{(n)} b`.
    pub fn nth_product(&self, a: &VAExpr, b: &VAExpr, n: u32) -> VAExpr {
        self.mode_product(a, b, n as i64)
    }

    /// Normally ordered product `:ab:`.
    pub fn nprod(&self, a: &VAExpr, b: &VAExpr) -> VAExpr {
        self.mode_product(a, b, -1)
    }

    /// Right-nested `:a_1(a_2(⋯ a_r)⋯):`.
    pub fn nprod_all(&self, parts: &[VAExpr]) -> VAExpr {
        match parts.split_last() {
            None => VAExpr::vacuum(),
            Some((last, init)) => init.iter().rev().fold(last.clone(), |acc, p| self.nprod(p, &acc)),
        }
    }

    pub fn lambda_bracket(&self, a: &VAExpr, b: &VAExpr) -> LambdaPoly {
        let wa = a.terms().map(|(m, _)| self.mono_w2(m)).max().unwrap_or(0);
        let wb = b.terms().map(|(m, _)| self.mono_w2(m)).max().unwrap_or(0);
        if a.is_zero() || b.is_zero() || wa + wb < 2 {
            return LambdaPoly::zero();
        }
        let top = ((wa + wb) / 2 - 1) as usize;
        let pairs = self.pairs(a, b);
        let coeffs = self.reduce(
            &pairs,
            |(ma, ca, mb, cb)| {
                let c = *ca * *cb;
                (0..=top)
                    .map(|n| {
                        let y = self.mono_mode(ma, n as i64, mb);
                        y.scale(&c)
                    })
                    .collect()
            },
            top + 1,
        );
        LambdaPoly::from_coeffs(coeffs)
    }

    /// Rewrites a word of factors, in any order, to normal form.
    pub fn normalize_word(&self, fs: &[Factor]) -> VAExpr {
        let sorted = fs.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && self.p(w[0].gen) == 0));
        if sorted {
            return VAExpr::from_monomial(Monomial::from_factors(fs), Scalar::one());
        }
        let mut e = VAExpr::vacuum();
        for f in fs.iter().rev() {
            e = self.create_expr(*f, &e);
        }
        e
    }

    pub fn derive(&self, a: &VAExpr) -> VAExpr {
        let mut out = VAExpr::zero();
        for (m, c) in a.terms() {
            let fs = m.factors();
            for i in 0..fs.len() {
                let mut bumped: Vec<Factor> = fs.to_vec();
                bumped[i].n += 1;
                out.add_scaled(&self.normalize_word(&bumped), c);
            }
        }
        out
    }

    pub fn derive_n(&self, a: &VAExpr, n: u32) -> VAExpr {
        (0..n).fold(a.clone(), |acc, _| self.derive(&acc))
    }

    /// Sum of generator charges over the factors of `m`.
    pub fn charge(&self, m: &Monomial) -> i64 {
        m.factors().iter().map(|f| self.gens[f.gen as usize].charge as i64).sum()
    }

    /// Doubled conformal weight of `m`: generator weights plus one per ∂.
    pub fn conformal_weight2(&self, m: &Monomial) -> i64 {
        m.factors()
            .iter()
            .map(|f| self.gens[f.gen as usize].conf_weight2 + 2 * f.n as i64)
            .sum()
    }

    pub fn conformal_weight(&self, m: &Monomial) -> Rational {
        Rational::new(self.conformal_weight2(m), 2)
    }

    /// The factor `∂^n g` as a monomial.
    pub fn monomial(&self, fs: &[(Generator, u16)]) -> Monomial {
        Monomial::from_factors(&fs.iter().map(|(g, n)| Factor { gen: self.ids[g], n: *n }).collect::<Vec<_>>())
    }

    /// Generator and derivative order of each factor.
    pub fn decode(&self, m: &Monomial) -> Vec<(Generator, u16)> {
        m.factors().iter().map(|f| (self.gens[f.gen as usize].gen, f.n)).collect()
    }
}
