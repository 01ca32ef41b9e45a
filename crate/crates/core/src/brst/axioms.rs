// SPDX-License-Identifier: Apache-2.0

//! λ-calculus axioms on the generators and on random composites of a complex.

use super::check::Check;
use super::complex::Complex;
use crate::calculus::axioms::{
    all_axioms, jacobi, quasi_associativity, quasi_commutativity, random_composites, sesquilinearity, skewsymmetry, wick,
};
use crate::calculus::VAExpr;

impl Complex {
    /// Every axiom on all generator pairs and triples, then on `count`
    /// consecutive triples of seeded random composites.
    pub fn check_lambda_axioms(&self, seed: u64, count: usize) -> Check {
        let mut c = Check::new("calculus");
        let gens: Vec<VAExpr> = self.ca.generators().iter().map(|g| self.ca.gen(g.gen)).collect();
        let names: Vec<&str> = self.ca.generators().iter().map(|g| g.text.as_str()).collect();
        let n = gens.len();
        let mut jobs: Vec<(usize, usize, Option<usize>)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                jobs.push((i, j, None));
                for k in 0..n {
                    jobs.push((i, j, Some(k)));
                }
            }
        }
        let run = |&(i, j, k): &(usize, usize, Option<usize>)| match k {
            None => {
                let mut r = skewsymmetry(&self.ca, &gens[i], &gens[j]);
                r.extend(sesquilinearity(&self.ca, &gens[i], &gens[j]));
                r.extend(quasi_commutativity(&self.ca, &gens[i], &gens[j]));
                (format!("({}, {})", names[i], names[j]), r)
            }
            Some(k) => (
                format!("({}, {}, {})", names[i], names[j], names[k]),
                jacobi(&self.ca, &gens[i], &gens[j], &gens[k])
                    .into_iter()
                    .chain(wick(&self.ca, &gens[i], &gens[j], &gens[k]))
                    .chain(quasi_associativity(&self.ca, &gens[i], &gens[j], &gens[k]))
                    .collect(),
            ),
        };
        let comps = random_composites(&self.ca, seed, count);
        let run_comp = |i: &usize| {
            let (a, b, d) = (&comps[*i], &comps[(i + 1) % count], &comps[(i + 2) % count]);
            (format!("composite #{i}"), all_axioms(&self.ca, a, b, d))
        };
        let idx: Vec<usize> = (0..count).collect();
        #[cfg(feature = "parallel")]
        let (a, b): (Vec<_>, Vec<_>) = {
            use rayon::prelude::*;
            (jobs.par_iter().map(run).collect(), idx.par_iter().map(run_comp).collect())
        };
        #[cfg(not(feature = "parallel"))]
        let (a, b): (Vec<_>, Vec<_>) = (jobs.iter().map(run).collect(), idx.iter().map(run_comp).collect());
        for (label, rs) in a.into_iter().chain(b) {
            for (what, e) in rs {
                c.expr(&self.ca, format!("{label} {what}"), &e);
            }
        }
        c
    }
}
