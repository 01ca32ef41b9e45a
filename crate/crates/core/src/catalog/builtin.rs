// SPDX-License-Identifier: Apache-2.0

//! Built-in algebras. Matrix superalgebras are generated from elementary
//! matrices with the supercommutator; the orthosymplectic entry is tabulated.

use crate::arith::Rational;
use crate::lie::{linalg, BasisElement, BracketEntry, FormEntry, LieError, Parity, SuperAlgebra, Vector};

pub const BUILTIN_NAMES: [&str; 7] = [
    "sl2-principal",
    "sl3-principal",
    "sl3-minimal",
    "sl4-minimal",
    "osp12-principal",
    "sl21-minimal",
    "gl22-principal",
];

type SqMat = Vec<Vec<Rational>>;

/// `gl(m|n)` supermatrices: indices `< m` are even.
struct Super {
    m: usize,
    size: usize,
}

impl Super {
    fn idx_parity(&self, i: usize) -> u8 {
        u8::from(i >= self.m)
    }

    fn unit(&self, i: usize, j: usize) -> SqMat {
        let mut a = linalg::zeros(self.size, self.size);
        a[i][j] = Rational::one();
        a
    }

    fn diag(&self, d: &[Rational]) -> SqMat {
        let mut a = linalg::zeros(self.size, self.size);
        for (i, c) in d.iter().enumerate() {
            a[i][i] = c.clone();
        }
        a
    }

    fn parity(&self, a: &SqMat) -> u8 {
        for i in 0..self.size {
            for j in 0..self.size {
                if !a[i][j].is_zero() {
                    return (self.idx_parity(i) + self.idx_parity(j)) % 2;
                }
            }
        }
        0
    }

    fn str(&self, a: &SqMat) -> Rational {
        (0..self.size)
            .map(|i| if self.idx_parity(i) == 0 { a[i][i].clone() } else { -&a[i][i] })
            .sum()
    }

    fn supercommutator(&self, a: &SqMat, b: &SqMat) -> SqMat {
        let ab = linalg::matmul(a, b);
        let ba = linalg::matmul(b, a);
        let s = if self.parity(a) * self.parity(b) == 1 { Rational::one() } else { -Rational::one() };
        linalg::mat_add(&ab, &linalg::mat_scale(&ba, &s))
    }
}

fn flatten(a: &SqMat) -> Vec<Rational> {
    a.iter().flatten().cloned().collect()
}

/// Coordinates of `target` in the span of `basis`.
fn coords(basis: &[SqMat], target: &SqMat) -> Option<Vector> {
    let cols: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
    let t = flatten(target);
    let m: linalg::Matrix = (0..t.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let x = linalg::solve(&m, &t)?;
    // solve() fixes free variables to zero, so confirm exactness
    let back: Vec<Rational> = linalg::mat_vec(&m, &x);
    (back == t).then_some(x)
}

struct MatrixSpec<'a> {
    name: &'a str,
    even: usize,
    size: usize,
    basis: Vec<(String, SqMat)>,
    x: SqMat,
    f: SqMat,
    identity: bool,
}

fn matrix_algebra(spec: MatrixSpec<'_>) -> Result<SuperAlgebra, LieError> {
    let sm = Super { m: spec.even, size: spec.size };
    let mats: Vec<SqMat> = spec.basis.iter().map(|(_, a)| a.clone()).collect();
    let n = mats.len();
    let malformed = |what: &str| LieError::MalformedTable(format!("{}: {what} not in the span", spec.name));
    let mut brackets = Vec::new();
    let mut form = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = sm.supercommutator(&mats[i], &mats[j]);
            let v = coords(&mats, &c).ok_or_else(|| malformed("bracket"))?;
            let terms: Vec<(usize, Rational)> =
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if !terms.is_empty() {
                brackets.push(BracketEntry { i, j, terms });
            }
            let value = sm.str(&linalg::matmul(&mats[i], &mats[j]));
            if !value.is_zero() {
                form.push(FormEntry { i, j, value });
            }
        }
    }
    let basis = spec
        .basis
        .iter()
        .map(|(name, a)| BasisElement { name: name.clone(), parity: Parity::from_bit(sm.parity(a)) })
        .collect();
    let x = coords(&mats, &spec.x).ok_or_else(|| malformed("x"))?;
    let f = coords(&mats, &spec.f).ok_or_else(|| malformed("f"))?;
    let identity = if spec.identity {
        Some(coords(&mats, &sm.diag(&vec![Rational::one(); spec.size])).ok_or_else(|| malformed("identity"))?)
    } else {
        None
    };
    SuperAlgebra::new(spec.name, basis, brackets, form, x, f, identity)
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

/// `sl_n` basis: positive root vectors, Cartan `h_i = E_ii - E_{i+1,i+1}`,
/// negative root vectors.
fn sl_basis(sm: &Super, n: usize) -> Vec<(String, SqMat)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((format!("e{}{}", i + 1, j + 1), sm.unit(i, j)));
        }
    }
    for i in 0..n - 1 {
        let mut d = vec![Rational::zero(); n];
        d[i] = Rational::one();
        d[i + 1] = -Rational::one();
        out.push((format!("h{}", i + 1), sm.diag(&d)));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push((format!("e{}{}", j + 1, i + 1), sm.unit(j, i)));
        }
    }
    out
}

fn sl2_principal() -> Result<SuperAlgebra, LieError> {
    let sm = Super { m: 2, size: 2 };
    let basis = vec![
        ("e".to_string(), sm.unit(0, 1)),
        ("h".to_string(), sm.diag(&[q(1, 1), q(-1, 1)])),
        ("f".to_string(), sm.unit(1, 0)),
    ];
    matrix_algebra(MatrixSpec {
        name: "sl2-principal",
        even: 2,
        size: 2,
        basis,
        x: sm.diag(&[q(1, 2), q(-1, 2)]),
        f: sm.unit(1, 0),
        identity: false,
    })
}

fn sl_n(name: &str, n: usize, x: &[Rational], f: &[(usize, usize)]) -> Result<SuperAlgebra, LieError> {
    let sm = Super { m: n, size: n };
    let mut fm = linalg::zeros(n, n);
    for &(i, j) in f {
        fm[i][j] = Rational::one();
    }
    matrix_algebra(MatrixSpec {
        name,
        even: n,
        size: n,
        basis: sl_basis(&sm, n),
        x: sm.diag(x),
        f: fm,
        identity: false,
    })
}

fn sl21_minimal() -> Result<SuperAlgebra, LieError> {
    let sm = Super { m: 2, size: 3 };
    let mut basis = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (2, 1)] {
        basis.push((format!("e{}{}", i + 1, j + 1), sm.unit(i, j)));
    }
    basis.push(("h".to_string(), sm.diag(&[q(1, 1), q(-1, 1), q(0, 1)])));
    basis.push(("z".to_string(), sm.diag(&[q(0, 1), q(1, 1), q(1, 1)])));
    for (i, j) in [(1, 0), (2, 0), (1, 2)] {
        basis.push((format!("e{}{}", i + 1, j + 1), sm.unit(i, j)));
    }
    matrix_algebra(MatrixSpec {
        name: "sl21-minimal",
        even: 2,
        size: 3,
        basis,
        x: sm.diag(&[q(1, 2), q(-1, 2), q(0, 1)]),
        f: sm.unit(1, 0),
        identity: false,
    })
}

fn gl22_principal() -> Result<SuperAlgebra, LieError> {
    let sm = Super { m: 2, size: 4 };
    let x = sm.diag(&[q(1, 2), q(-1, 2), q(1, 2), q(-1, 2)]);
    let mut basis = Vec::new();
    // order by ad x degree, then position
    let deg = |i: usize, j: usize| &x[i][i] - &x[j][j];
    let mut pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).collect();
    pairs.sort_by(|a, b| deg(b.0, b.1).cmp(&deg(a.0, a.1)).then(a.cmp(b)));
    for (i, j) in pairs {
        basis.push((format!("e{}{}", i + 1, j + 1), sm.unit(i, j)));
    }
    let mut f = sm.unit(1, 0);
    f[3][2] = Rational::one();
    matrix_algebra(MatrixSpec {
        name: "gl22-principal",
        even: 2,
        size: 4,
        basis,
        x,
        f,
        identity: true,
    })
}

fn osp12_principal() -> Result<SuperAlgebra, LieError> {
    // basis: E, e, h, f, F  (E, F odd)
    let names = [("E", Parity::Odd), ("e", Parity::Even), ("h", Parity::Even), ("f", Parity::Even), ("F", Parity::Odd)];
    let (ie, ee, h, ff, iff) = (0usize, 1usize, 2usize, 3usize, 4usize);
    let r = |n: i64| Rational::from_int(n);
    let mut table: Vec<(usize, usize, Vec<(usize, Rational)>)> = Vec::new();
    let mut put = |i: usize, j: usize, terms: Vec<(usize, Rational)>, sign: i64| {
        table.push((i, j, terms.clone()));
        if i != j {
            table.push((j, i, terms.into_iter().map(|(k, c)| (k, &c * &r(-sign))).collect()));
        }
    };
    // even-even and even-odd are antisymmetric (sign 1), odd-odd symmetric (sign -1)
    put(h, ee, vec![(ee, r(2))], 1);
    put(h, ff, vec![(ff, r(-2))], 1);
    put(ee, ff, vec![(h, r(1))], 1);
    put(h, ie, vec![(ie, r(1))], 1);
    put(h, iff, vec![(iff, r(-1))], 1);
    put(ee, iff, vec![(ie, r(-1))], 1);
    put(ff, ie, vec![(iff, r(-1))], 1);
    put(ie, ie, vec![(ee, r(2))], -1);
    put(iff, iff, vec![(ff, r(-2))], -1);
    put(ie, iff, vec![(h, r(1))], -1);
    let brackets = table
        .into_iter()
        .map(|(i, j, terms)| BracketEntry { i, j, terms })
        .collect();
    let form = vec![
        FormEntry { i: h, j: h, value: r(2) },
        FormEntry { i: ee, j: ff, value: r(1) },
        FormEntry { i: ff, j: ee, value: r(1) },
        FormEntry { i: ie, j: iff, value: r(2) },
        FormEntry { i: iff, j: ie, value: r(-2) },
    ];
    let basis = names
        .iter()
        .map(|(n, p)| BasisElement { name: n.to_string(), parity: *p })
        .collect();
    let mut x = vec![Rational::zero(); 5];
    x[h] = q(1, 2);
    let mut f = vec![Rational::zero(); 5];
    f[ff] = r(1);
    SuperAlgebra::new("osp12-principal", basis, brackets, form, x, f, None)
}

/// The algebra (with `x` and `f`) of a named catalog entry.
pub fn builtin_algebra(name: &str) -> Option<Result<SuperAlgebra, LieError>> {
    let half = q(1, 2);
    let mhalf = q(-1, 2);
    let zero = Rational::zero();
    Some(match name {
        "sl2-principal" => sl2_principal(),
        "sl3-principal" => sl_n(name, 3, &[q(1, 1), zero, q(-1, 1)], &[(1, 0), (2, 1)]),
        "sl3-minimal" => sl_n(name, 3, &[half, zero, mhalf], &[(2, 0)]),
        "sl4-minimal" => sl_n(name, 4, &[half, zero.clone(), zero, mhalf], &[(3, 0)]),
        "osp12-principal" => osp12_principal(),
        "sl21-minimal" => sl21_minimal(),
        "gl22-principal" => gl22_principal(),
        _ => return None,
    })
}
