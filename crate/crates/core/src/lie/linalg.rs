// SPDX-License-Identifier: Apache-2.0

//! Small dense exact linear algebra over ℚ.

use crate::arith::{PolyK, Rational};

/// Row-major dense matrix.
pub type Matrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn transpose(m: &Matrix) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    let (r, c) = (m.len(), m[0].len());
    (0..c).map(|j| (0..r).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let inner = b.len();
    let m = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(n, m);
    for i in 0..n {
        for (l, blj) in b.iter().enumerate().take(inner) {
            let a_il = &a[i][l];
            if a_il.is_zero() {
                continue;
            }
            for j in 0..m {
                if !blj[j].is_zero() {
                    out[i][j] += &(a_il * &blj[j]);
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, c: &Rational) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(Rational::is_zero))
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    if !m[r][j].is_zero() {
                        let t = &factor * &m[r][j];
                        m[i][j] -= &t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A basis of `{v : m v = 0}`.
pub fn kernel(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    if a.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut v = vec![Rational::zero(); cols];
                v[i] = Rational::one();
                v
            })
            .collect();
    }
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = -&a[r][fc];
            }
            v
        })
        .collect()
}

/// Solves `m x = b`; `None` if inconsistent. Free variables are set to zero.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &pc) in piv.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

/// Characteristic polynomial `det(t I - m)` by Faddeev–LeVerrier.
pub fn char_poly(m: &Matrix) -> PolyK {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = matmul(m, &mk);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -&(&tr / &Rational::from_int(k as i64));
    }
    PolyK::from_coeffs(coeffs)
}

/// Rational roots with multiplicity, found by the rational root theorem on the
/// integer-scaled polynomial.
pub fn rational_roots(p: &PolyK) -> Vec<(Rational, usize)> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    let mut out = Vec::new();
    let mut poly = p.clone();
    // strip zero roots first
    let mut zero_mult = 0;
    while !poly.is_zero() && poly.constant_term().is_zero() {
        let (q, _) = poly.div_rem(&PolyK::k()).expect("k is nonzero");
        poly = q;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    if poly.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut lcm = BigInt::one();
    for c in poly.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = poly
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut ds = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                ds.push(d.clone());
                ds.push(&n / &d);
            }
            d += 1;
        }
        ds
    };
    let a0 = ints.first().cloned().unwrap_or_default();
    let an = ints.last().cloned().unwrap_or_default();
    let mut candidates: Vec<Rational> = Vec::new();
    for pn in divisors(&a0) {
        for qd in divisors(&an) {
            for s in [1i64, -1] {
                let r = Rational::from(num_rational::BigRational::new(&pn * BigInt::from(s), qd.clone()));
                if !candidates.contains(&r) {
                    candidates.push(r);
                }
            }
        }
    }
    candidates.sort();
    for r in candidates {
        let lin = PolyK::from_coeffs(vec![-&r, Rational::one()]);
        let mut mult = 0;
        loop {
            let (q, rem) = poly.div_rem(&lin).expect("nonzero");
            if rem.is_zero() {
                poly = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn inverse_and_solve() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(matmul(&m, &inv), identity(2));
        let x = solve(&m, &[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(inverse(&vec![vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = vec![vec![q(1), q(2), q(3)]];
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&m, &v)[0].is_zero());
        }
    }

    #[test]
    fn characteristic_polynomial_roots() {
        let m = vec![vec![q(2), q(0)], vec![q(1), q(3)]];
        let p = char_poly(&m);
        assert_eq!(p.to_string(), "k^2 - 5*k + 6");
        let roots = rational_roots(&p);
        assert_eq!(roots, vec![(q(2), 1), (q(3), 1)]);
        let sq = char_poly(&vec![vec![q(0), q(2)], vec![q(1), q(0)]]);
        assert!(rational_roots(&sq).is_empty());
    }
}
