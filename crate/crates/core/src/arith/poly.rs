// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials in the level `k` over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{ArithError, Rational};

/// Polynomial in `k`; `coeffs[n]` is the coefficient of `k^n`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyK {
    coeffs: Vec<Rational>,
}

impl PolyK {
    pub fn zero() -> Self {
        PolyK { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyK::constant(Rational::one())
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        PolyK::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        PolyK::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        PolyK { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> PolyK {
        if c.is_zero() {
            return PolyK::zero();
        }
        PolyK {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> PolyK {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &PolyK) -> Result<(PolyK, PolyK), ArithError> {
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(ArithError::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return Ok((PolyK::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dlen - 1].inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dlen - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        rem.truncate(dlen - 1);
        Ok((PolyK::from_coeffs(quot), PolyK::from_coeffs(rem)))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, divisor: &PolyK) -> PolyK {
        let (q, r) = self.div_rem(divisor).expect("exact_div by zero");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &PolyK) -> PolyK {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            if b.is_constant() {
                return PolyK::one();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: u32) -> PolyK {
        let mut acc = PolyK::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a PolyK> for &'a PolyK {
    type Output = PolyK;
    fn add(self, rhs: &'a PolyK) -> PolyK {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        PolyK::from_coeffs(out)
    }
}

impl<'a> Sub<&'a PolyK> for &'a PolyK {
    type Output = PolyK;
    fn sub(self, rhs: &'a PolyK) -> PolyK {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PolyK> for &'a PolyK {
    type Output = PolyK;
    fn mul(self, rhs: &'a PolyK) -> PolyK {
        if self.is_zero() || rhs.is_zero() {
            return PolyK::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        PolyK::from_coeffs(out)
    }
}

impl Neg for &PolyK {
    type Output = PolyK;
    fn neg(self) -> PolyK {
        PolyK {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for PolyK {
    /// Sparse `c*k^n` sum, highest degree first: `2*k^2 - k + 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if n == 1 {
                        write!(f, "k")?;
                    } else {
                        write!(f, "k^{n}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PolyK {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('/') {
                if cur.is_empty() {
                    return Err(bad());
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad());
        }
        terms.push((neg, cur));

        let mut acc = PolyK::zero();
        for (neg, term) in terms {
            let (coeff, deg) = match term.find('k') {
                None => (term.parse::<Rational>()?, 0usize),
                Some(pos) => {
                    let head = &term[..pos];
                    let tail = &term[pos + 1..];
                    let coeff = if head.is_empty() {
                        Rational::one()
                    } else {
                        let head = head.strip_suffix('*').ok_or_else(bad)?;
                        head.parse::<Rational>()?
                    };
                    let deg = if tail.is_empty() {
                        1
                    } else {
                        let e = tail.strip_prefix('^').ok_or_else(bad)?;
                        e.parse::<usize>().map_err(|_| bad())?
                    };
                    (coeff, deg)
                }
            };
            let coeff = if neg { -coeff } else { coeff };
            let mut v = vec![Rational::zero(); deg + 1];
            v[deg] = coeff;
            acc = &acc + &PolyK::from_coeffs(v);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyK {
        s.parse().unwrap()
    }

    #[test]
    fn format_parse_round_trip() {
        for s in ["0", "1", "k", "-k", "2*k^2 - k + 1/3", "-1/2*k^3 + 7", "k^4"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("1 + k + k"), p("2*k + 1"));
        assert!("k^".parse::<PolyK>().is_err());
        assert!("2k".parse::<PolyK>().is_err());
    }

    #[test]
    fn gcd_and_division() {
        let a = p("k^2 - 1");
        let b = p("k - 1");
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p("k + 1"));
        assert!(r.is_zero());
        assert_eq!(p("2*k + 2").gcd(&p("2*k + 4")), PolyK::one());
        assert!(a.div_rem(&PolyK::zero()).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("k^2 + 1").eval(&Rational::new(1, 2)), Rational::new(5, 4));
    }
}
