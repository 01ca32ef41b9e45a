// SPDX-License-Identifier: Apache-2.0

//! Normalized rational functions of the level `k`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::{ArithError, PolyK, Rational};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunK {
    num: PolyK,
    den: PolyK,
}

/// Arithmetic operations accepted by [`RatFunK::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl Default for RatFunK {
    fn default() -> Self {
        RatFunK::zero()
    }
}

impl RatFunK {
    pub fn zero() -> Self {
        RatFunK {
            num: PolyK::zero(),
            den: PolyK::one(),
        }
    }

    pub fn one() -> Self {
        RatFunK::from_rational(Rational::one())
    }

    pub fn k() -> Self {
        RatFunK::from_poly(PolyK::k())
    }

    pub fn from_int(n: i64) -> Self {
        RatFunK::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFunK {
            num: PolyK::constant(r),
            den: PolyK::one(),
        }
    }

    pub fn from_poly(p: PolyK) -> Self {
        RatFunK {
            num: p,
            den: PolyK::one(),
        }
    }

    /// `k + c`, the shape of every critical-level denominator.
    pub fn k_plus(c: &Rational) -> Self {
        RatFunK::from_poly(PolyK::from_coeffs(vec![c.clone(), Rational::one()]))
    }

    /// Builds the normal form of `num / den`.
    pub fn normalize(num: PolyK, den: PolyK) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunK::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunK { num, den })
    }

    pub fn num(&self) -> &PolyK {
        &self.num
    }

    pub fn den(&self) -> &PolyK {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it does not depend on `k`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    /// Sign of the leading numerator coefficient (zero counts as positive).
    pub fn leading_is_negative(&self) -> bool {
        self.num.leading().is_some_and(Rational::is_negative)
    }

    pub fn scale(&self, c: &Rational) -> RatFunK {
        if c.is_zero() {
            return RatFunK::zero();
        }
        RatFunK {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn checked_inv(&self) -> Result<RatFunK, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RatFunK::normalize(self.den.clone(), self.num.clone())
    }

    pub fn inv(&self) -> RatFunK {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_div(&self, other: &RatFunK) -> Result<RatFunK, ArithError> {
        Ok(self * &other.checked_inv()?)
    }

    /// Dispatches one field operation; `b` is ignored for `Neg`.
    pub fn apply(op: RatOp, a: &RatFunK, b: &RatFunK) -> Result<RatFunK, ArithError> {
        Ok(match op {
            RatOp::Add => a + b,
            RatOp::Sub => a - b,
            RatOp::Mul => a * b,
            RatOp::Div => a.checked_div(b)?,
            RatOp::Neg => -a,
        })
    }

    /// Specializes `k = at`.
    pub fn eval(&self, at: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(ArithError::PoleAtPoint(at.clone()));
        }
        Ok(&self.num.eval(at) / &d)
    }

    pub fn pow(&self, e: u32) -> RatFunK {
        RatFunK {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }
}

impl From<Rational> for RatFunK {
    fn from(r: Rational) -> Self {
        RatFunK::from_rational(r)
    }
}

impl From<i64> for RatFunK {
    fn from(n: i64) -> Self {
        RatFunK::from_int(n)
    }
}

impl<'a> Add<&'a RatFunK> for &'a RatFunK {
    type Output = RatFunK;
    fn add(self, rhs: &'a RatFunK) -> RatFunK {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunK::from_poly(num);
            }
            return RatFunK::normalize(num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunK::normalize(num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl<'a> Sub<&'a RatFunK> for &'a RatFunK {
    type Output = RatFunK;
    fn sub(self, rhs: &'a RatFunK) -> RatFunK {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunK> for &'a RatFunK {
    type Output = RatFunK;
    fn mul(self, rhs: &'a RatFunK) -> RatFunK {
        if self.is_zero() || rhs.is_zero() {
            return RatFunK::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunK::from_poly(&self.num * &rhs.num);
        }
        if rhs.is_polynomial() && rhs.num.is_constant() {
            return self.scale(&rhs.num.constant_term());
        }
        if self.is_polynomial() && self.num.is_constant() {
            return rhs.scale(&self.num.constant_term());
        }
        RatFunK::normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl<'a> Div<&'a RatFunK> for &'a RatFunK {
    type Output = RatFunK;
    fn div(self, rhs: &'a RatFunK) -> RatFunK {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunK {
    type Output = RatFunK;
    fn neg(self) -> RatFunK {
        RatFunK {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunK {
    type Output = RatFunK;
    fn neg(self) -> RatFunK {
        -&self
    }
}

impl Add for RatFunK {
    type Output = RatFunK;
    fn add(self, rhs: RatFunK) -> RatFunK {
        &self + &rhs
    }
}

impl Sub for RatFunK {
    type Output = RatFunK;
    fn sub(self, rhs: RatFunK) -> RatFunK {
        &self - &rhs
    }
}

impl Mul for RatFunK {
    type Output = RatFunK;
    fn mul(self, rhs: RatFunK) -> RatFunK {
        &self * &rhs
    }
}

impl Div for RatFunK {
    type Output = RatFunK;
    fn div(self, rhs: RatFunK) -> RatFunK {
        &self / &rhs
    }
}

impl AddAssign<&RatFunK> for RatFunK {
    fn add_assign(&mut self, rhs: &RatFunK) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num = &self.num + &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl fmt::Display for RatFunK {
    /// `num` alone when the denominator is one, otherwise `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunK {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        // "(num)/(den)" form
        if let Some(rest) = t.strip_prefix('(') {
            if let Some(close) = matching_paren(rest) {
                let num_s = &rest[..close];
                let after = rest[close + 1..].trim();
                if after.is_empty() {
                    return Ok(RatFunK::from_poly(num_s.parse()?));
                }
                let den_s = after
                    .strip_prefix('/')
                    .map(str::trim)
                    .ok_or_else(|| ArithError::Parse(s.to_string()))?;
                let den_s = den_s
                    .strip_prefix('(')
                    .and_then(|d| d.strip_suffix(')'))
                    .unwrap_or(den_s);
                return RatFunK::normalize(num_s.parse()?, den_s.parse()?);
            }
        }
        Ok(RatFunK::from_poly(t.parse()?))
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 1usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunK {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(&r("(k + 1)/(k + 2)") + &r("(1)/(k + 2)"), RatFunK::one());
        assert_eq!(&RatFunK::k() * &r("(1)/(k)"), RatFunK::one());
        assert!((&RatFunK::k() - &RatFunK::k()).is_zero());
    }

    #[test]
    fn normalize_examples() {
        let n = RatFunK::normalize(r("2*k + 2").num().clone(), r("2*k + 4").num().clone()).unwrap();
        assert_eq!(n.to_string(), "(k + 1)/(k + 2)");
        let z = RatFunK::normalize(PolyK::zero(), "k^3 + 1".parse().unwrap()).unwrap();
        assert_eq!(z.num(), &PolyK::zero());
        assert!(z.den().is_one());
        let c = RatFunK::normalize("k^2 - 1".parse().unwrap(), "k - 1".parse().unwrap()).unwrap();
        assert_eq!(c, r("k + 1"));
        assert!(c.is_polynomial());
        assert_eq!(
            RatFunK::normalize(PolyK::one(), PolyK::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn eval_examples() {
        let sl2 = &RatFunK::one() - &(&r("6*k^2 + 12*k + 6") / &r("k + 2"));
        assert_eq!(sl2.eval(&Rational::new(-1, 2)).unwrap(), Rational::zero());
        let crit = r("(1)/(k + 2)");
        assert_eq!(
            crit.eval(&Rational::from_int(-2)),
            Err(ArithError::PoleAtPoint(Rational::from_int(-2)))
        );
        assert_eq!(RatFunK::k().eval(&Rational::new(7, 3)).unwrap(), Rational::new(7, 3));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RatFunK::apply(RatOp::Div, &RatFunK::one(), &RatFunK::zero()),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "k", "(k + 1)/(k + 2)", "(-1/2)/(k^2 + 3*k)"] {
            assert_eq!(r(s).to_string(), s);
        }
    }
}
