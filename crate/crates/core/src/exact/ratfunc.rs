//! Rational functions in one variable over the rationals.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` in lowest terms.
///
/// Normal form: when `den(0) != 0` the denominator has constant term 1, which is
/// the natural shape of zeta functions `1 / det(1 - tF)`; otherwise `den` is monic.
/// Two equal functions therefore have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Validation("rational function with zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        let c0 = den.coeff(0);
        let scale = if c0.is_zero() { den.leading().unwrap().recip() } else { c0.recip() };
        RationalFunction { num: num.scale(&scale), den: den.scale(&scale) }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let m = Polynomial::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self::normalized(Polynomial::one(), m)
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `deg num - deg den`; `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    /// The value if this function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.degree() == Some(0) && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        Self::normalized(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction> {
        if o.is_zero() {
            return Err(Error::Validation("division by the zero rational function".into()));
        }
        Ok(Self::normalized(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        Self::normalized(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// `f(1/t)`
    pub fn at_reciprocal(&self) -> RationalFunction {
        let a = self.num.degree().unwrap_or(0);
        let b = self.den.degree().unwrap_or(0);
        let num = self.num.reversed(a);
        let den = self.den.reversed(b);
        if b >= a {
            Self::normalized(num.shift(b - a), den)
        } else {
            Self::normalized(num, den.shift(a - b))
        }
    }

    /// `f(c t)`
    pub fn at_scaled(&self, c: &Rational) -> RationalFunction {
        Self::normalized(self.num.scale_variable(c), self.den.scale_variable(c))
    }

    /// First `n + 1` Taylor coefficients at 0; requires `den(0) != 0`.
    pub fn taylor(&self, n: usize) -> Result<Vec<Rational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Precondition("rational function has a pole at t = 0".into()));
        }
        let d0_inv = d0.recip();
        let den = self.den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                acc -= dj * &out[k - j];
            }
            out.push(acc * &d0_inv);
        }
        Ok(out)
    }

    pub fn eval_complex(&self, t: Complex64) -> (Complex64, Complex64) {
        (self.num.eval_complex(t), self.den.eval_complex(t))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
