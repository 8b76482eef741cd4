//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, format_rational, Rational};
use crate::error::{Error, Result};

/// Polynomial with ascending-degree coefficients; never carries a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `t - r`
    pub fn linear_root(r: Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// `t^n * p(1/t)` for `n >= deg p`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n));
        let mut v = vec![Rational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Self::new(v)
    }

    /// `p(c t)`
    pub fn scale_variable(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &pow);
            pow *= c;
        }
        Self::new(v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + rational::to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Validation("polynomial division by zero".into()))?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).unwrap().0.monic()
    }

    /// Yun's squarefree factorisation: `(factor, multiplicity)` pairs, factors monic.
    pub fn squarefree_factors(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).unwrap().0;
        let mut c = fp.div_rem(&a0).unwrap().0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).unwrap().0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).unwrap().0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = format_rational(c);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, body.as_str()) {
                (0, b) => write!(f, "{b}")?,
                (1, "1") => write!(f, "t")?,
                (1, b) => write!(f, "{b}*t")?,
                (k, "1") => write!(f, "t^{k}")?,
                (k, b) => write!(f, "{b}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::rational_vec_serde::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        rational::rational_vec_serde::deserialize(d).map(Polynomial::new)
    }
}
