//! Truncated power series over the rationals.

pub mod witt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::RationalFunction;

pub use witt::{ghost_components, ghost_to_witt, witt_add, witt_mul, WittElement};

/// Default truncation order.
pub const DEFAULT_PRECISION: usize = 16;

/// `sum_{k <= N} c_k t^k + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct TruncatedSeries {
    precision: usize,
    #[serde(with = "rational::rational_vec_serde")]
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawSeries {
    precision: usize,
    #[serde(with = "rational::rational_vec_serde")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawSeries> for TruncatedSeries {
    type Error = Error;

    fn try_from(r: RawSeries) -> Result<Self> {
        if r.coeffs.len() > r.precision + 1 {
            return Err(Error::Validation(format!(
                "{} coefficients exceed precision {}",
                r.coeffs.len(),
                r.precision
            )));
        }
        Ok(TruncatedSeries::new(r.coeffs, r.precision))
    }
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to exactly `precision + 1` coefficients.
    pub fn new(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Rational::zero());
        TruncatedSeries { precision, coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(vec![Rational::one()], precision)
    }

    pub fn from_ints(c: &[i64], precision: usize) -> Self {
        Self::new(c.iter().map(|&x| rational::int(x)).collect(), precision)
    }

    /// Taylor expansion of a rational function regular at 0.
    pub fn from_rational_function(f: &RationalFunction, precision: usize) -> Result<Self> {
        Ok(Self::new(f.taylor(precision)?, precision))
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs[..=precision.min(self.precision)].to_vec(), precision.min(self.precision))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.precision.min(o.precision);
        Self::new((0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.precision.min(o.precision);
        Self::new((0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect(), n)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect(), self.precision)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.precision.min(o.precision);
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out, n)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Precondition("series with zero constant term is not a unit".into()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = vec![inv0.clone()];
        for n in 1..=self.precision {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self::new(out, self.precision))
    }

    /// `exp(s)` for `s(0) = 0`, via `n b_n = sum_k k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a zero constant term".into()));
        }
        let mut b: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.precision {
            let s: Rational = (1..=n).map(|k| rational::int(k as i64) * &self.coeffs[k] * &b[n - k]).sum();
            b.push(s / rational::int(n as i64));
        }
        Ok(Self::new(b, self.precision))
    }

    /// `log(s)` for `s(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut a: Vec<Rational> = vec![Rational::zero()];
        for n in 1..=self.precision {
            let mut s = rational::int(n as i64) * &self.coeffs[n];
            for k in 1..n {
                s -= rational::int(k as i64) * &a[k] * &self.coeffs[n - k];
            }
            a.push(s / rational::int(n as i64));
        }
        Ok(Self::new(a, self.precision))
    }
}

/// `exp(s)`; see [`TruncatedSeries::exp`].
pub fn series_exp(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.exp()
}

/// `log(s)`; see [`TruncatedSeries::log`].
pub fn series_log(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn exp_examples() {
        let t = TruncatedSeries::from_ints(&[0, 1], 3);
        assert_eq!(series_exp(&t).unwrap().coeffs(), &[int(1), int(1), frac(1, 2), frac(1, 6)]);
        assert_eq!(series_exp(&TruncatedSeries::zero(4)).unwrap(), TruncatedSeries::one(4));
        let s = TruncatedSeries::new((0..4).map(|n| if n == 0 { int(0) } else { frac(1 + 5i64.pow(n), n as i64) }).collect(), 3);
        assert_eq!(series_exp(&s).unwrap(), TruncatedSeries::from_ints(&[1, 6, 31, 156], 3));
        assert!(matches!(series_exp(&TruncatedSeries::one(2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn log_examples() {
        let geo = TruncatedSeries::from_ints(&[1; 6], 5);
        let expected: Vec<Rational> = (0..6).map(|n| if n == 0 { int(0) } else { frac(1, n) }).collect();
        assert_eq!(series_log(&geo).unwrap().coeffs(), &expected[..]);
        assert_eq!(series_log(&TruncatedSeries::one(3)).unwrap(), TruncatedSeries::zero(3));
        // n-th coefficient of log of the P^1 zeta is (1 + 5^n) / n, by the recurrence
        let l = series_log(&TruncatedSeries::from_ints(&[1, 6, 31, 156], 3)).unwrap();
        for n in 1..4usize {
            assert_eq!(l.coeff(n), &frac(1 + 5i64.pow(n as u32), n as i64));
        }
        assert!(series_log(&TruncatedSeries::zero(2)).is_err());
    }

    #[test]
    fn inverse_and_mixed_precision() {
        let s = TruncatedSeries::from_ints(&[1, -6, 5], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(&inv.coeffs()[..4], &[int(1), int(6), int(31), int(156)]);
        assert_eq!(s.mul(&TruncatedSeries::one(2)).precision(), 2);
    }

    #[test]
    fn json_shape() {
        let s = TruncatedSeries::new(vec![int(1), frac(1, 2)], 2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"precision":2,"coeffs":["1","1/2","0"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"precision":0,"coeffs":["1","2"]}"#).is_err());
    }
}
