//! The big Witt ring `W(Q) = (1 + tQ[[t]], x, *)`.
//!
//! Witt addition is the product of series. Witt multiplication is defined through
//! the ghost map `a -> t d/dt log a = sum gh_n t^n`, which is a ring isomorphism
//! onto `Q^N` with componentwise operations because the coefficients form a
//! `Q`-algebra.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};

/// A series with constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TruncatedSeries", into = "TruncatedSeries")]
pub struct WittElement(TruncatedSeries);

impl TryFrom<TruncatedSeries> for WittElement {
    type Error = Error;

    fn try_from(s: TruncatedSeries) -> Result<Self> {
        WittElement::new(s)
    }
}

impl From<WittElement> for TruncatedSeries {
    fn from(w: WittElement) -> Self {
        w.0
    }
}

impl WittElement {
    pub fn new(s: TruncatedSeries) -> Result<Self> {
        if !s.coeff(0).is_one() {
            return Err(Error::Validation("Witt vectors have constant term 1".into()));
        }
        Ok(WittElement(s))
    }

    /// Additive identity, the series 1.
    pub fn zero(precision: usize) -> Self {
        WittElement(TruncatedSeries::one(precision))
    }

    /// Multiplicative identity `1/(1-t)`, whose ghosts are all 1.
    pub fn one(precision: usize) -> Self {
        WittElement(TruncatedSeries::new(vec![Rational::one(); precision + 1], precision))
    }

    /// `1/(1 - a t)`, ghosts `a^n`.
    pub fn teichmuller(a: &Rational, precision: usize) -> Self {
        let mut c = vec![Rational::one()];
        for k in 1..=precision {
            c.push(&c[k - 1] * a);
        }
        WittElement(TruncatedSeries::new(c, precision))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }
}

/// `a x b`: the product of series.
pub fn witt_add(a: &WittElement, b: &WittElement) -> WittElement {
    WittElement(a.0.mul(&b.0))
}

/// `a * b`: ghost components multiply pointwise.
pub fn witt_mul(a: &WittElement, b: &WittElement) -> WittElement {
    let n = a.precision().min(b.precision());
    let ga = ghost_components(a, n).unwrap();
    let gb = ghost_components(b, n).unwrap();
    let g: Vec<Rational> = ga.iter().zip(&gb).map(|(x, y)| x * y).collect();
    ghost_to_witt(&g)
}

/// `gh_1, ..., gh_{n_max}`, the coefficients of `t d/dt log a`.
pub fn ghost_components(a: &WittElement, n_max: usize) -> Result<Vec<Rational>> {
    if n_max > a.precision() {
        return Err(Error::Precision { requested: n_max, available: a.precision() });
    }
    let l = a.0.log()?;
    Ok((1..=n_max).map(|n| rational::int(n as i64) * l.coeff(n)).collect())
}

/// Inverse of the ghost map: `exp(sum g_n t^n / n)` at precision `g.len()`.
pub fn ghost_to_witt(g: &[Rational]) -> WittElement {
    let mut c = vec![Rational::zero()];
    c.extend(g.iter().enumerate().map(|(i, x)| x / rational::int(i as i64 + 1)));
    WittElement(TruncatedSeries::new(c, g.len()).exp().unwrap())
}
