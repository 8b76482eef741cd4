//! Rational reconstruction of power series by Berlekamp–Massey over `Q`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::rational::{self, Rational};
use crate::exact::{Polynomial, RationalFunction};
use crate::series::TruncatedSeries;

/// A rational function whose expansion reproduces the input sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionResult {
    pub value: RationalFunction,
    /// Order of the minimal linear recurrence.
    pub order: usize,
    /// Prefix length after which the recurrence never changed.
    pub stabilized_at: usize,
    /// Number of input terms the expansion was verified against.
    pub residual_checked_to: usize,
    /// `deg(num) - deg(den)` of the reduced fraction.
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Reconstruction {
    Stabilized(ReconstructionResult),
    NotStabilized { profile: Vec<usize> },
}

impl Reconstruction {
    pub fn stabilized(&self) -> Option<&ReconstructionResult> {
        match self {
            Reconstruction::Stabilized(r) => Some(r),
            Reconstruction::NotStabilized { .. } => None,
        }
    }
}

struct BmRun {
    connection: Vec<Rational>,
    order: usize,
    profile: Vec<usize>,
    last_change: Option<usize>,
}

fn run(seq: &[Rational]) -> BmRun {
    let mut c = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    let (mut l, mut m) = (0usize, 1usize);
    let mut last_b = Rational::one();
    let mut profile = Vec::with_capacity(seq.len());
    let mut last_change = None;
    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d += &c[i] * &seq[n - i];
        }
        if d.is_zero() {
            m += 1;
        } else {
            last_change = Some(n);
            let coef = &d / &last_b;
            let prev = c.clone();
            if c.len() < b.len() + m {
                c.resize(b.len() + m, Rational::zero());
            }
            for (i, bi) in b.iter().enumerate() {
                c[i + m] -= &coef * bi;
            }
            if 2 * l <= n {
                l = n + 1 - l;
                b = prev;
                last_b = d;
                m = 1;
            } else {
                m += 1;
            }
        }
        profile.push(l);
    }
    c.resize(l + 1, Rational::zero());
    BmRun { connection: c, order: l, profile, last_change }
}

/// Minimal recurrence order after each prefix.
pub fn linear_complexity_profile(seq: &[Rational]) -> Vec<usize> {
    run(seq).profile
}

/// Finds the minimal recurrence and the rational function with Taylor coefficients `seq`.
///
/// The result is accepted only when the order is at most `len/2` and the last
/// `ceil(len/4)` terms produced no discrepancy.
pub fn berlekamp_massey(seq: &[Rational]) -> Reconstruction {
    let len = seq.len();
    let bm = run(seq);
    let tail = len.div_ceil(4);
    let settled = bm.last_change.is_none_or(|k| k + tail < len);
    if len == 0 || bm.order > len / 2 || !settled {
        return Reconstruction::NotStabilized { profile: bm.profile };
    }
    let den = Polynomial::new(bm.connection.clone());
    let num: Vec<Rational> = (0..bm.order)
        .map(|k| (0..=k).map(|i| &bm.connection[i] * &seq[k - i]).sum())
        .collect();
    let value = RationalFunction::new(Polynomial::new(num), den).expect("connection polynomial has constant term 1");
    let check = value.taylor(len - 1).expect("denominator is a unit at 0");
    if check != seq {
        return Reconstruction::NotStabilized { profile: bm.profile };
    }
    let degree = value.degree().unwrap_or(0);
    Reconstruction::Stabilized(ReconstructionResult {
        value,
        order: bm.order,
        stabilized_at: bm.last_change.map_or(0, |k| k + 1),
        residual_checked_to: len,
        degree,
    })
}

/// `exp(sum_{n>=1} traces_n t^n / n)` to precision `len(traces)`.
pub fn traces_to_series(traces: &[Rational]) -> TruncatedSeries {
    let mut c = vec![Rational::zero()];
    c.extend(traces.iter().enumerate().map(|(i, x)| x / rational::int(i as i64 + 1)));
    TruncatedSeries::new(c, traces.len()).exp().expect("constant term is zero")
}

/// Reconstructs `Z(t) = exp(sum traces_n t^n / n)` from traces indexed from `n = 1`.
pub fn traces_to_zeta(traces: &[Rational]) -> Reconstruction {
    berlekamp_massey(traces_to_series(traces).coeffs())
}
