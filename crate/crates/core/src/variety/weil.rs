//! Rationality, functional equation and Riemann-hypothesis checks from point counts.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::count::{count_points_with, CountConfig};
use super::VarietySpec;
use crate::analytic::{roots, ComplexValue};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::RationalFunction;
use crate::reconstruct::{traces_to_zeta, Reconstruction};

/// `Z(1/(q^d t)) = c t^E Z(t)` with `c^2 = q^{dE}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalEquationVerdict {
    pub holds: bool,
    /// Sign of `c`, or 0 when the quotient is not a constant.
    pub sign: i8,
    pub constant: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReciprocalRoot {
    pub value: ComplexValue,
    pub modulus: f64,
    pub multiplicity: usize,
    /// `i` with `|alpha|` closest to `q^{i/2}`.
    pub weight: u32,
    pub deviation: f64,
    /// Whether the root sits in the numerator (odd weight expected for curves).
    pub numerator: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RiemannHypothesis {
    pub holds: bool,
    pub tolerance: f64,
    pub reciprocal_roots: Vec<ReciprocalRoot>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeilReport {
    pub label: Option<String>,
    pub q: u64,
    pub dim: u32,
    pub counts: Vec<u64>,
    pub stabilized: bool,
    pub zeta: Option<RationalFunction>,
    pub profile: Option<Vec<usize>>,
    /// `E = -deg Z`.
    pub euler_characteristic: Option<i64>,
    pub functional_equation: Option<FunctionalEquationVerdict>,
    pub riemann_hypothesis: Option<RiemannHypothesis>,
    /// Smoothness and properness are user assertions, recorded here.
    pub smooth_asserted: bool,
    /// Fixed points of Frobenius are transversal on smooth varieties; without the
    /// assertion the counts may not be Lefschetz numbers.
    pub transversality_warning: bool,
}

pub const RH_TOLERANCE: f64 = 1e-9;

/// Compares `Z(1/(q^d t))` with `t^E Z(t)` exactly.
pub fn functional_equation(z: &RationalFunction, q: u64, dim: u32, e: i64) -> Result<FunctionalEquationVerdict> {
    let qd = rational::from_bigint(num_bigint::BigInt::from(q).pow(dim));
    let lhs = z.at_reciprocal().at_scaled(&qd);
    let rhs = RationalFunction::t_pow(e).mul(z);
    let Some(c) = lhs.div(&rhs)?.as_constant() else {
        return Ok(FunctionalEquationVerdict { holds: false, sign: 0, constant: None });
    };
    let de = dim as i64 * e;
    let target = if de >= 0 {
        rational::from_bigint(num_bigint::BigInt::from(q).pow(de as u32))
    } else {
        rational::from_bigint(num_bigint::BigInt::from(q).pow((-de) as u32)).recip()
    };
    let sign = if c.is_zero() { 0 } else if c.is_positive() { 1 } else { -1 };
    Ok(FunctionalEquationVerdict { holds: &c * &c == target, sign, constant: Some(rational::format_rational(&c)) })
}

/// Reciprocal roots of numerator and denominator against the grid `q^{i/2}`, `0 <= i <= 2 dim`.
pub fn riemann_hypothesis(z: &RationalFunction, q: u64, dim: u32) -> Result<RiemannHypothesis> {
    let mut out = Vec::new();
    let lq = (q as f64).ln();
    for (poly, numerator) in [(z.num(), true), (z.den(), false)] {
        let Some(d) = poly.degree() else { continue };
        if !poly.coeff(0).is_one() {
            return Err(Error::Precondition("zeta function must have constant term 1".into()));
        }
        for r in roots(&poly.reversed(d))? {
            let modulus = r.value.norm();
            let w = (2.0 * modulus.ln() / lq).round().clamp(0.0, 2.0 * dim as f64) as u32;
            let deviation = (modulus - (q as f64).powf(w as f64 / 2.0)).abs();
            out.push(ReciprocalRoot { value: r.value.into(), modulus, multiplicity: r.multiplicity, weight: w, deviation, numerator });
        }
    }
    Ok(RiemannHypothesis {
        holds: out.iter().all(|r| r.deviation <= RH_TOLERANCE),
        tolerance: RH_TOLERANCE,
        reciprocal_roots: out,
    })
}

/// Counts `#X(F_{q^n})` for `n <= n_max`, reconstructs `Z_X` and checks the Weil statements.
pub fn weil_check(v: &VarietySpec, dim: u32, n_max: u32, cfg: &CountConfig) -> Result<WeilReport> {
    let counts = (1..=n_max).map(|n| count_points_with(v, n, cfg)).collect::<Result<Vec<u64>>>()?;
    let traces: Vec<Rational> = counts.iter().map(|&c| rational::int(c as i64)).collect();
    let q = v.q();
    let mut report = WeilReport {
        label: v.label.clone(),
        q,
        dim,
        counts,
        stabilized: false,
        zeta: None,
        profile: None,
        euler_characteristic: None,
        functional_equation: None,
        riemann_hypothesis: None,
        smooth_asserted: v.smooth,
        transversality_warning: !v.smooth,
    };
    match traces_to_zeta(&traces) {
        Reconstruction::NotStabilized { profile } => report.profile = Some(profile),
        Reconstruction::Stabilized(r) => {
            let e = -r.degree;
            report.stabilized = true;
            report.euler_characteristic = Some(e);
            report.functional_equation = Some(functional_equation(&r.value, q, dim, e)?);
            report.riemann_hypothesis = Some(riemann_hypothesis(&r.value, q, dim)?);
            report.zeta = Some(r.value);
        }
    }
    Ok(report)
}
