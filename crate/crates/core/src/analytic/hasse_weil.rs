//! `zeta(f; s) = Z(f; q^{-s})` as a meromorphic, `2 pi i / log q`-periodic function.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{spectral_radius, spectrum, ComplexValue, Eigenvalue};
use crate::error::{Error, Result};
use crate::motive::{zeta_rational, TracedMotive};

/// Principal `log_q` of a nonzero complex number: imaginary part in `]-pi/log q, pi/log q]`.
pub fn principal_log_q(lambda: Complex64, q: f64) -> Complex64 {
    let lq = q.ln();
    Complex64::new(lambda.norm().ln() / lq, lambda.arg() / lq)
}

/// A base point `s` and its translates `s + j * 2 pi i / log q`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticePoint {
    pub base: ComplexValue,
    pub multiplicity: usize,
    pub step_im: f64,
    /// Translates whose imaginary part lies in the requested strip.
    pub in_strip: Vec<ComplexValue>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeromorphicReport {
    pub q: f64,
    pub period_im: f64,
    pub poles: Vec<LatticePoint>,
    pub zeros: Vec<LatticePoint>,
    /// Eigenvalues shared by both blocks, whose pole and zero cancel.
    pub cancelled: Vec<LatticePoint>,
    /// Eigenvalue 0 contributes no pole or zero; counted here.
    pub zero_eigenvalues: usize,
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 1.0) || !q.is_finite() {
        return Err(Error::Validation(format!("q = {q} must exceed 1")));
    }
    Ok(())
}

/// Evaluates the reduced rational zeta function at `t = q^{-s}`.
pub fn hasse_weil_eval(m: &TracedMotive, q: f64, s: Complex64) -> Result<Complex64> {
    check_q(q)?;
    let z = zeta_rational(m);
    let t = (-s * q.ln()).exp();
    let (num, den) = z.eval_complex(t);
    let period = 2.0 * std::f64::consts::PI / q.ln();
    let den_poly_roots = super::roots(z.den())?;
    for r in den_poly_roots {
        // a pole at t = root, i.e. s = -log_q(root)
        let base = -principal_log_q(r.value, q);
        let j = ((s.im - base.im) / period).round();
        let nearest = Complex64::new(base.re, base.im + j * period);
        if (nearest - s).norm() < 1e-9 * (1.0 + s.norm()) {
            return Err(Error::Pole { re: nearest.re, im: nearest.im });
        }
    }
    Ok(num / den)
}

/// `log rho / log q`, the abscissa of absolute convergence; `-inf` when `rho = 0`.
pub fn convergence_abscissa(m: &TracedMotive, q: f64) -> Result<f64> {
    check_q(q)?;
    let rho = spectral_radius(m)?.rho;
    Ok(if rho == 0.0 { f64::NEG_INFINITY } else { rho.ln() / q.ln() })
}

fn lattice(z: Complex64, k: usize, q: f64, strip: (f64, f64)) -> LatticePoint {
    let step = 2.0 * std::f64::consts::PI / q.ln();
    let lo = ((strip.0 - z.im) / step).ceil() as i64;
    let hi = ((strip.1 - z.im) / step).floor() as i64;
    let in_strip = (lo..=hi.min(lo + 10_000)).map(|j| ComplexValue { re: z.re, im: z.im + j as f64 * step }).collect();
    LatticePoint { base: z.into(), multiplicity: k, step_im: step, in_strip }
}

fn remove_common(a: &mut Vec<(Complex64, usize)>, b: &mut Vec<(Complex64, usize)>) -> Vec<(Complex64, usize)> {
    let mut common = Vec::new();
    for x in a.iter_mut() {
        for y in b.iter_mut() {
            if (x.0 - y.0).norm() < 1e-9 * (1.0 + x.0.norm()) {
                let k = x.1.min(y.1);
                if k > 0 {
                    common.push((x.0, k));
                    x.1 -= k;
                    y.1 -= k;
                }
            }
        }
    }
    a.retain(|x| x.1 > 0);
    b.retain(|x| x.1 > 0);
    common
}

/// Poles `s = log_q lambda` for eigenvalues of `F+` and zeros for those of `F-`.
pub fn poles_and_zeros(m: &TracedMotive, q: f64, strip: (f64, f64)) -> Result<MeromorphicReport> {
    check_q(q)?;
    let sp = spectrum(m)?;
    let nonzero = |e: &[Eigenvalue]| -> Vec<(Complex64, usize)> {
        e.iter().filter(|x| x.modulus > 0.0).map(|x| (Complex64::from(x.value), x.multiplicity)).collect()
    };
    let zero_eigenvalues = sp
        .eigenvalues_plus
        .iter()
        .chain(&sp.eigenvalues_minus)
        .filter(|x| x.modulus == 0.0)
        .map(|x| x.multiplicity)
        .sum();
    let mut plus = nonzero(&sp.eigenvalues_plus);
    let mut minus = nonzero(&sp.eigenvalues_minus);
    let common = remove_common(&mut plus, &mut minus);
    let to_points = |v: &[(Complex64, usize)]| -> Vec<LatticePoint> {
        v.iter().map(|&(l, k)| lattice(principal_log_q(l, q), k, q, strip)).collect()
    };
    Ok(MeromorphicReport {
        q,
        period_im: 2.0 * std::f64::consts::PI / q.ln(),
        poles: to_points(&plus),
        zeros: to_points(&minus),
        cancelled: to_points(&common),
        zero_eigenvalues,
    })
}
