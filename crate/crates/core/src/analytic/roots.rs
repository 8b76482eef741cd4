//! Complex roots of rational polynomials with multiplicities.
//!
//! Each squarefree factor is solved by Aberth–Ehrlich iteration and polished by
//! Newton steps; every root is then certified against the exact polynomial.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// A root and its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: usize,
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn aberth(c: &[f64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];
    let radius = 1.0 + c[..n].iter().map(|x| (x / lead).abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-16 {
            return Ok(z);
        }
    }
    let residual_ok = z.iter().all(|&r| horner(c, r).0.norm() < 1e-10 * (1.0 + r.norm()).powi(n as i32));
    if residual_ok {
        Ok(z)
    } else {
        Err(Error::Numeric("root iteration did not converge".into()))
    }
}

fn polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..4 {
        let (p, dp) = horner(c, z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

/// Snaps tiny imaginary parts to `+0.0`, so negative reals have argument `pi`.
fn snap(z: Complex64) -> Complex64 {
    if z.im.abs() <= 1e-12 * z.norm().max(1.0) {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

/// `|p(lambda)| < 1e-8 (1 + |lambda|)^deg`.
pub fn certified(p: &Polynomial, z: Complex64) -> bool {
    let deg = p.degree().unwrap_or(0) as i32;
    let scale = p.coeffs().iter().map(|c| crate::exact::rational::to_f64(c).abs()).fold(0.0, f64::max).max(1.0);
    p.eval_complex(z).norm() / scale < 1e-8 * (1.0 + z.norm()).powi(deg)
}

/// All complex roots of `p`, grouped by multiplicity.
pub fn roots(p: &Polynomial) -> Result<Vec<Root>> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_factors() {
        let c = factor.to_f64_coeffs();
        let found = if c.len() == 2 {
            vec![Complex64::new(-c[0] / c[1], 0.0)]
        } else {
            aberth(&c)?.into_iter().map(|z| polish(&c, z)).collect()
        };
        for z in found {
            let z = snap(z);
            if !certified(&factor, z) || !certified(p, z) {
                return Err(Error::Numeric(format!("root {z} fails the residual bound")));
            }
            out.push(Root { value: z, multiplicity: mult });
        }
    }
    Ok(out)
}
