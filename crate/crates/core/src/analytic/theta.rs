//! Logarithms of the blocks via the multiplicative Jordan decomposition, and the
//! closed-form regularized determinant quotient.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::hasse_weil::hasse_weil_eval;
use super::{roots, ComplexValue};
use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::exact::{Polynomial, RatMatrix};
use crate::motive::TracedMotive;

/// Where the argument of a negative real eigenvalue lands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchWindow {
    /// `]-pi, pi]`, so `arg(-5) = pi`.
    #[default]
    Principal,
    /// `[-pi, pi[`, so `arg(-5) = -pi`. Wrong; kept to exercise the checks.
    LowerClosed,
}

impl BranchWindow {
    fn arg(self, z: Complex64) -> f64 {
        let a = z.arg();
        match self {
            BranchWindow::Principal if a == -PI => PI,
            BranchWindow::LowerClosed if a == PI => -PI,
            _ => a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogEigen {
    pub lambda: ComplexValue,
    /// `log_q lambda` on the chosen branch.
    pub z: ComplexValue,
    pub arg: f64,
    pub multiplicity: usize,
}

/// Jordan–Chevalley data of one block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockLog {
    pub eigen: Vec<LogEigen>,
    pub semisimple: RatMatrix,
    /// `log` of the unipotent part (divide by `ln q` for `log_q`).
    pub log_unipotent: RatMatrix,
    /// Jordan block sizes of the nilpotent part `M - S`.
    pub jordan_blocks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaData {
    pub q: f64,
    pub window: BranchWindow,
    pub plus: BlockLog,
    pub minus: BlockLog,
    /// Eigenvalues with `Im z = +-pi/log q`.
    pub boundary_eigenvalues: usize,
    /// `q^z` reproduces every eigenvalue within `1e-9`.
    pub reproduces: bool,
    /// Every `Im z` lies in `]-pi/log q, pi/log q]`.
    pub on_principal_branch: bool,
}

fn eval_matrix(p: &Polynomial, m: &RatMatrix) -> RatMatrix {
    let n = m.rows();
    p.coeffs().iter().rev().fold(RatMatrix::zeros(n, n), |acc, c| {
        acc.mul(m).unwrap().add(&RatMatrix::identity(n).scale(c)).unwrap()
    })
}

/// Semisimple part by Newton iteration `S <- S - P(S) P'(S)^{-1}` with `P` the
/// squarefree part of the characteristic polynomial.
pub fn semisimple_part(m: &RatMatrix) -> Result<RatMatrix> {
    let p = m.char_poly()?.squarefree_part();
    let dp = p.derivative();
    let mut s = m.clone();
    for _ in 0..64 {
        let ps = eval_matrix(&p, &s);
        if ps.is_zero() {
            return Ok(s);
        }
        s = s.sub(&ps.mul(&eval_matrix(&dp, &s).inverse()?)?)?;
    }
    Err(Error::Numeric("Jordan-Chevalley iteration did not terminate".into()))
}

fn jordan_blocks(nil: &RatMatrix) -> Vec<usize> {
    let n = nil.rows();
    let mut ranks = vec![n];
    let mut p = RatMatrix::identity(n);
    for _ in 0..n {
        p = p.mul(nil).unwrap();
        ranks.push(p.rank());
    }
    ranks.push(0);
    let mut out = Vec::new();
    for k in 1..=n {
        let at_least = |k: usize| ranks[k - 1] - ranks[k];
        let exact = at_least(k) - at_least(k + 1).min(at_least(k));
        out.extend(std::iter::repeat_n(k, exact));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn block_log(m: &RatMatrix, q: f64, window: BranchWindow) -> Result<BlockLog> {
    let n = m.rows();
    if m.det()?.is_zero() {
        return Err(Error::NotInvertible("theta needs invertible blocks".into()));
    }
    let s = semisimple_part(m)?;
    let x = s.inverse()?.mul(m)?.sub(&RatMatrix::identity(n))?;
    let mut log = RatMatrix::zeros(n, n);
    let mut pw = RatMatrix::identity(n);
    for k in 1..=n {
        pw = pw.mul(&x)?;
        if pw.is_zero() {
            break;
        }
        let c = Rational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
        log = log.add(&pw.scale(&c))?;
    }
    let lq = q.ln();
    let eigen = roots(&m.char_poly()?)?
        .into_iter()
        .map(|r| {
            let arg = window.arg(r.value);
            LogEigen {
                lambda: r.value.into(),
                z: ComplexValue { re: r.value.norm().ln() / lq, im: arg / lq },
                arg,
                multiplicity: r.multiplicity,
            }
        })
        .collect();
    Ok(BlockLog { eigen, semisimple: s.clone(), log_unipotent: log, jordan_blocks: jordan_blocks(&m.sub(&s)?) })
}

/// `Theta+- = log_q(theta_s) + log_q(theta_u)` for both blocks.
pub fn theta_construction(m: &TracedMotive, q: f64, window: BranchWindow) -> Result<ThetaData> {
    if !(q > 1.0) {
        return Err(Error::Validation(format!("q = {q} must exceed 1")));
    }
    let plus = block_log(m.f_plus(), q, window)?;
    let minus = block_log(m.f_minus(), q, window)?;
    let all = || plus.eigen.iter().chain(&minus.eigen);
    let boundary_eigenvalues = all().filter(|e| e.arg.abs() == PI).map(|e| e.multiplicity).sum();
    let reproduces = all().all(|e| {
        let back = (Complex64::from(e.z) * q.ln()).exp();
        (back - Complex64::from(e.lambda)).norm() <= 1e-9 * (1.0 + e.lambda.re.hypot(e.lambda.im))
    });
    let on_principal_branch = all().all(|e| e.arg > -PI && e.arg <= PI);
    Ok(ThetaData { q, window, plus, minus, boundary_eigenvalues, reproduces, on_principal_branch })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegDetSample {
    pub s: ComplexValue,
    pub closed_form: ComplexValue,
    pub direct: ComplexValue,
    pub relative_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegDetReport {
    pub passed: bool,
    pub values_agree: bool,
    pub branch_ok: bool,
    pub boundary_eigenvalues: usize,
    pub max_relative_error: f64,
    pub samples: Vec<RegDetSample>,
}

fn det_inf(e: &[LogEigen], s: Complex64, q: f64) -> Complex64 {
    e.iter().fold(Complex64::one(), |acc, x| {
        let f = Complex64::one() - ((Complex64::from(x.z) - s) * q.ln()).exp();
        acc * f.powu(x.multiplicity as u32)
    })
}

/// Compares `det_inf(s - Theta_odd) / det_inf(s - Theta_even)`, with the per-eigenvalue
/// factor `1 - q^{z-s}`, against `zeta(f; s)`, and checks the Θ branch invariants.
pub fn regularized_det_check(m: &TracedMotive, q: f64, samples: &[Complex64], window: BranchWindow) -> Result<RegDetReport> {
    let theta = theta_construction(m, q, window)?;
    let mut out = Vec::with_capacity(samples.len());
    let mut worst = 0.0f64;
    for &s in samples {
        let direct = hasse_weil_eval(m, q, s)?;
        let closed = det_inf(&theta.minus.eigen, s, q) / det_inf(&theta.plus.eigen, s, q);
        let err = (closed - direct).norm() / direct.norm().max(1e-300);
        worst = worst.max(err);
        out.push(RegDetSample { s: s.into(), closed_form: closed.into(), direct: direct.into(), relative_error: err });
    }
    let values_agree = worst <= 1e-9;
    let branch_ok = theta.reproduces && theta.on_principal_branch;
    Ok(RegDetReport {
        passed: values_agree && branch_ok,
        values_agree,
        branch_ok,
        boundary_eigenvalues: theta.boundary_eigenvalues,
        max_relative_error: worst,
        samples: out,
    })
}

/// Exact rational view used by tests: `S` commutes with `M` and `M - S` is nilpotent.
pub fn is_jordan_chevalley(m: &RatMatrix, s: &RatMatrix) -> bool {
    let n = m.rows();
    let nil = m.sub(s).unwrap();
    let commutes = m.mul(s).unwrap() == s.mul(m).unwrap();
    commutes && nil.pow(n.max(1) as u32).unwrap().is_zero() && eval_matrix(&s.char_poly().unwrap().squarefree_part(), s).is_zero()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn m(plus: &[&[i64]], minus: &[&[i64]]) -> TracedMotive {
        TracedMotive::new(RatMatrix::from_int_rows(plus), RatMatrix::from_int_rows(minus)).unwrap()
    }

    #[test]
    fn logs_of_diagonal() {
        let t = theta_construction(&m(&[&[1, 0], &[0, 5]], &[]), 5.0, BranchWindow::Principal).unwrap();
        let mut z: Vec<f64> = t.plus.eigen.iter().map(|e| e.z.re).collect();
        z.sort_by(f64::total_cmp);
        assert!(z[0].abs() < 1e-15 && (z[1] - 1.0).abs() < 1e-15);
        assert!(t.reproduces && t.on_principal_branch);
    }

    #[test]
    fn negative_eigenvalue_branch() {
        let t = theta_construction(&m(&[&[-5]], &[]), 5.0, BranchWindow::Principal).unwrap();
        let z = t.plus.eigen[0].z;
        assert!((z.re - 1.0).abs() < 1e-15);
        assert!((z.im - PI / 5f64.ln()).abs() < 1e-15);
        assert_eq!(t.boundary_eigenvalues, 1);
        let w = theta_construction(&m(&[&[-5]], &[]), 5.0, BranchWindow::LowerClosed).unwrap();
        assert!(w.plus.eigen[0].z.im < 0.0);
        assert!(!w.on_principal_branch);
    }

    #[test]
    fn unipotent_block() {
        let u = RatMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let t = theta_construction(&TracedMotive::new(u.clone(), RatMatrix::empty()).unwrap(), 5.0, BranchWindow::Principal).unwrap();
        assert_eq!(t.plus.semisimple, RatMatrix::identity(2));
        assert!(!t.plus.log_unipotent.is_zero());
        assert_eq!(t.plus.jordan_blocks, vec![2]);
        let mixed = RatMatrix::from_int_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let s = semisimple_part(&mixed).unwrap();
        assert!(is_jordan_chevalley(&mixed, &s));
        assert_eq!(s, RatMatrix::from_int_rows(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]));
    }

    #[test]
    fn regularized_determinant() {
        let p1 = m(&[&[1, 0], &[0, 5]], &[]);
        let samples = [Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.7), Complex64::new(3.0, -1.1)];
        assert!(regularized_det_check(&p1, 5.0, &samples, BranchWindow::Principal).unwrap().passed);
        let empty = regularized_det_check(&TracedMotive::empty(), 5.0, &samples, BranchWindow::Principal).unwrap();
        assert!(empty.passed);
        let neg = m(&[&[-5]], &[&[3]]);
        assert!(regularized_det_check(&neg, 5.0, &samples, BranchWindow::Principal).unwrap().passed);
        let wrong = regularized_det_check(&neg, 5.0, &samples, BranchWindow::LowerClosed).unwrap();
        assert!(wrong.values_agree && !wrong.branch_ok && !wrong.passed);
    }
}
