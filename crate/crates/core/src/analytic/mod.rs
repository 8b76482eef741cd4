//! Spectra, growth rates, Hasse–Weil evaluation and the Θ construction.

pub mod hasse_weil;
pub mod roots;
pub mod theta;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::exact::rational::{self, Rational};
use crate::exact::Polynomial;
use crate::motive::{trace_sequence, TracedMotive};
use crate::Result;

pub use hasse_weil::{convergence_abscissa, hasse_weil_eval, poles_and_zeros, LatticePoint, MeromorphicReport};
pub use roots::{roots, Root};
pub use theta::{regularized_det_check, theta_construction, BranchWindow, RegDetReport, ThetaData};

/// Serialized complex number.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: ComplexValue,
    pub modulus: f64,
    pub multiplicity: usize,
}

/// Eigenvalues of both blocks, with the exact polynomials they solve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexSpectrum {
    pub eigenvalues_plus: Vec<Eigenvalue>,
    pub eigenvalues_minus: Vec<Eigenvalue>,
    pub charpoly_plus: Polynomial,
    pub charpoly_minus: Polynomial,
}

fn eigen(p: &Polynomial) -> Result<Vec<Eigenvalue>> {
    Ok(roots(p)?
        .into_iter()
        .map(|r| Eigenvalue { value: r.value.into(), modulus: r.value.norm(), multiplicity: r.multiplicity })
        .collect())
}

pub fn spectrum(m: &TracedMotive) -> Result<ComplexSpectrum> {
    let charpoly_plus = m.f_plus().char_poly()?;
    let charpoly_minus = m.f_minus().char_poly()?;
    Ok(ComplexSpectrum {
        eigenvalues_plus: eigen(&charpoly_plus)?,
        eigenvalues_minus: eigen(&charpoly_minus)?,
        charpoly_plus,
        charpoly_minus,
    })
}

fn radius(e: &[Eigenvalue]) -> f64 {
    e.iter().map(|x| x.modulus).fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralRadius {
    pub rho_plus: f64,
    pub rho_minus: f64,
    pub rho: f64,
}

pub fn spectral_radius(m: &TracedMotive) -> Result<SpectralRadius> {
    let s = spectrum(m)?;
    let (rho_plus, rho_minus) = (radius(&s.eigenvalues_plus), radius(&s.eigenvalues_minus));
    Ok(SpectralRadius { rho_plus, rho_minus, rho: rho_plus.max(rho_minus) })
}

/// `|tr(f^n)| <= (d+ + d-) rho^n` for `n = 1..=n_max`, with relative slack `1e-9`.
pub fn growth_bound_check(m: &TracedMotive, n_max: usize) -> Result<bool> {
    let rho = spectral_radius(m)?.rho;
    let d = (m.d_plus() + m.d_minus()) as f64;
    let traces = trace_sequence(m, n_max).values;
    Ok(traces.iter().enumerate().all(|(i, t)| {
        if num_traits::Zero::is_zero(t) {
            return true;
        }
        let n = (i + 1) as f64;
        rational::ln_abs(t) <= d.ln() + n * rho.ln() + 1e-9
    }))
}

/// `max (1/n) log|tr_n|` over the last `ceil(n_max/2)` of the first `n_max` traces,
/// skipping zeros; `-inf` when they all vanish.
pub fn rate_estimate(traces: &[Rational], n_max: usize) -> f64 {
    let n_max = n_max.min(traces.len());
    let start = n_max - n_max.div_ceil(2);
    (start..n_max)
        .filter(|&i| !num_traits::Zero::is_zero(&traces[i]))
        .map(|i| rational::ln_abs(&traces[i]) / (i + 1) as f64)
        .fold(f64::NEG_INFINITY, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rate {
    Exact { rate: f64 },
    Inapplicable { reason: String },
}

fn top_circle(e: &[Eigenvalue], rho: f64) -> Vec<(Complex64, usize)> {
    e.iter()
        .filter(|x| x.modulus >= rho * (1.0 - 1e-6))
        .map(|x| (Complex64::from(x.value), x.multiplicity))
        .collect()
}

fn same_multiset(a: &[(Complex64, usize)], b: &[(Complex64, usize)]) -> bool {
    let total = |v: &[(Complex64, usize)]| v.iter().map(|x| x.1).sum::<usize>();
    if total(a) != total(b) {
        return false;
    }
    a.iter().all(|(z, k)| {
        let tol = 1e-7 * (1.0 + z.norm());
        let ka: usize = a.iter().filter(|(w, _)| (w - z).norm() < tol).map(|x| x.1).sum();
        let kb: usize = b.iter().filter(|(w, _)| (w - z).norm() < tol).map(|x| x.1).sum();
        *k > 0 && ka == kb
    })
}

/// `log rho(f)`, valid when the eigenvalues of the two blocks on the circle
/// `|lambda| = rho` differ as multisets.
pub fn rate_exact(m: &TracedMotive) -> Result<Rate> {
    let s = spectrum(m)?;
    let rho = radius(&s.eigenvalues_plus).max(radius(&s.eigenvalues_minus));
    if rho == 0.0 {
        return Ok(Rate::Inapplicable { reason: "spectral radius is zero".into() });
    }
    let plus = top_circle(&s.eigenvalues_plus, rho);
    let minus = top_circle(&s.eigenvalues_minus, rho);
    if same_multiset(&plus, &minus) {
        return Ok(Rate::Inapplicable { reason: "even and odd eigenvalues agree on the top circle".into() });
    }
    Ok(Rate::Exact { rate: rho.ln() })
}
