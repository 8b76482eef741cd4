//! Exact arithmetic in cyclotomic fields `Q(zeta_m)` in the power basis.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// `Phi_m`, by dividing `x^m - 1` by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_polynomial(m: u32) -> Polynomial {
    let mut p = Polynomial::monomial(Rational::one(), m as usize);
    p = &p - &Polynomial::one();
    for d in 1..m {
        if m % d == 0 {
            p = p.div_rem(&cyclotomic_polynomial(d)).unwrap().0;
        }
    }
    p
}

/// `Q(zeta_m)` with basis `1, zeta, ..., zeta^{phi(m)-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    m: u32,
    modulus: Polynomial,
}

/// Element given by its coordinates in the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycloElement {
    #[serde(with = "rational::rational_vec_serde")]
    coords: Vec<Rational>,
}

impl CycloElement {
    /// An integer, valid in every `Q(zeta_m)`.
    pub fn rational(n: i64) -> Self {
        CycloElement { coords: vec![rational::int(n)] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

impl CyclotomicField {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Validation("cyclotomic order must be positive".into()));
        }
        Ok(CyclotomicField { m, modulus: cyclotomic_polynomial(m) })
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn dimension(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    fn reduce(&self, p: Polynomial) -> CycloElement {
        let r = p.div_rem(&self.modulus).unwrap().1;
        let mut coords = r.into_coeffs();
        coords.resize(self.dimension(), Rational::zero());
        CycloElement { coords }
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<CycloElement> {
        if coords.len() > self.dimension() {
            return Err(Error::Dimension(format!(
                "{} coordinates given for a field of degree {}",
                coords.len(),
                self.dimension()
            )));
        }
        Ok(self.reduce(Polynomial::new(coords)))
    }

    pub fn from_rational(&self, r: Rational) -> CycloElement {
        self.reduce(Polynomial::constant(r))
    }

    pub fn zero(&self) -> CycloElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> CycloElement {
        self.from_rational(Rational::one())
    }

    /// `zeta_m^k`
    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        let e = k.rem_euclid(self.m as i64) as usize;
        self.reduce(Polynomial::monomial(Rational::one(), e))
    }

    pub fn add(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        CycloElement { coords }
    }

    pub fn mul(&self, a: &CycloElement, b: &CycloElement) -> CycloElement {
        let pa = Polynomial::new(a.coords.clone());
        let pb = Polynomial::new(b.coords.clone());
        self.reduce(&pa * &pb)
    }

    pub fn scale(&self, a: &CycloElement, c: &Rational) -> CycloElement {
        CycloElement { coords: a.coords.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self, a: &CycloElement) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self, a: &CycloElement) -> Option<Rational> {
        a.coords[1..].iter().all(Zero::is_zero).then(|| a.coords[0].clone())
    }

    /// Image under the embedding `zeta_m -> exp(2 pi i / m)`.
    pub fn to_complex(&self, a: &CycloElement) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.m as f64);
        a.coords
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + rational::to_f64(c))
    }
}
