//! Exact scalars, polynomials, matrices and finite fields.

pub mod cyclotomic;
pub mod fq;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, CycloElement, CyclotomicField};
pub use fq::{fq_enumerate, fq_make, FqElement, FqField};
pub use matrix::RatMatrix;
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;

/// `det(tI - m)`.
pub fn char_poly(m: &RatMatrix) -> crate::Result<Polynomial> {
    m.char_poly()
}

/// `det(I - t m)`.
pub fn reversed_char_poly(m: &RatMatrix) -> crate::Result<Polynomial> {
    m.reversed_char_poly()
}

/// Exact determinant.
pub fn det(m: &RatMatrix) -> crate::Result<Rational> {
    m.det()
}
