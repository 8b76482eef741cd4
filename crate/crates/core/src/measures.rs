//! A polynomial-count model of the Grothendieck ring of varieties and the measures on it.
//!
//! A class is a construction tree over cells; its counting polynomial `P(q)` gives
//! `#X(F_q)`. Only mixed-Tate classes are modelled.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::fq::prime_power;
use crate::exact::rational::{self, Rational};
use crate::exact::Polynomial;

/// Construction tree of a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MeasureClass {
    Point,
    AffineSpace { n: u32 },
    ProjectiveSpace { n: u32 },
    Torus,
    Sum { terms: Vec<MeasureClass> },
    Product { factors: Vec<MeasureClass> },
    Difference { minuend: Box<MeasureClass>, subtrahend: Box<MeasureClass> },
    Multiple { k: i64, class: Box<MeasureClass> },
}

impl MeasureClass {
    pub fn point() -> Self {
        MeasureClass::Point
    }

    pub fn affine_space(n: u32) -> Self {
        MeasureClass::AffineSpace { n }
    }

    pub fn projective_space(n: u32) -> Self {
        MeasureClass::ProjectiveSpace { n }
    }

    pub fn torus() -> Self {
        MeasureClass::Torus
    }

    pub fn sum(terms: Vec<MeasureClass>) -> Self {
        MeasureClass::Sum { terms }
    }

    pub fn product(factors: Vec<MeasureClass>) -> Self {
        MeasureClass::Product { factors }
    }

    pub fn difference(a: MeasureClass, b: MeasureClass) -> Self {
        MeasureClass::Difference { minuend: Box::new(a), subtrahend: Box::new(b) }
    }

    pub fn multiple(k: i64, c: MeasureClass) -> Self {
        MeasureClass::Multiple { k, class: Box::new(c) }
    }

    /// Counting polynomial in `q`; the variable prints as `t`.
    pub fn counting_polynomial(&self) -> Polynomial {
        match self {
            MeasureClass::Point => Polynomial::one(),
            MeasureClass::AffineSpace { n } => Polynomial::monomial(Rational::one(), *n as usize),
            // [P^n] = [A^n] + [P^{n-1}]
            MeasureClass::ProjectiveSpace { n } => Polynomial::new(vec![Rational::one(); *n as usize + 1]),
            MeasureClass::Torus => Polynomial::from_ints(&[-1, 1]),
            MeasureClass::Sum { terms } => terms.iter().fold(Polynomial::zero(), |a, c| &a + &c.counting_polynomial()),
            MeasureClass::Product { factors } => {
                factors.iter().fold(Polynomial::one(), |a, c| &a * &c.counting_polynomial())
            }
            MeasureClass::Difference { minuend, subtrahend } => {
                &minuend.counting_polynomial() - &subtrahend.counting_polynomial()
            }
            MeasureClass::Multiple { k, class } => class.counting_polynomial().scale(&rational::int(*k)),
        }
    }

    /// Whether the class lies in the span of smooth proper cells (points, `P^n`,
    /// their products and nonnegative combinations).
    pub fn smooth_proper(&self) -> bool {
        match self {
            MeasureClass::Point | MeasureClass::ProjectiveSpace { .. } => true,
            MeasureClass::AffineSpace { n } => *n == 0,
            MeasureClass::Torus | MeasureClass::Difference { .. } => false,
            MeasureClass::Sum { terms } => terms.iter().all(Self::smooth_proper),
            MeasureClass::Product { factors } => factors.iter().all(Self::smooth_proper),
            MeasureClass::Multiple { k, class } => *k >= 0 && class.smooth_proper(),
        }
    }
}

impl fmt::Display for MeasureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, v: &[MeasureClass], sep: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, c) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, " {sep} ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        };
        match self {
            MeasureClass::Point => write!(f, "pt"),
            MeasureClass::AffineSpace { n } => write!(f, "A^{n}"),
            MeasureClass::ProjectiveSpace { n } => write!(f, "P^{n}"),
            MeasureClass::Torus => write!(f, "Gm"),
            MeasureClass::Sum { terms } => join(f, terms, "+"),
            MeasureClass::Product { factors } => join(f, factors, "x"),
            MeasureClass::Difference { minuend, subtrahend } => write!(f, "({minuend} - {subtrahend})"),
            MeasureClass::Multiple { k, class } => write!(f, "{k}*{class}"),
        }
    }
}

fn integer_at(p: &Polynomial, x: &BigInt) -> BigInt {
    let v = p.eval(&rational::from_bigint(x.clone()));
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// `[X] -> #X(F_q)`.
pub fn mu_count(c: &MeasureClass, q: u64) -> Result<BigInt> {
    if prime_power(q).is_none() {
        return Err(Error::Validation(format!("{q} is not a prime power")));
    }
    Ok(integer_at(&c.counting_polynomial(), &BigInt::from(q)))
}

/// Compactly supported rigid Euler characteristic, `P(1)` on the polynomial-count span.
pub fn mu_rig(c: &MeasureClass) -> BigInt {
    integer_at(&c.counting_polynomial(), &BigInt::one())
}

/// Element `even + odd ε` of `Z[ε]/(ε² - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsilonValue {
    #[serde(with = "crate::numk0::intmat::int_serde::scalar")]
    pub even: BigInt,
    #[serde(with = "crate::numk0::intmat::int_serde::scalar")]
    pub odd: BigInt,
}

impl EpsilonValue {
    pub fn new(even: impl Into<BigInt>, odd: impl Into<BigInt>) -> Self {
        EpsilonValue { even: even.into(), odd: odd.into() }
    }

    pub fn add(&self, o: &Self) -> Self {
        EpsilonValue { even: &self.even + &o.even, odd: &self.odd + &o.odd }
    }

    pub fn sub(&self, o: &Self) -> Self {
        EpsilonValue { even: &self.even - &o.even, odd: &self.odd - &o.odd }
    }

    pub fn mul(&self, o: &Self) -> Self {
        EpsilonValue {
            even: &self.even * &o.even + &self.odd * &o.odd,
            odd: &self.even * &o.odd + &self.odd * &o.even,
        }
    }

    /// `ε -> -1`
    pub fn collapse(&self) -> BigInt {
        &self.even - &self.odd
    }
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.even, self.odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcComposite {
    pub value: EpsilonValue,
    /// False when the class leaves the smooth proper span and is reached by linearity.
    pub in_scope: bool,
}

/// Periodic cyclic dimensions `(TP_even, TP_odd)` of `perf_dg(X)` for the cells,
/// extended to the whole tree as a ring map into `Z[ε]/(ε² - 1)`.
pub fn mu_nc_composite(c: &MeasureClass) -> NcComposite {
    fn go(c: &MeasureClass) -> EpsilonValue {
        match c {
            MeasureClass::Point => EpsilonValue::new(1, 0),
            // Crystalline cohomology of P^n is one-dimensional in each even degree.
            MeasureClass::ProjectiveSpace { n } => EpsilonValue::new(*n + 1, 0),
            MeasureClass::AffineSpace { n } => {
                let p = |k: u32| EpsilonValue::new(k + 1, 0);
                if *n == 0 {
                    p(0)
                } else {
                    p(*n).sub(&p(*n - 1))
                }
            }
            // [Gm] = [P^1] - 2[pt]
            MeasureClass::Torus => EpsilonValue::new(2, 0).sub(&EpsilonValue::new(2, 0)),
            MeasureClass::Sum { terms } => terms.iter().fold(EpsilonValue::new(0, 0), |a, t| a.add(&go(t))),
            MeasureClass::Product { factors } => factors.iter().fold(EpsilonValue::new(1, 0), |a, t| a.mul(&go(t))),
            MeasureClass::Difference { minuend, subtrahend } => go(minuend).sub(&go(subtrahend)),
            MeasureClass::Multiple { k, class } => EpsilonValue::new(*k, 0).mul(&go(class)),
        }
    }
    NcComposite { value: go(c), in_scope: c.smooth_proper() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub n: u32,
    pub q: u64,
    pub classes: [MeasureClass; 2],
    pub labels: [String; 2],
    pub mu_nc: [EpsilonValue; 2],
    #[serde(with = "crate::numk0::intmat::int_serde::vec")]
    pub mu_count: Vec<BigInt>,
    pub nc_equal: bool,
    pub count_differs: bool,
    pub note: Option<String>,
}

/// `[P^n]` and `(n+1)[pt]` agree under the noncommutative measure but not under counting.
pub fn non_factoring_witness(n: u32, q: u64) -> Result<WitnessReport> {
    if n == 0 {
        return Err(Error::Validation("n must be positive: P^0 is a point".into()));
    }
    let classes = [MeasureClass::projective_space(n), MeasureClass::multiple(n as i64 + 1, MeasureClass::point())];
    let mu_nc = [mu_nc_composite(&classes[0]).value, mu_nc_composite(&classes[1]).value];
    let mu_count = vec![mu_count(&classes[0], q)?, mu_count(&classes[1], q)?];
    Ok(WitnessReport {
        n,
        q,
        labels: [classes[0].to_string(), classes[1].to_string()],
        nc_equal: mu_nc[0] == mu_nc[1],
        count_differs: mu_count[0] != mu_count[1],
        mu_nc,
        mu_count,
        classes,
        note: (n == 1).then(|| "n = 1 also separates the measures for every q > 1".to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::{count_points, Ambient, MultiPoly, VarietySpec};

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn builders() {
        assert_eq!(MeasureClass::projective_space(2).counting_polynomial(), Polynomial::from_ints(&[1, 1, 1]));
        assert_eq!(MeasureClass::affine_space(0).counting_polynomial(), Polynomial::one());
        let d = MeasureClass::difference(MeasureClass::projective_space(1), MeasureClass::multiple(2, MeasureClass::point()));
        assert_eq!(d.counting_polynomial(), MeasureClass::torus().counting_polynomial());
    }

    #[test]
    fn counting() {
        assert_eq!(mu_count(&MeasureClass::projective_space(2), 3).unwrap(), big(13));
        assert_eq!(mu_count(&MeasureClass::point(), 49).unwrap(), big(1));
        assert_eq!(mu_count(&MeasureClass::torus(), 2).unwrap(), big(1));
        assert!(mu_count(&MeasureClass::point(), 6).is_err());
    }

    #[test]
    fn rigid_and_composite() {
        assert_eq!(mu_rig(&MeasureClass::projective_space(4)), big(5));
        assert_eq!(mu_rig(&MeasureClass::torus()), big(0));
        assert_eq!(mu_rig(&MeasureClass::point()), big(1));
        let p1 = MeasureClass::projective_space(1);
        assert_eq!(mu_nc_composite(&p1).value, EpsilonValue::new(2, 0));
        assert_eq!(mu_nc_composite(&MeasureClass::point()).value, EpsilonValue::new(1, 0));
        let sq = mu_nc_composite(&MeasureClass::product(vec![p1.clone(), p1]));
        assert_eq!(sq.value, EpsilonValue::new(4, 0));
        assert!(sq.in_scope);
        assert!(!mu_nc_composite(&MeasureClass::torus()).in_scope);
    }

    #[test]
    fn epsilon_ring() {
        let e = EpsilonValue::new(0, 1);
        assert_eq!(e.mul(&e), EpsilonValue::new(1, 0));
        assert_eq!(EpsilonValue::new(3, 2).collapse(), big(1));
    }

    #[test]
    fn witnesses() {
        let w = non_factoring_witness(2, 3).unwrap();
        assert!(w.nc_equal && w.count_differs);
        assert_eq!(w.mu_nc[0], EpsilonValue::new(3, 0));
        assert_eq!(w.mu_count, [big(13), big(3)]);
        let w = non_factoring_witness(1, 5).unwrap();
        assert_eq!(w.mu_count, [big(6), big(2)]);
        assert!(w.note.is_some());
        assert_eq!(non_factoring_witness(2, 2).unwrap().mu_count, [big(7), big(3)]);
        assert!(non_factoring_witness(0, 3).is_err());
    }

    #[test]
    fn matches_point_counts() {
        let torus = VarietySpec::new(Ambient::Affine(2), 2, 1, vec![MultiPoly::new(vec![(vec![1, 1], 1), (vec![0, 0], -1)])]);
        for p in [2u64, 3, 5] {
            let cases = [
                (MeasureClass::point(), VarietySpec::projective_space(0, p, 1).unwrap()),
                (MeasureClass::affine_space(1), VarietySpec::new(Ambient::Affine(1), p, 1, vec![]).unwrap()),
                (MeasureClass::affine_space(2), VarietySpec::new(Ambient::Affine(2), p, 1, vec![]).unwrap()),
                (MeasureClass::projective_space(1), VarietySpec::projective_space(1, p, 1).unwrap()),
                (MeasureClass::projective_space(2), VarietySpec::projective_space(2, p, 1).unwrap()),
                (MeasureClass::torus(), VarietySpec { p, ..torus.clone().unwrap() }),
            ];
            for (c, v) in cases {
                assert_eq!(mu_count(&c, p).unwrap(), BigInt::from(count_points(&v, 1).unwrap()), "{c} over F_{p}");
            }
        }
    }
}
