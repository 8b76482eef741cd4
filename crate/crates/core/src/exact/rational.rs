//! Arbitrary-precision rationals and their string form `"a/b"`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `"a/b"`, with the denominator omitted when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Validation(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Validation(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(from_bigint(s.parse().map_err(|_| bad())?)),
    }
}

/// Natural log of |r| as a float, valid far outside the f64 range of `r` itself.
pub fn ln_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_bigint(&r.numer().abs()) - ln_bigint(r.denom())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let sign = if r.is_negative() { -1.0 } else { 1.0 };
            sign * ln_abs(r).exp()
        }
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub(crate) struct RationalVisitor;

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a string \"a/b\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
        Ok(int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
        Ok(from_bigint(BigInt::from(v)))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Rational, E> {
        if v.fract() == 0.0 && v.abs() < 9.0e15 {
            Ok(int(v as i64))
        } else {
            Err(E::custom(format!("non-integral float {v}; write rationals as \"a/b\"")))
        }
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
        parse_rational(v).map_err(E::custom)
    }
}

/// serde adapter for a single rational (`#[serde(with = "rational_serde")]`).
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

/// serde adapter for a list of rationals.
pub mod rational_vec_serde {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::Deserialize;

    #[derive(Deserialize)]
    struct Wrapped(#[serde(with = "rational_serde")] Rational);

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v: Vec<Wrapped> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|w| w.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(format_rational(&frac(6, 4)), "3/2");
        assert_eq!(format_rational(&frac(-4, 2)), "-2");
        assert_eq!(parse_rational(" -3/6 ").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn huge_logs() {
        let big = from_bigint(BigInt::from(5).pow(2000));
        assert!((ln_abs(&big) - 2000.0 * 5f64.ln()).abs() < 1e-9);
        assert!((to_f64(&frac(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
