//! Integer-coefficient multivariate polynomials and their compiled forms over `F_q`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{FqElement, FqField};

/// `sum c * x^e` with exponent vectors `e`; serialized as `[[e, c], ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPoly {
    terms: Vec<(Vec<u32>, i64)>,
}

impl MultiPoly {
    pub fn new(terms: Vec<(Vec<u32>, i64)>) -> Self {
        MultiPoly { terms }
    }

    pub fn zero() -> Self {
        MultiPoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Vec<u32>, i64)] {
        &self.terms
    }

    /// Checks that every exponent vector has `nvars` entries.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        for (e, _) in &self.terms {
            if e.len() != nvars {
                return Err(Error::Validation(format!(
                    "monomial {e:?} has {} exponents, expected {nvars}",
                    e.len()
                )));
            }
        }
        Ok(())
    }

    /// Total degree of each monomial whose coefficient is nonzero mod `p`.
    fn live_degrees(&self, p: u64) -> Vec<u32> {
        self.terms
            .iter()
            .filter(|(_, c)| c.rem_euclid(p as i64) != 0)
            .map(|(e, _)| e.iter().sum())
            .collect()
    }

    pub fn is_homogeneous_mod(&self, p: u64) -> bool {
        let d = self.live_degrees(p);
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn compile(&self, field: &FqField) -> CompiledPoly {
        let mut terms: Vec<(FqElement, Vec<(usize, u32)>)> = Vec::new();
        for (e, c) in &self.terms {
            let coef = field.from_int(*c);
            if coef.is_zero() {
                continue;
            }
            let vars: Vec<(usize, u32)> = e.iter().enumerate().filter(|(_, k)| **k > 0).map(|(i, k)| (i, *k)).collect();
            match terms.iter_mut().find(|(_, v)| *v == vars) {
                Some(t) => t.0 = field.add(t.0, coef),
                None => terms.push((coef, vars)),
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        CompiledPoly { terms }
    }
}

/// Polynomial with coefficients in a fixed field and sparse monomials.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(FqElement, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn eval(&self, f: &FqField, x: &[FqElement]) -> FqElement {
        let mut acc = FqElement::ZERO;
        'terms: for (c, vars) in &self.terms {
            let mut t = *c;
            for &(i, k) in vars {
                if x[i].is_zero() {
                    continue 'terms;
                }
                t = f.mul(t, f.pow(x[i], k as u128));
            }
            acc = f.add(acc, t);
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(_, v)| v.iter().find(|(i, _)| *i == var).map_or(0, |(_, k)| *k))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients (ascending) of the univariate polynomial in `var` obtained by
    /// substituting `x` for the other variables.
    pub fn specialize(&self, f: &FqField, x: &[FqElement], var: usize, out: &mut Vec<FqElement>) {
        out.clear();
        'terms: for (c, vars) in &self.terms {
            let mut t = *c;
            let mut power = 0u32;
            for &(i, k) in vars {
                if i == var {
                    power = k;
                    continue;
                }
                if x[i].is_zero() {
                    continue 'terms;
                }
                t = f.mul(t, f.pow(x[i], k as u128));
            }
            let p = power as usize;
            if out.len() <= p {
                out.resize(p + 1, FqElement::ZERO);
            }
            out[p] = f.add(out[p], t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fq_make;

    fn curve() -> MultiPoly {
        // y^2 z - x^3 - x z^2 - z^3
        MultiPoly::new(vec![(vec![0, 2, 1], 1), (vec![3, 0, 0], -1), (vec![1, 0, 2], -1), (vec![0, 0, 3], -1)])
    }

    #[test]
    fn homogeneity_and_validation() {
        assert!(curve().is_homogeneous_mod(5));
        assert!(curve().validate(3).is_ok());
        assert!(curve().validate(2).is_err());
        let mixed = MultiPoly::new(vec![(vec![1, 1], 1), (vec![0, 0], -1)]);
        assert!(!mixed.is_homogeneous_mod(5));
        // the constant dies mod 5
        let fake = MultiPoly::new(vec![(vec![1, 1], 1), (vec![0, 0], 5)]);
        assert!(fake.is_homogeneous_mod(5));
    }

    #[test]
    fn evaluation_and_specialization() {
        let f = fq_make(5, 1).unwrap();
        let c = curve().compile(&f);
        let pt = |a: i64, b: i64, z: i64| [f.from_int(a), f.from_int(b), f.from_int(z)];
        // 4 + 1 + 1 = 6 = 1 = 1^2, so (0 : 1 : 1) and (0 : 4 : 1) lie on the curve
        assert!(c.eval(&f, &pt(0, 1, 1)).is_zero());
        assert!(!c.eval(&f, &pt(1, 1, 1)).is_zero());
        let mut u = Vec::new();
        c.specialize(&f, &pt(2, 0, 1), 1, &mut u);
        assert_eq!(u.len(), 3);
        assert_eq!(u[2], f.one());
        assert_eq!(c.degree_in(0), 3);
        assert_eq!(c.degree_in(1), 2);
    }
}
