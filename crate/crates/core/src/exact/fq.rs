//! Finite fields `F_{p^e}` with log/Zech-log tables.
//!
//! Elements are stored as discrete logarithms with respect to a fixed primitive
//! element, so multiplication is an addition mod `q - 1` and addition is one
//! Zech-table lookup. The additive (polynomial-basis) view is recovered through
//! the tables: the *index* of an element is `sum c_i p^i` over its coefficients
//! in `F_p[x]/(modulus)`, and index order is the lexicographic enumeration order.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field size for which tables are built (three `u32` tables of this length).
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

const ZERO_CODE: u32 = u32::MAX;

/// A field element: `ZERO` or a discrete log in `[0, q-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FqElement(u32);

impl FqElement {
    pub const ZERO: FqElement = FqElement(ZERO_CODE);
    pub const ONE: FqElement = FqElement(0);

    pub fn is_zero(self) -> bool {
        self.0 == ZERO_CODE
    }

    /// Discrete log with respect to the field's primitive element.
    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

struct Tables {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg_one: FqElement,
}

/// The field `F_p[x]/(modulus)` with `p^e` elements; cheap to clone.
#[derive(Clone)]
pub struct FqField {
    t: Arc<Tables>,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.t.p, self.t.e, self.t.modulus)
    }
}

impl PartialEq for FqField {
    fn eq(&self, o: &Self) -> bool {
        self.t.p == o.t.p && self.t.e == o.t.e && self.t.modulus == o.t.modulus
    }
}

impl Eq for FqField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((p, e))` when `q = p^e` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let (mut r, mut e) = (q, 0);
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

// --- polynomials over F_p (ascending coefficients, trimmed) ---

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    fp_rem(prod, m, p)
}

/// Remainder modulo a monic polynomial.
fn fp_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let d = m.len() - 1;
    while a.len() > d {
        let c = a.pop().unwrap();
        if c != 0 {
            let base = a.len() - d;
            for (j, mj) in m[..d].iter().enumerate() {
                a[base + j] = (a[base + j] + (p - c) * mj) % p;
            }
        }
    }
    trim(&mut a);
    a
}

fn fp_powmod(base: &[u64], mut k: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = fp_rem(vec![1], m, p);
    let mut b = fp_rem(base.to_vec(), m, p);
    while k > 0 {
        if k & 1 == 1 {
            acc = fp_mulmod(&acc, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        k >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut k) = (1u64, a % p, p - 2);
    while k > 0 {
        if k & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        k >>= 1;
    }
    r
}

fn fp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = fp_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|c| c * inv % p).collect();
        let r = fp_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    a
}

/// Rabin's test for a monic polynomial of degree `e >= 1` over `F_p`.
pub fn is_irreducible_fp(m: &[u64], p: u64) -> bool {
    let e = m.len() - 1;
    if e == 1 {
        return true;
    }
    let x = vec![0, 1];
    let frob = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = fp_powmod(&h, p as u128, m, p);
        }
        h
    };
    let sub_x = |mut h: Vec<u64>| {
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(&mut h);
        h
    };
    if !sub_x(frob(e)).is_empty() {
        return false;
    }
    for r in prime_factors(e as u64) {
        let g = fp_gcd(m.to_vec(), sub_x(frob(e / r as usize)), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn digits_of(mut idx: u64, p: u64, e: u32) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn index_of(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, d| acc * p + d)
}

/// Smallest monic irreducible polynomial of degree `e` over `F_p` in index order
/// of its lower coefficients (constant term least significant); `x` for `e = 1`.
pub fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e);
    for idx in 0..count {
        let mut m = digits_of(idx, p, e);
        m.push(1);
        if m[0] != 0 && is_irreducible_fp(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FqField {
    /// Builds `F_{p^e}` with its lexicographically smallest irreducible modulus.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::Validation("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(e).filter(|&q| q <= MAX_FIELD_SIZE as u128);
        let Some(q) = q else {
            return Err(Error::Resource {
                required: (p as u128).saturating_pow(e),
                budget: MAX_FIELD_SIZE as u128,
            });
        };
        let modulus = smallest_irreducible(p, e);
        Ok(Self::build(p, e, q as u64, modulus))
    }

    fn build(p: u64, e: u32, q: u64, modulus: Vec<u64>) -> Self {
        let order = q - 1;
        let factors = prime_factors(order);
        let is_primitive = |g: &[u64]| {
            !g.is_empty()
                && fp_powmod(g, order as u128, &modulus, p) == vec![1]
                && factors.iter().all(|r| fp_powmod(g, (order / r) as u128, &modulus, p) != vec![1])
        };
        // prefer x + c: multiplying by it is linear time in e
        let mut generator = None;
        for c in 0..p {
            let g = fp_rem(vec![c, 1], &modulus, p);
            if is_primitive(&g) {
                generator = Some(g);
                break;
            }
        }
        let generator = generator.unwrap_or_else(|| {
            (2..q)
                .map(|idx| {
                    let mut g = digits_of(idx, p, e);
                    trim(&mut g);
                    g
                })
                .find(|g| is_primitive(g))
                .expect("multiplicative group is cyclic")
        });

        let ex = e as usize;
        let linear = generator.len() <= 2 && ex > 1 && generator.get(1) == Some(&1);
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![ZERO_CODE; q as usize];
        let mut cur = vec![0u64; ex];
        cur[0] = 1;
        for k in 0..order as usize {
            let idx = index_of(&cur, p);
            exp[k] = idx as u32;
            log[idx as usize] = k as u32;
            cur = if linear {
                // (x + c) * cur mod modulus
                let c = generator[0];
                let top = cur[ex - 1];
                let mut next = vec![0u64; ex];
                for i in (1..ex).rev() {
                    next[i] = cur[i - 1];
                }
                for i in 0..ex {
                    next[i] = (next[i] + (p - top) * modulus[i] + c * cur[i]) % p;
                }
                next
            } else {
                let mut prod = fp_mulmod(&cur, &generator, &modulus, p);
                prod.resize(ex, 0);
                prod
            };
        }
        let mut zech = vec![ZERO_CODE; order as usize];
        for k in 0..order as usize {
            let idx = exp[k] as u64;
            let plus_one = if idx % p == p - 1 { idx - (p - 1) } else { idx + 1 };
            zech[k] = log[plus_one as usize];
        }
        let neg_one = if p == 2 { FqElement::ONE } else { FqElement((order / 2) as u32) };
        FqField { t: Arc::new(Tables { p, e, q, modulus, generator, exp, log, zech, neg_one }) }
    }

    pub fn characteristic(&self) -> u64 {
        self.t.p
    }

    pub fn degree(&self) -> u32 {
        self.t.e
    }

    pub fn size(&self) -> u64 {
        self.t.q
    }

    /// Monic modulus, ascending coefficients.
    pub fn modulus(&self) -> &[u64] {
        &self.t.modulus
    }

    pub fn generator_coefficients(&self) -> &[u64] {
        &self.t.generator
    }

    pub fn zero(&self) -> FqElement {
        FqElement::ZERO
    }

    pub fn one(&self) -> FqElement {
        FqElement::ONE
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FqElement {
        let r = n.rem_euclid(self.t.p as i64) as u64;
        self.from_index(r)
    }

    /// The element with discrete log `l`, reduced mod `q - 1`.
    pub fn from_log(&self, l: u64) -> FqElement {
        FqElement((l % (self.t.q - 1)) as u32)
    }

    /// Position-`d` element of the log-order enumeration: `0` is zero, `d` is `g^(d-1)`.
    #[inline]
    pub fn from_digit(&self, d: u64) -> FqElement {
        if d == 0 {
            FqElement::ZERO
        } else {
            FqElement((d - 1) as u32)
        }
    }

    pub fn from_index(&self, idx: u64) -> FqElement {
        FqElement(self.t.log[idx as usize])
    }

    pub fn index(&self, a: FqElement) -> u64 {
        if a.is_zero() {
            0
        } else {
            self.t.exp[a.0 as usize] as u64
        }
    }

    /// Coefficients in `F_p[x]/(modulus)`, ascending, length `e`.
    pub fn coefficients(&self, a: FqElement) -> Vec<u64> {
        digits_of(self.index(a), self.t.p, self.t.e)
    }

    pub fn from_coefficients(&self, c: &[u64]) -> FqElement {
        let mut r = fp_rem(c.iter().map(|x| x % self.t.p).collect(), &self.t.modulus, self.t.p);
        r.resize(self.t.e as usize, 0);
        self.from_index(index_of(&r, self.t.p))
    }

    /// All elements in index (lexicographic) order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.t.q).map(|i| self.from_index(i))
    }

    /// Iteration in log order (zero first); cheaper than `elements` when order is irrelevant.
    pub fn elements_unordered(&self) -> impl Iterator<Item = FqElement> {
        std::iter::once(FqElement::ZERO).chain((0..(self.t.q - 1) as u32).map(FqElement))
    }

    #[inline]
    pub fn mul(&self, a: FqElement, b: FqElement) -> FqElement {
        if a.is_zero() || b.is_zero() {
            return FqElement::ZERO;
        }
        let order = (self.t.q - 1) as u64;
        FqElement(((a.0 as u64 + b.0 as u64) % order) as u32)
    }

    #[inline]
    pub fn add(&self, a: FqElement, b: FqElement) -> FqElement {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let order = (self.t.q - 1) as u32;
        let k = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + order - a.0 };
        let z = self.t.zech[k as usize];
        if z == ZERO_CODE {
            FqElement::ZERO
        } else {
            FqElement(((a.0 as u64 + z as u64) % order as u64) as u32)
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElement) -> FqElement {
        self.mul(a, self.t.neg_one)
    }

    #[inline]
    pub fn sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FqElement) -> Result<FqElement> {
        if a.is_zero() {
            return Err(Error::Validation("inverse of zero in a finite field".into()));
        }
        let order = (self.t.q - 1) as u32;
        Ok(FqElement(if a.0 == 0 { 0 } else { order - a.0 }))
    }

    pub fn div(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`, with `0^0 = 1`.
    #[inline]
    pub fn pow(&self, a: FqElement, k: u128) -> FqElement {
        if k == 0 {
            return FqElement::ONE;
        }
        if a.is_zero() {
            return FqElement::ZERO;
        }
        let order = (self.t.q - 1) as u128;
        FqElement(((a.0 as u128 * (k % order)) % order) as u32)
    }

    /// Nonzero squares are exactly the even logs (odd characteristic).
    pub fn is_square(&self, a: FqElement) -> bool {
        a.is_zero() || self.t.p == 2 || a.0 % 2 == 0
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FqElement) -> Option<u64> {
        let l = a.log()? as u64;
        let n = self.t.q - 1;
        Some(n / num_integer::gcd(n, l))
    }

    /// Number of distinct roots in this field of a polynomial (ascending
    /// coefficients); the zero polynomial has every element as a root.
    pub fn count_distinct_roots(&self, f: &[FqElement]) -> u64 {
        let mut f = f.to_vec();
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        match f.len() {
            0 => self.t.q,
            1 => 0,
            2 => 1,
            3 if self.t.p != 2 => {
                let (c, b, a) = (f[0], f[1], f[2]);
                let four_ac = self.mul(self.from_int(4), self.mul(a, c));
                let disc = self.sub(self.mul(b, b), four_ac);
                if disc.is_zero() {
                    1
                } else if self.is_square(disc) {
                    2
                } else {
                    0
                }
            }
            _ => {
                let m = self.poly_monic(&f);
                let xq = self.poly_powmod_x(self.t.q, &m);
                let mut h = xq;
                h.resize(h.len().max(2), FqElement::ZERO);
                h[1] = self.sub(h[1], FqElement::ONE);
                let g = self.poly_gcd(m, h);
                (g.len() - 1) as u64
            }
        }
    }

    fn poly_trim(v: &mut Vec<FqElement>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    fn poly_monic(&self, f: &[FqElement]) -> Vec<FqElement> {
        let inv = self.inv(*f.last().unwrap()).unwrap();
        f.iter().map(|&c| self.mul(c, inv)).collect()
    }

    /// Remainder modulo a monic polynomial.
    fn poly_rem(&self, mut a: Vec<FqElement>, m: &[FqElement]) -> Vec<FqElement> {
        let d = m.len() - 1;
        while a.len() > d {
            let c = a.pop().unwrap();
            if !c.is_zero() {
                let base = a.len() - d;
                let nc = self.neg(c);
                for (j, &mj) in m[..d].iter().enumerate() {
                    a[base + j] = self.add(a[base + j], self.mul(nc, mj));
                }
            }
        }
        Self::poly_trim(&mut a);
        a
    }

    fn poly_mulmod(&self, a: &[FqElement], b: &[FqElement], m: &[FqElement]) -> Vec<FqElement> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![FqElement::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.poly_rem(prod, m)
    }

    fn poly_powmod_x(&self, mut k: u64, m: &[FqElement]) -> Vec<FqElement> {
        let mut acc = self.poly_rem(vec![FqElement::ONE], m);
        let mut b = self.poly_rem(vec![FqElement::ZERO, FqElement::ONE], m);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.poly_mulmod(&acc, &b, m);
            }
            b = self.poly_mulmod(&b, &b, m);
            k >>= 1;
        }
        acc
    }

    fn poly_gcd(&self, mut a: Vec<FqElement>, mut b: Vec<FqElement>) -> Vec<FqElement> {
        Self::poly_trim(&mut a);
        Self::poly_trim(&mut b);
        while !b.is_empty() {
            let monic = self.poly_monic(&b);
            let r = self.poly_rem(a, &monic);
            a = monic;
            b = r;
        }
        a
    }

    /// Gcd of several polynomials (zero polynomials are ignored; all zero gives zero).
    pub fn poly_gcd_all(&self, polys: &[Vec<FqElement>]) -> Vec<FqElement> {
        polys.iter().fold(Vec::new(), |acc, p| self.poly_gcd(acc, p.clone()))
    }
}

/// `F_{p^e}`: the deterministic field constructor.
pub fn fq_make(p: u64, e: u32) -> Result<FqField> {
    FqField::new(p, e)
}

/// Every element of the field exactly once, in lexicographic coefficient order.
pub fn fq_enumerate(field: &FqField) -> impl Iterator<Item = FqElement> + '_ {
    field.elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent irreducibility oracle: no root, and no monic factor of degree <= e/2.
    fn irreducible_by_trial_division(m: &[u64], p: u64) -> bool {
        let e = m.len() - 1;
        for d in 1..=e / 2 {
            for idx in 0..p.pow(d as u32) {
                let mut g = digits_of(idx, p, d as u32);
                g.push(1);
                if fp_rem(m.to_vec(), &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn moduli_match_examples() {
        assert_eq!(fq_make(5, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(fq_make(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(fq_make(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert!(matches!(fq_make(6, 1), Err(Error::Validation(_))));
        assert!(fq_make(3, 0).is_err());
        assert!(matches!(fq_make(2, 30), Err(Error::Resource { .. })));
    }

    #[test]
    fn moduli_are_irreducible() {
        for &(p, e) in &[(2, 2), (2, 3), (2, 4), (2, 8), (3, 2), (3, 3), (3, 5), (5, 2), (5, 3), (5, 4), (7, 2), (7, 3), (11, 2)] {
            let f = fq_make(p, e).unwrap();
            let m = f.modulus();
            if e <= 3 {
                assert!((0..p).all(|x| m.iter().rev().fold(0, |acc, c| (acc * x + c) % p) != 0));
            }
            assert!(irreducible_by_trial_division(m, p), "p={p} e={e}");
        }
    }

    #[test]
    fn enumeration_order() {
        let f2 = fq_make(2, 1).unwrap();
        let v: Vec<u64> = fq_enumerate(&f2).map(|a| f2.index(a)).collect();
        assert_eq!(v, vec![0, 1]);
        assert_eq!(fq_enumerate(&fq_make(2, 2).unwrap()).count(), 4);
        let f25 = fq_make(5, 2).unwrap();
        let all: Vec<FqElement> = fq_enumerate(&f25).collect();
        assert_eq!(all.len(), 25);
        assert!(all[0].is_zero());
        assert_eq!(f25.coefficients(all[24]), vec![4, 4]);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 25);
    }

    #[test]
    fn field_axioms_sampled() {
        for &(p, e) in &[(2, 3), (3, 4), (5, 2), (7, 1), (13, 2)] {
            let f = fq_make(p, e).unwrap();
            let q = f.size();
            for a in f.elements().skip(1).step_by(3) {
                assert_eq!(f.pow(a, (q - 1) as u128), f.one());
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                assert!(f.add(a, f.neg(a)).is_zero());
            }
        }
    }

    #[test]
    fn addition_matches_polynomial_arithmetic() {
        let f = fq_make(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(5) {
                let ca = f.coefficients(a);
                let cb = f.coefficients(b);
                let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % 3).collect();
                assert_eq!(f.coefficients(f.add(a, b)), sum);
            }
        }
        // multiplication against F_p[x]/(m)
        let x = f.from_coefficients(&[0, 1]);
        let x3 = f.pow(x, 3);
        let m = f.modulus();
        let expected: Vec<u64> = m[..3].iter().map(|c| (3 - c) % 3).collect();
        assert_eq!(f.coefficients(x3), expected);
    }

    #[test]
    fn root_counting() {
        let f = fq_make(5, 2).unwrap();
        let c = |n: i64| f.from_int(n);
        // x^2 + 1 splits in F_25 (and already in F_5)
        assert_eq!(f.count_distinct_roots(&[c(1), c(0), c(1)]), 2);
        // x^2 - 2 splits in F_25 but not in F_5
        assert_eq!(f.count_distinct_roots(&[c(-2), c(0), c(1)]), 2);
        let f5 = fq_make(5, 1).unwrap();
        let c5 = |n: i64| f5.from_int(n);
        assert_eq!(f5.count_distinct_roots(&[c5(-2), c5(0), c5(1)]), 0);
        // (x-1)^2 (x-2) over F_5 via the gcd path
        let cubic = [c5(-2), c5(5), c5(-4), c5(1)];
        assert_eq!(f5.count_distinct_roots(&cubic), 2);
        assert_eq!(f5.count_distinct_roots(&[]), 5);
        assert_eq!(f5.count_distinct_roots(&[c5(3)]), 0);
        // characteristic 2 quadratic through gcd: x^2 + x + 1 over F_2 and F_4
        let f2 = fq_make(2, 1).unwrap();
        assert_eq!(f2.count_distinct_roots(&[f2.one(), f2.one(), f2.one()]), 0);
        let f4 = fq_make(2, 2).unwrap();
        assert_eq!(f4.count_distinct_roots(&[f4.one(), f4.one(), f4.one()]), 2);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
