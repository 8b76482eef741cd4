//! Fixed points of the power map `x -> x^m` on the projective line over `F̄_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::fq::is_prime;
use crate::exact::FqField;

fn check(p: u64, m: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Validation(format!("{p} is not prime")));
    }
    if m < 2 {
        return Err(Error::Validation("the power map needs m >= 2".into()));
    }
    if m.gcd(&p) != 1 {
        return Err(Error::Validation(format!("m = {m} is not coprime to p = {p}")));
    }
    Ok(())
}

/// `#Fix(f^n) = 2 + (prime-to-p part of m^n - 1)` for `n = 1..=n_max`.
pub fn artin_mazur_traces(p: u64, m: u64, n_max: u32) -> Result<Vec<BigInt>> {
    check(p, m)?;
    let pb = BigInt::from(p);
    Ok((1..=n_max)
        .map(|n| {
            let mut r = BigInt::from(m).pow(n) - BigInt::one();
            while (&r % &pb).is_zero() {
                r /= &pb;
            }
            r + 2
        })
        .collect())
}

/// The same count by searching `F_{p^k}` for the roots of `x^{m^n} = x`, where `k`
/// is the order of `p` modulo the prime-to-p part of `m^n - 1`.
pub fn artin_mazur_by_enumeration(p: u64, m: u64, n: u32) -> Result<u64> {
    check(p, m)?;
    let mut r = m.checked_pow(n).ok_or_else(|| Error::Validation("m^n overflows".into()))? - 1;
    while r % p == 0 {
        r /= p;
    }
    let mut k = 1u32;
    let mut pk = p % r.max(1);
    while r > 1 && pk != 1 {
        pk = pk * p % r;
        k += 1;
    }
    let field = FqField::new(p, k)?;
    let e = m.pow(n) as u128;
    Ok(2 + field.elements().skip(1).filter(|&x| field.pow(x, e) == x).count() as u64)
}
