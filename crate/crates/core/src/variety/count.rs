//! Exhaustive and fibered point counting, twisted counts and closed points.
//!
//! Projective space is enumerated stratum by stratum: stratum `k` holds the points
//! whose first nonzero coordinate is `x_k = 1`. Within a stratum the free
//! coordinates run over the field in log order, and the index space is split into
//! contiguous chunks across threads, so counts do not depend on the thread count.

use std::collections::HashMap;

use num_traits::Zero;

use super::action::GroupAction;
use super::multipoly::CompiledPoly;
use super::{Ambient, VarietySpec};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{FqElement, FqField};
use crate::reconstruct::traces_to_series;
use crate::series::WittElement;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Budget from `MOTIVIC_ZETA_BUDGET`, else `10^7` evaluations.
pub fn default_budget() -> u128 {
    std::env::var("MOTIVIC_ZETA_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Exhaustive when it fits the budget, fibered otherwise.
    #[default]
    Auto,
    /// Evaluate every equation at every point.
    Exhaustive,
    /// Enumerate all but one coordinate and count roots of the gcd in the last.
    Fibered,
}

#[derive(Clone, Debug)]
pub struct CountConfig {
    pub budget: u128,
    pub threads: usize,
    pub strategy: Strategy,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            budget: default_budget(),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            strategy: Strategy::Auto,
        }
    }
}

/// Extension fields `F_{p^k}` built on demand.
#[derive(Default)]
pub(crate) struct FieldCache {
    fields: HashMap<(u64, u32), FqField>,
}

impl FieldCache {
    pub(crate) fn get(&mut self, p: u64, k: u32) -> Result<FqField> {
        if let Some(f) = self.fields.get(&(p, k)) {
            return Ok(f.clone());
        }
        let f = FqField::new(p, k)?;
        self.fields.insert((p, k), f.clone());
        Ok(f)
    }
}

pub(crate) struct Stratum {
    pub one: Option<usize>,
    pub free: Vec<usize>,
}

pub(crate) fn strata(ambient: Ambient) -> Vec<Stratum> {
    match ambient {
        Ambient::Affine(n) => vec![Stratum { one: None, free: (0..n).collect() }],
        Ambient::Projective(n) => (0..=n).map(|k| Stratum { one: Some(k), free: (k + 1..=n).collect() }).collect(),
    }
}

fn qpow(q: u64, k: usize) -> u128 {
    (q as u128).saturating_pow(k as u32)
}

pub(crate) fn ambient_size(ambient: Ambient, q: u64) -> u128 {
    strata(ambient).iter().map(|s| qpow(q, s.free.len())).fold(0u128, u128::saturating_add)
}

fn fibered_cost(ambient: Ambient, q: u64) -> u128 {
    strata(ambient)
        .iter()
        .map(|s| qpow(q, s.free.len().saturating_sub(1)))
        .fold(0u128, u128::saturating_add)
}

/// Sums `f(lo, hi)` over a partition of `0..total` into per-thread chunks.
pub(crate) fn par_sum<F>(total: u128, threads: usize, f: F) -> u64
where
    F: Fn(u128, u128) -> u64 + Sync,
{
    let threads = threads.max(1) as u128;
    if threads == 1 || total < 1024 {
        return f(0, total);
    }
    let chunk = total.div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
            .filter(|(lo, hi)| lo < hi)
            .map(|(lo, hi)| {
                let f = &f;
                s.spawn(move || f(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("counting worker panicked")).sum()
    })
}

/// Visits the points with index in `lo..hi` of the grid spanned by `vars`,
/// writing coordinates into `point` (other entries are left untouched).
pub(crate) fn scan<V>(field: &FqField, point: &mut [FqElement], vars: &[usize], lo: u128, hi: u128, mut visit: V)
where
    V: FnMut(&[FqElement]),
{
    let q = field.size();
    let mut digits = vec![0u64; vars.len()];
    let mut r = lo;
    for (d, &v) in digits.iter_mut().zip(vars) {
        *d = (r % q as u128) as u64;
        r /= q as u128;
        point[v] = field.from_digit(*d);
    }
    for _ in lo..hi {
        visit(point);
        for (d, &v) in digits.iter_mut().zip(vars) {
            *d += 1;
            if *d == q {
                *d = 0;
                point[v] = FqElement::ZERO;
            } else {
                point[v] = field.from_digit(*d);
                break;
            }
        }
    }
}

pub(crate) fn base_point(nvars: usize, s: &Stratum) -> Vec<FqElement> {
    let mut p = vec![FqElement::ZERO; nvars];
    if let Some(k) = s.one {
        p[k] = FqElement::ONE;
    }
    p
}

fn count_exhaustive(v: &VarietySpec, field: &FqField, eqs: &[CompiledPoly], threads: usize) -> u64 {
    let nvars = v.ambient.nvars();
    strata(v.ambient)
        .iter()
        .map(|s| {
            par_sum(qpow(field.size(), s.free.len()), threads, |lo, hi| {
                let mut pt = base_point(nvars, s);
                let mut c = 0u64;
                scan(field, &mut pt, &s.free, lo, hi, |x| {
                    if eqs.iter().all(|e| e.eval(field, x).is_zero()) {
                        c += 1;
                    }
                });
                c
            })
        })
        .sum()
}

fn count_fibered(v: &VarietySpec, field: &FqField, eqs: &[CompiledPoly], threads: usize) -> u64 {
    let nvars = v.ambient.nvars();
    strata(v.ambient)
        .iter()
        .map(|s| {
            let Some(&var) = s.free.iter().min_by_key(|&&i| eqs.iter().map(|e| e.degree_in(i)).max().unwrap_or(0))
            else {
                let pt = base_point(nvars, s);
                return u64::from(eqs.iter().all(|e| e.eval(field, &pt).is_zero()));
            };
            let others: Vec<usize> = s.free.iter().copied().filter(|&i| i != var).collect();
            par_sum(qpow(field.size(), others.len()), threads, |lo, hi| {
                let mut pt = base_point(nvars, s);
                let mut polys: Vec<Vec<FqElement>> = vec![Vec::new(); eqs.len()];
                let mut c = 0u64;
                scan(field, &mut pt, &others, lo, hi, |x| {
                    for (e, buf) in eqs.iter().zip(polys.iter_mut()) {
                        e.specialize(field, x, var, buf);
                    }
                    c += match polys.len() {
                        0 => field.size(),
                        1 => field.count_distinct_roots(&polys[0]),
                        _ => {
                            let g = field.poly_gcd_all(&polys);
                            field.count_distinct_roots(&g)
                        }
                    };
                });
                c
            })
        })
        .sum()
}

/// `#X(F_{q^n})` with an explicit configuration.
pub fn count_points_with(v: &VarietySpec, n: u32, cfg: &CountConfig) -> Result<u64> {
    if n == 0 {
        return Err(Error::Validation("extension degree n must be at least 1".into()));
    }
    let q_n = (v.p as u128).checked_pow(v.e * n).unwrap_or(u128::MAX);
    let q_n = u64::try_from(q_n).unwrap_or(u64::MAX);
    let exhaustive = ambient_size(v.ambient, q_n);
    let fibered = fibered_cost(v.ambient, q_n);
    let strategy = match cfg.strategy {
        Strategy::Auto if exhaustive <= cfg.budget => Strategy::Exhaustive,
        Strategy::Auto => Strategy::Fibered,
        s => s,
    };
    let required = if strategy == Strategy::Exhaustive { exhaustive } else { fibered };
    if required > cfg.budget {
        return Err(Error::Resource { required, budget: cfg.budget });
    }
    let field = FqField::new(v.p, v.e * n)?;
    let eqs: Vec<CompiledPoly> = v.equations.iter().map(|e| e.compile(&field)).collect();
    Ok(match strategy {
        Strategy::Exhaustive => count_exhaustive(v, &field, &eqs, cfg.threads),
        _ => count_fibered(v, &field, &eqs, cfg.threads),
    })
}

/// `#X(F_{q^n})` under the default configuration.
pub fn count_points(v: &VarietySpec, n: u32) -> Result<u64> {
    count_points_with(v, n, &CountConfig::default())
}

/// All points of `X(F_{q^n})`, for desk-scale checks.
pub(crate) fn list_points(v: &VarietySpec, field: &FqField, budget: u128) -> Result<Vec<Vec<FqElement>>> {
    let required = ambient_size(v.ambient, field.size());
    if required > budget {
        return Err(Error::Resource { required, budget });
    }
    let eqs: Vec<CompiledPoly> = v.equations.iter().map(|e| e.compile(field)).collect();
    let nvars = v.ambient.nvars();
    let mut out = Vec::new();
    for s in strata(v.ambient) {
        let mut pt = base_point(nvars, &s);
        scan(field, &mut pt, &s.free, 0, qpow(field.size(), s.free.len()), |x| {
            if eqs.iter().all(|e| e.eval(field, x).is_zero()) {
                out.push(x.to_vec());
            }
        });
    }
    Ok(out)
}

/// `#{x in X : h(Fr^n(x)) = x}`, optionally restricted to the fixed locus of `fixed_by`.
pub(crate) fn twisted_count_inner(
    v: &VarietySpec,
    action: &GroupAction,
    fixed_by: Option<usize>,
    h: usize,
    n: u32,
    cfg: &CountConfig,
    cache: &mut FieldCache,
) -> Result<u64> {
    if n == 0 {
        return Err(Error::Validation("extension degree n must be at least 1".into()));
    }
    let k = action.order(h) as u32;
    let degree = v.e * n * k;
    let size = (v.p as u128).checked_pow(degree).unwrap_or(u128::MAX);
    let required = ambient_size(v.ambient, u64::try_from(size).unwrap_or(u64::MAX));
    if required > cfg.budget {
        return Err(Error::Resource { required, budget: cfg.budget });
    }
    let field = cache.get(v.p, degree)?;
    let eqs: Vec<CompiledPoly> = v.equations.iter().map(|e| e.compile(&field)).collect();
    let hm = action.compile(h, &field);
    let gm = fixed_by.map(|g| action.compile(g, &field));
    let projective = matches!(v.ambient, Ambient::Projective(_));
    let order = field.size() - 1;
    let frob = (0..v.e * n).fold(1u128, |acc, _| acc * v.p as u128 % order as u128) as u64;
    let nvars = v.ambient.nvars();
    Ok(strata(v.ambient)
        .iter()
        .map(|s| {
            par_sum(qpow(field.size(), s.free.len()), cfg.threads, |lo, hi| {
                let mut pt = base_point(nvars, s);
                let mut fr = vec![FqElement::ZERO; nvars];
                let mut img = vec![FqElement::ZERO; nvars];
                let mut c = 0u64;
                scan(&field, &mut pt, &s.free, lo, hi, |x| {
                    for (d, &xi) in fr.iter_mut().zip(x) {
                        *d = match xi.log() {
                            None => FqElement::ZERO,
                            Some(l) => field.from_log(l as u64 * frob),
                        };
                    }
                    apply(&field, &hm, &fr, &mut img);
                    if !same_point(&field, &img, x, projective) {
                        return;
                    }
                    if let Some(gm) = &gm {
                        apply(&field, gm, x, &mut img);
                        if !same_point(&field, &img, x, projective) {
                            return;
                        }
                    }
                    if eqs.iter().all(|e| e.eval(&field, x).is_zero()) {
                        c += 1;
                    }
                });
                c
            })
        })
        .sum())
}

pub(crate) fn apply(field: &FqField, m: &[Vec<FqElement>], x: &[FqElement], out: &mut [FqElement]) {
    for (row, o) in m.iter().zip(out.iter_mut()) {
        *o = row.iter().zip(x).fold(FqElement::ZERO, |acc, (a, b)| field.add(acc, field.mul(*a, *b)));
    }
}

/// Equality of points; projectively, `x` is normalized with first nonzero coordinate 1.
pub(crate) fn same_point(field: &FqField, y: &[FqElement], x: &[FqElement], projective: bool) -> bool {
    if !projective {
        return y == x;
    }
    let k = x.iter().position(|c| !c.is_zero()).expect("projective points are nonzero");
    let s = y[k];
    !s.is_zero() && y.iter().zip(x).all(|(a, b)| *a == field.mul(s, *b))
}

/// `#{x in X(F̄_q) : g(Fr^n(x)) = x}`, counted in `X(F_{q^{n ord(g)}})`.
pub fn twisted_count(v: &VarietySpec, action: &GroupAction, g: usize, n: u32, cfg: &CountConfig) -> Result<u64> {
    twisted_count_inner(v, action, None, g, n, cfg, &mut FieldCache::default())
}

/// `exp(sum #X(F_{q^n}) t^n / n)` to precision `n_max`.
pub fn zeta_from_counts(v: &VarietySpec, n_max: u32, cfg: &CountConfig) -> Result<WittElement> {
    let counts = (1..=n_max).map(|n| count_points_with(v, n, cfg).map(|c| rational::int(c as i64))).collect::<Result<Vec<Rational>>>()?;
    Ok(WittElement::new(traces_to_series(&counts)).expect("exp has constant term 1"))
}

fn mobius(mut n: u32) -> i64 {
    let mut m = 1i64;
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            m = -m;
        }
        d += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Closed points of degree `1..=d_max` by Möbius inversion of the point counts.
pub fn closed_points(v: &VarietySpec, d_max: u32, cfg: &CountConfig) -> Result<Vec<u64>> {
    let counts = (1..=d_max).map(|n| count_points_with(v, n, cfg)).collect::<Result<Vec<u64>>>()?;
    Ok(closed_points_from_counts(&counts))
}

pub fn closed_points_from_counts(counts: &[u64]) -> Vec<u64> {
    (1..=counts.len() as u32)
        .map(|d| {
            let s: i128 = (1..=d).filter(|e| d % e == 0).map(|e| mobius(d / e) as i128 * counts[e as usize - 1] as i128).sum();
            debug_assert!(s >= 0 && s % d as i128 == 0);
            (s / d as i128) as u64
        })
        .collect()
}

/// `prod_d (1 - t^d)^{-B_d}` to precision `n`.
pub fn euler_product(closed: &[u64], precision: usize) -> WittElement {
    let mut acc = crate::series::TruncatedSeries::one(precision);
    for (i, &b) in closed.iter().enumerate() {
        let d = i + 1;
        if d > precision {
            break;
        }
        let mut c = vec![Rational::zero(); precision + 1];
        c[0] = rational::int(1);
        c[d] = rational::int(-1);
        let factor = crate::series::TruncatedSeries::new(c, precision).inverse().unwrap();
        for _ in 0..b {
            acc = acc.mul(&factor);
        }
    }
    WittElement::new(acc).expect("constant term 1")
}
