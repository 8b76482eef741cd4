//! Artin L-series from twisted point counts, and orbifold zeta functions.

use std::collections::HashMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::action::{CharacterTable, GroupAction};
use super::count::{twisted_count_inner, CountConfig, FieldCache};
use super::VarietySpec;
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{CycloElement, CyclotomicField};
use crate::reconstruct::traces_to_series;
use crate::series::TruncatedSeries;

/// A truncated series with coefficients in `Q(zeta_m)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LSeries {
    pub m: u32,
    pub traces: Vec<CycloElement>,
    pub coeffs: Vec<CycloElement>,
    /// The same series when every coefficient is rational.
    pub rational: Option<TruncatedSeries>,
    /// Coefficients under `zeta_m -> exp(2 pi i / m)`, as `[re, im]`.
    pub complex: Vec<[f64; 2]>,
}

fn cyclo_exp(k: &CyclotomicField, traces: &[CycloElement]) -> Vec<CycloElement> {
    let mut b = vec![k.one()];
    for n in 1..=traces.len() {
        let mut s = k.zero();
        for j in 1..=n {
            s = k.add(&s, &k.mul(&traces[j - 1], &b[n - j]));
        }
        b.push(k.scale(&s, &Rational::new(1.into(), (n as i64).into())));
    }
    b
}

/// `L_{X,G,chi}(t) = exp(sum_n (1/|G|) sum_g chi(g^-1) N_n(g) t^n / n)` where
/// `N_n(g) = #{x : g(Fr^n(x)) = x}`.
pub fn l_function(
    v: &VarietySpec,
    action: &GroupAction,
    character: &CharacterTable,
    n_max: u32,
    cfg: &CountConfig,
) -> Result<LSeries> {
    let k = character.validate(action)?;
    let mut cache = FieldCache::default();
    let order = Rational::new(1.into(), (action.len() as i64).into());
    let mut traces = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut s = k.zero();
        for g in 0..action.len() {
            let c = twisted_count_inner(v, action, None, g, n, cfg, &mut cache)?;
            let chi = character.value(&k, action.inverse(g));
            s = k.add(&s, &k.scale(&chi, &rational::int(c as i64)));
        }
        traces.push(k.scale(&s, &order));
    }
    let coeffs = cyclo_exp(&k, &traces);
    let rational = coeffs
        .iter()
        .map(|c| k.as_rational(c))
        .collect::<Option<Vec<Rational>>>()
        .map(|c| TruncatedSeries::new(c, n_max as usize));
    let complex = coeffs.iter().map(|c| k.to_complex(c)).map(|z| [z.re, z.im]).collect();
    Ok(LSeries { m: k.order(), traces, coeffs, rational, complex })
}

/// One factor `L_{X^g, C(g)}` of the orbifold product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldFactor {
    pub representative: usize,
    pub class_size: usize,
    pub centralizer_size: usize,
    #[serde(with = "rational::rational_vec_serde")]
    pub traces: Vec<Rational>,
    pub series: TruncatedSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldReport {
    pub factors: Vec<OrbifoldFactor>,
    /// `prod_{[g]} L_{X^g, C(g)}(t)`.
    pub product: TruncatedSeries,
    /// `exp(sum_n tr_n t^n / n)` with the class-sum trace formula.
    pub direct: TruncatedSeries,
    pub routes_agree: bool,
}

/// Orbifold zeta function computed as a product over conjugacy classes and,
/// separately, from the summed trace formula.
pub fn orbifold_zeta(v: &VarietySpec, action: &GroupAction, n_max: u32, cfg: &CountConfig) -> Result<OrbifoldReport> {
    if action.len() as u64 % v.p == 0 {
        return Err(Error::Validation(format!("|G| = {} is divisible by the characteristic {}", action.len(), v.p)));
    }
    let mut cache = FieldCache::default();
    let mut counts: HashMap<(usize, usize, u32), u64> = HashMap::new();
    let classes = action.conjugacy_classes();
    for class in &classes {
        let g = class[0];
        for h in action.centralizer(g) {
            for n in 1..=n_max {
                counts.insert((g, h, n), twisted_count_inner(v, action, Some(g), h, n, cfg, &mut cache)?);
            }
        }
    }
    let class_trace = |g: usize, n: u32| -> Rational {
        let c = action.centralizer(g);
        let s: u64 = c.iter().map(|&h| counts[&(g, h, n)]).sum();
        Rational::new((s as i64).into(), (c.len() as i64).into())
    };

    let mut factors = Vec::new();
    let mut product = TruncatedSeries::one(n_max as usize);
    for class in &classes {
        let g = class[0];
        let traces: Vec<Rational> = (1..=n_max).map(|n| class_trace(g, n)).collect();
        let series = traces_to_series(&traces);
        product = product.mul(&series);
        factors.push(OrbifoldFactor {
            representative: g,
            class_size: class.len(),
            centralizer_size: action.centralizer(g).len(),
            traces,
            series,
        });
    }

    let direct_traces: Vec<Rational> = (1..=n_max)
        .map(|n| {
            classes.iter().fold(Rational::zero(), |acc, class| {
                let g = class[0];
                let c = action.centralizer(g);
                let inner: Rational = c.iter().map(|&h| rational::int(counts[&(g, h, n)] as i64)).sum();
                acc + inner / rational::int(c.len() as i64)
            })
        })
        .collect();
    let direct = traces_to_series(&direct_traces);
    let routes_agree = product == direct;
    Ok(OrbifoldReport { factors, product, direct, routes_agree })
}
