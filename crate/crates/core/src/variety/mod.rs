//! Point counting over finite fields and the zeta and L-functions built from it.

pub mod action;
pub mod artin_mazur;
pub mod count;
pub mod lfun;
pub mod multipoly;
pub mod weil;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::fq::is_prime;

pub use action::{CharacterTable, GroupAction};
pub use artin_mazur::{artin_mazur_by_enumeration, artin_mazur_traces};
pub use count::{
    closed_points, count_points, count_points_with, default_budget, twisted_count, zeta_from_counts, CountConfig,
    Strategy,
};
pub use lfun::{l_function, orbifold_zeta, LSeries, OrbifoldReport};
pub use multipoly::MultiPoly;
pub use weil::{weil_check, WeilReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Affine(usize),
    Projective(usize),
}

impl Ambient {
    pub fn nvars(self) -> usize {
        match self {
            Ambient::Affine(n) => n,
            Ambient::Projective(n) => n + 1,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Ambient::Affine(n) | Ambient::Projective(n) => n,
        }
    }
}

/// Common zero locus of integer polynomials reduced to `F_q`, `q = p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVariety")]
pub struct VarietySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub ambient: Ambient,
    pub p: u64,
    pub e: u32,
    pub equations: Vec<MultiPoly>,
    /// User assertion that the variety is smooth and proper; never verified.
    #[serde(default)]
    pub smooth: bool,
}

#[derive(Deserialize)]
struct RawVariety {
    #[serde(default)]
    label: Option<String>,
    ambient: Ambient,
    p: u64,
    #[serde(default = "one")]
    e: u32,
    #[serde(default)]
    equations: Vec<MultiPoly>,
    #[serde(default)]
    smooth: bool,
}

fn one() -> u32 {
    1
}

impl TryFrom<RawVariety> for VarietySpec {
    type Error = Error;

    fn try_from(r: RawVariety) -> Result<Self> {
        let mut v = VarietySpec::new(r.ambient, r.p, r.e, r.equations)?;
        v.label = r.label;
        v.smooth = r.smooth;
        Ok(v)
    }
}

impl VarietySpec {
    pub fn new(ambient: Ambient, p: u64, e: u32, equations: Vec<MultiPoly>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::Validation("extension degree must be at least 1".into()));
        }
        for eq in &equations {
            eq.validate(ambient.nvars())?;
            if matches!(ambient, Ambient::Projective(_)) && !eq.is_homogeneous_mod(p) {
                return Err(Error::Validation("projective equations must be homogeneous".into()));
            }
        }
        Ok(VarietySpec { label: None, ambient, p, e, equations, smooth: false })
    }

    pub fn projective_space(n: usize, p: u64, e: u32) -> Result<Self> {
        Ok(Self::new(Ambient::Projective(n), p, e, Vec::new())?.asserting_smooth())
    }

    pub fn asserting_smooth(mut self) -> Self {
        self.smooth = true;
        self
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    /// `q = p^e`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }
}
