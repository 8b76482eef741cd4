//! Numerical Grothendieck groups from an integer Euler pairing.

pub mod intmat;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use intmat::IntMatrix;

/// Gram matrix `chi[i][j] = χ(b_i, b_j)` of a generating set of `K_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGram")]
pub struct EulerGram {
    pub n: usize,
    #[serde(with = "intmat::int_serde::matrix")]
    pub chi: IntMatrix,
}

#[derive(Deserialize)]
struct RawGram {
    n: Option<usize>,
    #[serde(with = "intmat::int_serde::matrix")]
    chi: IntMatrix,
}

impl TryFrom<RawGram> for EulerGram {
    type Error = Error;
    fn try_from(r: RawGram) -> Result<Self> {
        let g = EulerGram::new(r.chi)?;
        match r.n {
            Some(n) if n != g.n => Err(Error::Dimension(format!("declared n = {n} but chi has {} rows", g.n))),
            _ => Ok(g),
        }
    }
}

impl EulerGram {
    pub fn new(chi: IntMatrix) -> Result<Self> {
        let n = chi.len();
        if let Some(r) = chi.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("gram row of length {} in a {n}x{n} matrix", r.len())));
        }
        Ok(EulerGram { n, chi })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::new(intmat::to_big(rows)).expect("square")
    }

    pub fn transpose(&self) -> EulerGram {
        EulerGram { n: self.n, chi: intmat::transpose(&self.chi, self.n) }
    }
}

/// Hermite basis of `{v : v^T χ = 0}`.
pub fn left_kernel(g: &EulerGram) -> IntMatrix {
    intmat::right_kernel(&intmat::transpose(&g.chi, g.n), g.n)
}

/// Hermite basis of `{v : χ v = 0}`.
pub fn right_kernel(g: &EulerGram) -> IntMatrix {
    intmat::right_kernel(&g.chi, g.n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumK0Report {
    pub n: usize,
    pub rank: usize,
    #[serde(with = "intmat::int_serde::matrix")]
    pub left_kernel_basis: IntMatrix,
    #[serde(with = "intmat::int_serde::matrix")]
    pub right_kernel_basis: IntMatrix,
    pub kernels_agree: bool,
    /// Rows of a surjection `Z^n -> Z^rank` whose kernel is the (right) kernel of χ.
    #[serde(with = "intmat::int_serde::matrix")]
    pub quotient_basis: IntMatrix,
    /// Smith diagonal of the kernel inclusion; all ones means the quotient is free.
    #[serde(with = "intmat::int_serde::vec")]
    pub kernel_smith_diagonal: Vec<BigInt>,
    pub warning: Option<String>,
}

/// `K_0 / Ker(χ)` presented as a free abelian group.
pub fn num_grothendieck(g: &EulerGram) -> NumK0Report {
    let left = left_kernel(g);
    let right = right_kernel(g);
    let kernels_agree = left == right;
    let warning = (!kernels_agree).then(|| {
        "left and right kernels of the pairing differ; quotienting by the right kernel".to_string()
    });
    let kernel = intmat::saturate(&right, g.n);
    let k = kernel.len();
    let (quotient_basis, kernel_smith_diagonal) = if k == 0 {
        (intmat::identity(g.n), Vec::new())
    } else {
        // p B q = diag(1..1) puts the kernel on the first k coordinates of p.
        let b = intmat::transpose(&kernel, g.n);
        let s = intmat::smith(&b, k);
        (s.p[k..].to_vec(), s.diagonal)
    };
    NumK0Report {
        n: g.n,
        rank: g.n - k,
        left_kernel_basis: left,
        right_kernel_basis: right,
        kernels_agree,
        quotient_basis,
        kernel_smith_diagonal,
        warning,
    }
}

/// `χ(O(i), O(j)) = C(n + j - i, n)` for the collection `O, ..., O(n)` on `P^n`.
pub fn beilinson_gram(n: usize) -> EulerGram {
    let chi = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| if j >= i { num_integer::binomial(BigInt::from(n + j - i), BigInt::from(n)) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    EulerGram { n: n + 1, chi }
}

/// Euler form `δ_ij - #(i -> j)` of an acyclic quiver; vertices are `0..vertices`.
pub fn quiver_gram(vertices: usize, arrows: &[(usize, usize)]) -> Result<EulerGram> {
    let mut chi = intmat::identity(vertices);
    let mut indegree = vec![0usize; vertices];
    let mut out = vec![Vec::new(); vertices];
    for &(s, t) in arrows {
        if s >= vertices || t >= vertices {
            return Err(Error::Validation(format!("arrow {s} -> {t} leaves the {vertices} vertices")));
        }
        chi[s][t] -= BigInt::one();
        indegree[t] += 1;
        out[s].push(t);
    }
    let mut ready: Vec<usize> = (0..vertices).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &t in &out[v] {
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    if seen < vertices {
        return Err(Error::Validation("quiver has an oriented cycle".into()));
    }
    Ok(EulerGram { n: vertices, chi })
}

/// Whether the right kernels of the two pairings coincide as lattices.
pub fn phi_pairing_check(g: &EulerGram, opposite: &EulerGram) -> Result<bool> {
    if g.n != opposite.n {
        return Err(Error::Validation(format!("pairings of rank {} and {}", g.n, opposite.n)));
    }
    Ok(right_kernel(g) == right_kernel(opposite))
}
