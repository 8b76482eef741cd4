//! Graded endomorphisms `(F+, F-)` and their zeta functions.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{Polynomial, RatMatrix, RationalFunction};
use crate::reconstruct::traces_to_series;
use crate::series::WittElement;

/// An endomorphism of a `Z/2`-graded vector space, given by its even and odd blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMotive")]
pub struct TracedMotive {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    f_plus: RatMatrix,
    f_minus: RatMatrix,
}

#[derive(Deserialize)]
struct RawMotive {
    #[serde(default)]
    label: Option<String>,
    f_plus: RatMatrix,
    f_minus: RatMatrix,
}

impl TryFrom<RawMotive> for TracedMotive {
    type Error = Error;

    fn try_from(r: RawMotive) -> Result<Self> {
        Ok(TracedMotive::new(r.f_plus, r.f_minus)?.with_label(r.label))
    }
}

/// Supertraces `tr(F+^n) - tr(F-^n)` for `n = 1..`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSequence {
    #[serde(with = "rational::rational_vec_serde")]
    pub values: Vec<Rational>,
}

/// Degrees of `Z(f;t)` before and after cancelling common factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaDegrees {
    pub uncancelled: i64,
    pub reduced: i64,
}

/// Both sides of `Z((f^-1)^v; 1/t) = (-t)^chi det(f) Z(f;t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalEquationReport {
    pub holds: bool,
    pub euler_characteristic: i64,
    #[serde(with = "rational::rational_serde")]
    pub determinant: Rational,
    /// `lhs / ((-t)^chi Z(f;t))` when that quotient is a constant.
    pub extracted_constant: Option<String>,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
}

impl TracedMotive {
    pub fn new(f_plus: RatMatrix, f_minus: RatMatrix) -> Result<Self> {
        for (name, m) in [("f_plus", &f_plus), ("f_minus", &f_minus)] {
            if !m.is_square() {
                return Err(Error::Dimension(format!("{name} is {}x{}", m.rows(), m.cols())));
            }
        }
        Ok(TracedMotive { label: None, f_plus, f_minus })
    }

    pub fn with_label(mut self, label: Option<String>) -> Self {
        self.label = label;
        self
    }

    pub fn empty() -> Self {
        TracedMotive { label: None, f_plus: RatMatrix::empty(), f_minus: RatMatrix::empty() }
    }

    /// The monoidal unit: identity on a one-dimensional even part.
    pub fn unit() -> Self {
        TracedMotive { label: None, f_plus: RatMatrix::identity(1), f_minus: RatMatrix::empty() }
    }

    pub fn f_plus(&self) -> &RatMatrix {
        &self.f_plus
    }

    pub fn f_minus(&self) -> &RatMatrix {
        &self.f_minus
    }

    pub fn d_plus(&self) -> usize {
        self.f_plus.rows()
    }

    pub fn d_minus(&self) -> usize {
        self.f_minus.rows()
    }

    /// `tr(id) = d+ - d-`.
    pub fn euler_characteristic(&self) -> i64 {
        self.d_plus() as i64 - self.d_minus() as i64
    }
}

fn power_traces(m: &RatMatrix, n_max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n_max);
    if m.rows() == 0 {
        return vec![Rational::zero(); n_max];
    }
    let mut p = m.clone();
    for n in 1..=n_max {
        out.push(p.trace().unwrap());
        if n < n_max {
            p = p.mul(m).unwrap();
        }
    }
    out
}

/// `tr(f^n)` for `n = 1..=n_max`.
pub fn trace_sequence(m: &TracedMotive, n_max: usize) -> TraceSequence {
    let plus = power_traces(&m.f_plus, n_max);
    let minus = power_traces(&m.f_minus, n_max);
    TraceSequence { values: plus.iter().zip(&minus).map(|(a, b)| a - b).collect() }
}

/// `exp(sum tr(f^n) t^n / n)` truncated at `precision`.
pub fn zeta_series(m: &TracedMotive, precision: usize) -> WittElement {
    let tr = trace_sequence(m, precision).values;
    WittElement::new(traces_to_series(&tr)).expect("exp has constant term 1")
}

fn uncancelled(m: &TracedMotive) -> (Polynomial, Polynomial) {
    (m.f_minus.reversed_char_poly().unwrap(), m.f_plus.reversed_char_poly().unwrap())
}

/// `det(1 - t F-) / det(1 - t F+)` in lowest terms.
pub fn zeta_rational(m: &TracedMotive) -> RationalFunction {
    let (num, den) = uncancelled(m);
    RationalFunction::new(num, den).expect("reversed characteristic polynomials are nonzero")
}

/// The uncancelled degree uses `deg det(1 - tF) = size of F`, so it is always `-tr(id)`;
/// the reduced degree is that of the fraction in lowest terms.
pub fn zeta_degrees(m: &TracedMotive) -> ZetaDegrees {
    let z = zeta_rational(m);
    ZetaDegrees { uncancelled: -m.euler_characteristic(), reduced: z.degree().unwrap_or(0) }
}

fn invertible_det(f: &RatMatrix, name: &str) -> Result<Rational> {
    let d = f.det()?;
    if d.is_zero() {
        return Err(Error::NotInvertible(format!("{name} is singular")));
    }
    Ok(d)
}

/// `det(F+) / det(F-)`.
pub fn determinant(m: &TracedMotive) -> Result<Rational> {
    Ok(invertible_det(&m.f_plus, "f_plus")? / invertible_det(&m.f_minus, "f_minus")?)
}

/// `(f^-1)^v`: each block replaced by its inverse transpose.
pub fn dual_inverse(m: &TracedMotive) -> Result<TracedMotive> {
    invertible_det(&m.f_plus, "f_plus")?;
    invertible_det(&m.f_minus, "f_minus")?;
    Ok(TracedMotive {
        label: m.label.as_ref().map(|l| format!("dual({l})")),
        f_plus: m.f_plus.inverse()?.transpose(),
        f_minus: m.f_minus.inverse()?.transpose(),
    })
}

/// Evaluates both sides of the functional equation exactly in `Q(t)`.
pub fn check_functional_equation(m: &TracedMotive) -> Result<FunctionalEquationReport> {
    let det = determinant(m)?;
    let chi = m.euler_characteristic();
    let lhs = zeta_rational(&dual_inverse(m)?).at_reciprocal();
    let sign = if chi % 2 == 0 { Rational::one() } else { -Rational::one() };
    let twist = RationalFunction::t_pow(chi).scale(&sign).mul(&zeta_rational(m));
    let rhs = twist.scale(&det);
    let extracted = lhs.div(&twist)?.as_constant();
    Ok(FunctionalEquationReport {
        holds: lhs == rhs,
        euler_characteristic: chi,
        determinant: det,
        extracted_constant: extracted.as_ref().map(rational::format_rational),
        lhs,
        rhs,
    })
}

/// Blockwise direct sum.
pub fn direct_sum(a: &TracedMotive, b: &TracedMotive) -> TracedMotive {
    TracedMotive {
        label: None,
        f_plus: a.f_plus.block_diag(&b.f_plus),
        f_minus: a.f_minus.block_diag(&b.f_minus),
    }
}

/// Graded tensor product: even part `(+ x +) + (- x -)`, odd part `(+ x -) + (- x +)`.
pub fn tensor(a: &TracedMotive, b: &TracedMotive) -> TracedMotive {
    TracedMotive {
        label: None,
        f_plus: a.f_plus.kronecker(&b.f_plus).block_diag(&a.f_minus.kronecker(&b.f_minus)),
        f_minus: a.f_plus.kronecker(&b.f_minus).block_diag(&a.f_minus.kronecker(&b.f_plus)),
    }
}

/// Checks `(-1)^d tr(f^n) = tr(f^{n+r})` wherever both indices are in range.
pub fn cy_periodicity_check(traces: &[Rational], d: i64, r: i64) -> Result<bool> {
    if r == 0 {
        return Err(Error::Validation("period r must be nonzero".into()));
    }
    let shift = r.unsigned_abs() as usize;
    if traces.len() <= shift {
        return Err(Error::Precondition(format!("need more than {shift} traces")));
    }
    let sign = if d.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
    Ok((0..traces.len() - shift).all(|i| {
        let (a, b) = if r > 0 { (i, i + shift) } else { (i + shift, i) };
        &sign * &traces[a] == traces[b]
    }))
}
