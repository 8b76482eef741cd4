//! Zeta functions of endomorphisms of traced motives, finite-field point counts,
//! big Witt vectors, Hasse-Weil analytics, numerical Grothendieck groups and
//! motivic measures, computed exactly over the rationals where possible.

pub mod analytic;
pub mod error;
pub mod exact;
pub mod measures;
pub mod motive;
pub mod numk0;
pub mod reconstruct;
pub mod series;
pub mod variety;

pub use error::{Error, Result};
pub use exact::{CycloElement, FqElement, FqField, Polynomial, RatMatrix, Rational, RationalFunction};
pub use measures::{EpsilonValue, MeasureClass, WitnessReport};
pub use motive::{FunctionalEquationReport, TraceSequence, TracedMotive, ZetaDegrees};
pub use numk0::{EulerGram, NumK0Report};
pub use reconstruct::{Reconstruction, ReconstructionResult};
pub use series::{TruncatedSeries, WittElement};
pub use variety::{Ambient, CharacterTable, GroupAction, MultiPoly, VarietySpec, WeilReport};
