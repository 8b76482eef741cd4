use thiserror::Error;

/// Errors raised by the exact, enumerative and analytic layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("requested {requested} terms but only {available} are known")]
    Precision { requested: usize, available: usize },
    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),
    #[error("enumeration needs {required} evaluations, budget is {budget}")]
    Resource { required: u128, budget: u128 },
    #[error("numerical failure: {0}")]
    Numeric(String),
    #[error("evaluation at a pole; nearest pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
