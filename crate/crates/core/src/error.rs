use thiserror::Error;

use crate::fields::Field;

/// Errors produced by the library.
///
/// Every variant carries enough context for a single-line diagnostic that
/// names the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("the zero square class has no Hilbert symbol")]
    ZeroSquareClass,

    #[error("{0} has no nontrivial Brauer class")]
    NoNontrivialBrauerClass(Field),

    #[error("denominator of {value} is not invertible in {field}")]
    NotInvertible { value: String, field: Field },

    #[error("quadratic form is degenerate (coefficient {index} vanishes)")]
    DegenerateForm { index: usize },

    #[error("Gram matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Gram matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("operation requires the real field, got {0}")]
    NotReal(Field),

    #[error("weight has length {got}, group {group} expects {expected}")]
    WeightLength { group: String, expected: usize, got: usize },

    #[error("root {root} is not isotropic under the supertrace pairing")]
    NotIsotropic { root: String },

    #[error("weight {weight} is not dominant for {group}")]
    NotInXflat { group: String, weight: String },

    #[error("{0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse {what} from {token:?}")]
    Parse { what: &'static str, token: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(what: &'static str, token: impl Into<String>) -> Self {
        Error::Parse {
            what,
            token: token.into(),
        }
    }
}
