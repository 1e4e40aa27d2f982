use thiserror::Error;

/// Errors raised by the neutrosophic algebra and its file formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} is outside the unit interval [0, 1]")]
    OutOfRange { value: f64 },

    #[error("unknown norm `{0}` (expected one of: drastic, bounded, einstein, algebraic, hamacher, minmax)")]
    UnknownNorm(String),

    #[error("unknown complement mode `{0}` (expected one of: identity_i, one_minus_i)")]
    UnknownComplementMode(String),

    #[error("label list must not be empty")]
    EmptyLabels,

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("expected {expected} values, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("cell ({row}, {column}): component {component} = {value} is outside [0, 1]")]
    InvalidCell {
        row: String,
        column: String,
        component: char,
        value: f64,
    },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("column count {0} is not a perfect square n*n with n >= 1")]
    NotBlockSquare(usize),

    #[error("expected {expected} decision triples, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
