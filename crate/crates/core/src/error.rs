use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of its domain: {0}")]
    NotAPermutation(String),

    #[error("degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("degree {n} exceeds the supported maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("zero-extended permutation does not fix 0")]
    ZeroNotFixed,

    #[error("invalid cut points ({i},{j},{k}) for n = {n}")]
    InvalidCuts { n: usize, i: usize, j: usize, k: usize },

    #[error("exponent {e} out of range 1..={max}")]
    ExponentOutOfRange { e: usize, max: usize },

    #[error("rotation {r} out of range 0..={n}")]
    RotationOutOfRange { r: usize, n: usize },

    #[error("cannot combine left- and right-invariant elements")]
    ConventionMismatch,

    #[error("{what}: n = {n} exceeds bound {max}")]
    BoundExceeded { what: &'static str, n: usize, max: usize },

    #[error("vertex {0} appears in both parts")]
    Overlap(usize),

    #[error("vertex {index} out of range for a graph on {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
