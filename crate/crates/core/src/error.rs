use thiserror::Error;

/// Errors shared across the whole engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("objects live over different algebras: {0}")]
    Category(String),

    #[error("quotient is not finite dimensional (relation ideal may not be admissible): {0}")]
    NotFiniteDimensional(String),

    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("argument outside the domain of the functor: {0}")]
    NotInDomain(String),

    #[error("endomorphism ring does not split over the rationals: {0}")]
    NonSplitEndomorphism(String),

    #[error("module is not faithful over its algebra: {0}")]
    NotFaithful(String),

    #[error("shift out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("could not recover a quiver presentation: {0}")]
    Presentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
