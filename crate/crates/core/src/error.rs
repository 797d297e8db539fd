use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input such as an empty part list or an out-of-range index.
    #[error("invalid input: {0}")]
    Validation(String),

    /// An operation was called outside its documented domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The hypotheses of the result being evaluated do not hold for this system.
    #[error("not applicable: {0}")]
    Applicability(String),

    /// The requested inequality never holds eventually for this system.
    #[error("classification: {0}")]
    Classification(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("series has zero constant term and cannot be inverted")]
    SingularSeries,

    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
