use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid semigroup <{alpha},{beta}>: {reason}")]
    InvalidSemigroup {
        alpha: i64,
        beta: i64,
        reason: &'static str,
    },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("not a canonical lean set: {0}")]
    NotCanonical(String),

    #[error("semimodules live over different semigroups")]
    SemigroupMismatch,

    #[error("invalid path matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    /// Exactly one cyclic rotation of a path matrix must lie below the
    /// diagonal; anything else is an internal inconsistency.
    #[error("{count} cyclic rotations decode to a lean set (expected exactly one)")]
    RotationNotUnique { count: usize },

    #[error("operation needs at least {needed} generators, got {got}")]
    TooFewGenerators { needed: usize, got: usize },

    #[error("wrong parity: {0}")]
    WrongParity(String),

    #[error("matrix is not in a recognised selfdual form")]
    NotSelfdualForm,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
