use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("input is not a tree")]
    NotATree,

    #[error("input is not tree-like")]
    NotTreeLike,

    #[error("invalid Hoffman graph: {0}")]
    InvalidHoffman(String),

    #[error("direct sum is not defined: {0}")]
    DirectSum(String),

    #[error("stripped sum is not defined: {0}")]
    StrippedSum(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("representation index mismatch: {0}")]
    IndexMismatch(String),

    #[error("representation is not in fat-unit-coordinate form")]
    NotNormalForm,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no valid attachment sequence found within the search budget")]
    SaturationFailed,

    #[error("malformed input: {0}")]
    Malformed(String),
}
