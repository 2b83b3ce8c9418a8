use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data (truth tables, vectors, records).
    #[error("invalid input: {0}")]
    Input(String),

    /// Arity outside what the representation or a measure supports.
    #[error("arity {arity} exceeds the limit of {limit} for {what}")]
    ArityLimit {
        arity: usize,
        limit: usize,
        what: &'static str,
    },

    /// Coordinate index outside `0..arity`.
    #[error("coordinate {coord} out of range for arity {arity}")]
    Coordinate { coord: usize, arity: usize },

    /// Parameters outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector lengths that do not match the system they are checked against.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Unknown strategy or check name.
    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownName {
        kind: &'static str,
        name: String,
        available: String,
    },

    /// Exact fixed-point arithmetic ran out of headroom.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
