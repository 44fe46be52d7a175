//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A cyclotomic computation would need a conductor beyond the configured cap.
    #[error("conductor {needed} exceeds cap {cap}")]
    ConductorCap { needed: u64, cap: u64 },

    /// An identity the theory guarantees failed to verify; indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// The request falls outside the implemented fragment.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
