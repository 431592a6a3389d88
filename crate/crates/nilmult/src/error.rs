//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by group construction, basis generation, collection, and
/// bound evaluation.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument was outside the mathematical domain of the operation.
    #[error("argument out of domain: {0}")]
    Domain(String),

    /// A configurable resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    /// A multiplication table failed validation.
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    /// A permutation generator was not a bijection on its domain.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// An element set was not closed under the group multiplication.
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    /// A quotient was requested by a non-normal subgroup.
    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    /// A bound evaluator requires a p-group.
    #[error("group is not a p-group")]
    NotPGroup,

    /// A bound evaluator requires a nilpotent group.
    #[error("group is not nilpotent")]
    NotNilpotent,

    /// A bound evaluator requires nilpotency class at least `needed`.
    #[error("nilpotency class {actual} is below the required class {needed}")]
    ClassTooSmall { needed: usize, actual: usize },

    /// Two collected words referred to different free nilpotent groups.
    #[error("basis mismatch: ({0}, {1}) vs ({2}, {3})")]
    BasisMismatch(u32, u32, u32, u32),

    /// A group description (file or builtin name) could not be parsed.
    #[error("malformed group description: {0}")]
    MalformedGroup(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable code, stable across releases; used by the CLI
    /// diagnostic stream.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::CapExceeded(_) => "cap-exceeded",
            Error::InvalidTable(_) => "invalid-table",
            Error::InvalidPermutation(_) => "invalid-permutation",
            Error::NotASubgroup(_) => "not-a-subgroup",
            Error::NotNormal => "not-normal",
            Error::NotPGroup => "not-a-p-group",
            Error::NotNilpotent => "not-nilpotent",
            Error::ClassTooSmall { .. } => "class-too-small",
            Error::BasisMismatch(..) => "basis-mismatch",
            Error::MalformedGroup(_) => "bad-group-file",
        }
    }
}
