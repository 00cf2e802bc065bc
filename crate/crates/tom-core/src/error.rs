use thiserror::Error;

/// Errors produced by group construction, subgroup enumeration, and the
/// catalog / marks file formats.
#[derive(Debug, Error)]
pub enum Error {
    /// Two permutations acting on point sets of different sizes were combined.
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// An image list did not describe a bijection on `0..degree`.
    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    /// Generator closure grew past the configured element bound.
    #[error("group closure exceeded {bound} elements")]
    GroupTooLarge { bound: usize },

    /// Subgroup enumeration grew past the configured subgroup bound.
    #[error("subgroup enumeration exceeded {bound} subgroups")]
    TooManySubgroups { bound: usize },

    /// A claimed subgroup is not closed under the group operation, or does
    /// not contain the identity.
    #[error("element set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },

    /// A multiplication table failed one of the group axioms.
    #[error("not a valid group: {reason}")]
    InvalidGroup { reason: String },

    /// A catalog or marks file failed to parse; `line` is 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A catalog record's generators do not generate a group of the declared
    /// order, or the same (order, id) pair appears twice.
    #[error("bad catalog record for group ({order}, {id}): {reason}")]
    BadCatalogRecord {
        order: usize,
        id: usize,
        reason: String,
    },

    /// No record with the requested (order, id) exists in the catalog.
    #[error("no group with order {order} and id {id} in catalog")]
    GroupNotFound { order: usize, id: usize },

    /// A marks file's contents disagree with the group it claims to describe.
    #[error("marks data mismatch: {reason}")]
    MarksMismatch { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
