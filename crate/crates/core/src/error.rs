use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degeneracy indices must be strictly decreasing")]
    NotNormalForm,
    #[error("dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("face data of {simplex}: {reason}")]
    BadFaces { simplex: String, reason: String },
    #[error("simplicial identity d{i} d{j} = d{k} d{i} fails on {simplex}", k = j - 1)]
    SimplicialIdentity { simplex: String, i: usize, j: usize },
    #[error("duplicate simplex name {0}")]
    DuplicateName(String),
    #[error("invalid simplex name {0:?}")]
    InvalidName(String),
    #[error("unknown simplex {0}")]
    UnknownSimplex(String),
    #[error("simplex does not belong to the simplicial set")]
    ForeignSimplex,
    #[error("map is not simplicial at {0}")]
    NotSimplicial(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("no factorisation: {0}")]
    NotFactorable(String),
    #[error("not a retractive space: {0}")]
    NotRetractive(String),
    #[error("not a map over the base: {0}")]
    NotOverBase(String),
    #[error("simplicial set must be reduced (one vertex)")]
    NotReduced,
    #[error("action check failed: {0}")]
    BadAction(String),
    #[error("requested dimension {0} lies beyond the truncation")]
    BeyondTruncation(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
