use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Whitten element: {0}")]
    InvalidElement(String),
    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("component count {0} is outside the supported range")]
    UnsupportedMu(usize),
    #[error("element set is not closed under the group law")]
    NotASubgroup,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid linking matrix: {0}")]
    InvalidMatrix(String),
    #[error("matrix is not in a supported structured form: {0}")]
    UnsupportedPattern(String),
    #[error("permutation {0} is outside G0")]
    NotInG0(String),
    #[error("PD parse error at `{token}`: {reason}")]
    PdParse { token: String, reason: String },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unknown link `{0}`")]
    UnknownLink(String),
    #[error("census validation failed:\n{0}")]
    CensusValidation(String),
    #[error("unsupported census schema version {0}")]
    SchemaVersion(u32),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
