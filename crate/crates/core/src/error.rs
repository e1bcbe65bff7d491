use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element is not a member of the ambient group")]
    NotMember,

    #[error("subgroup does not lie in the ambient group")]
    NotASubgroup,

    #[error("subgroups belong to different parent groups")]
    ForeignSubgroup,

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("{prime} does not divide the group order {order}")]
    PrimeNotDividing { prime: u64, order: u64 },

    #[error("{what} {value} exceeds the configured cap {cap}")]
    Resource { what: &'static str, value: u64, cap: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("order mismatch: expected {expected}, constructed group has order {actual}")]
    OrderMismatch { expected: u64, actual: u64 },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid formation: {0}")]
    InvalidFormation(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by configured resource caps rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
