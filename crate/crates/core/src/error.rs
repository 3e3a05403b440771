use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}`: {msg}")]
    FamilyParams { family: String, msg: String },

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("system is underdetermined (column rank {rank} < {cols})")]
    Underdetermined { rank: usize, cols: usize },

    #[error("matrix entry {0} is not in {{0, 1, -1}}")]
    NotSignMatrix(String),

    #[error("resource cap exceeded: {0}")]
    Cap(String),

    #[error("{0}")]
    Invalid(String),
}
