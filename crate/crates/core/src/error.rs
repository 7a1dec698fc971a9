use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} exceeds rank {rank}")]
    RankViolation { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank {0} is outside the supported range 1..=26")]
    UnsupportedRank(usize),

    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("word {0:?} is not freely reduced")]
    NotReduced(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("invalid automorphism move: {0}")]
    InvalidMove(String),

    #[error("orbit closure exceeded cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("enumeration budget exceeded: {needed} words needed, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("graph has {vertices} vertices, limit is {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("vertex index {0} out of range")]
    NoSuchVertex(usize),

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("graph is not simple")]
    NotSimple,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
