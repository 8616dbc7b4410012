use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid vertex id {0}")]
    InvalidVertex(usize),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("invalid edge id {0}")]
    InvalidEdge(usize),
    #[error("loop at vertex `{0}` is not allowed in a simple graph")]
    Loop(String),
    #[error("parallel edge `{0}`-`{1}` is not allowed in a simple graph")]
    ParallelEdge(String, String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("cycle length must be odd and at least 3, got {0}")]
    InvalidCycleLength(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex `{0}` has odd degree {1}")]
    OddDegree(String, usize),
    #[error("cycles share a vertex")]
    CyclesNotDisjoint,
    #[error("walk is not valid: {0}")]
    InvalidWalk(String),
    #[error("walk has odd length {0}; only even closed walks define binomials")]
    OddWalk(usize),
    #[error("walk binomial cancels to zero")]
    ZeroBinomial,
    #[error("vector length {found} does not match configuration with {expected} columns")]
    LengthMismatch { expected: usize, found: usize },
    #[error("monomial exponent vector has a negative entry")]
    NegativeExponent,
    #[error("integer overflow in exponent arithmetic")]
    Overflow,
    #[error("{what} enumeration exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("unknown block id {0}")]
    UnknownBlock(usize),
    #[error("block {block} is not an odd cycle; the cactus fast path needs an odd cactus")]
    NotOddCactus { block: usize },
    #[error("invalid circuit subgraph: {0}")]
    InvalidCircuit(String),
    #[error("vector is not a circuit of the configuration: {0}")]
    NotACircuit(String),
    #[error("lattice inconsistency: {0}")]
    Lattice(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Unsupported(String),
}
