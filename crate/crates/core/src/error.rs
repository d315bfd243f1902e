use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid splitting type: {0}")]
    InvalidSplittingType(String),

    #[error("invalid C-vector: {0}")]
    InvalidCVector(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: usize, found: usize },

    #[error("comparison undefined: {0}")]
    ComparisonUndefined(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("no symbol of [{0}] is absent from the tableau")]
    NoAbsentSymbol(u32),

    #[error("splitting type has an empty staircase")]
    EmptyStaircase,

    #[error("no cover move at residue {residue} for {cvec}")]
    IllegalMove { residue: usize, cvec: String },

    #[error("partition {0} is not a {1}-core")]
    NotACore(String, usize),

    #[error("tableau is not {0}-uniform")]
    NotUniform(usize),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("{what} would exceed the guard of {limit}")]
    GuardExceeded { what: &'static str, limit: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("parameters outside the family hypotheses: {0}")]
    OutsideHypotheses(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
