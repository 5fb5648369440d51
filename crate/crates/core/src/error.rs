use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {kind}{rank}")]
    InvalidType { kind: String, rank: usize },

    #[error("pairing against the zero root")]
    ZeroRoot,

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NonIntegralWeight(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("torus restriction map is not surjective over Z (invariant factors {0:?})")]
    NonSurjectiveTau(Vec<i64>),

    #[error("root {0} appears more than once in the nilradical constraints")]
    DuplicateRoot(String),

    #[error("zero coefficient on root {0} in a constraint group")]
    ZeroCoefficient(String),

    #[error("constraint group mixes roots {first} and {second} of different torus weights")]
    MixedWeightConstraint { first: String, second: String },

    #[error("nilradical is not a subalgebra: [{left}, {right}] leaves it")]
    NotSubalgebra { left: String, right: String },

    #[error("subgroup is not spherical: {0}")]
    NotSpherical(String),

    #[error("no valid pi candidate for active root {0}")]
    NoValidCandidate(String),

    #[error("several pi candidates for active root {root}: {candidates:?}")]
    MultipleCandidates { root: String, candidates: Vec<usize> },

    #[error("active root axiom violated: {0}")]
    AxiomViolation(String),

    #[error("oracle does not support {0}")]
    UnsupportedType(String),

    #[error("predicted module dimension {predicted} exceeds cap {cap}")]
    DimensionCap { predicted: u64, cap: u64 },

    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("module has highest weight {got}, expected {expected}")]
    ModuleMismatch { expected: String, got: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    #[error("unknown preset {0}")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
