use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RingError {
    #[error("cannot parse {input:?} as an element of {ring}")]
    Parse { ring: String, input: String },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("invalid structure constants: {0}")]
    BadStructureConstants(String),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MonoidError {
    #[error("dimension mismatch: expected rank {expected}, got a vector of length {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("content is undefined for the zero element")]
    ZeroElement,
    #[error("{0:?} is not a member of the monoid")]
    NotMember(Vec<i64>),
    #[error("membership of {0:?} is undecidable under the search bounds")]
    UndecidableUnderBounds(Vec<i64>),
    #[error("the monoid contains the line through {0:?}")]
    HasUnits(Vec<i64>),
    #[error("the monoid is not normal: {multiple} * {vector:?} is a member but {vector:?} is not")]
    NotNormal { vector: Vec<i64>, multiple: i64 },
    #[error("weight {0:?} is not strictly positive on the nonzero members")]
    WeightNotPositive(Vec<i64>),
    #[error("the monoid description is empty or inconsistent: {0}")]
    BadDescription(String),
    #[error("ideal generator {0:?} is zero or not a member of the monoid")]
    BadIdealGenerator(Vec<i64>),
    #[error("{0:?} is not a ray of this truncation")]
    UnknownRay(Vec<i64>),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum WittError {
    #[error("operands live on different truncations or coefficient rings")]
    BaseMismatch,
    #[error("{0:?} is not a nonzero member of the truncation")]
    NotInTruncation(Vec<i64>),
    #[error("ghost component at {eta:?} is not divisible by {divisor} in the coefficient ring")]
    NonExactDivision { eta: Vec<i64>, divisor: u64 },
    #[error("operator index must be positive, got {0}")]
    NonPositiveIndex(i64),
    #[error("universal polynomial for index {index} has a non-integral coefficient")]
    NonIntegral { index: u64 },
    #[error("the action on Γ-degree 0 is undefined")]
    DegreeZero,
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum HomologyError {
    #[error("cell ({n}, {eta:?}) has dimension {dim}, above the cap {cap}")]
    CellTooLarge { n: usize, eta: Option<Vec<i64>>, dim: usize, cap: usize },
    #[error("cyclic homology is only supported in characteristic 0, got characteristic {0}")]
    PositiveCharacteristic(u64),
    #[error("Kähler differentials require a commutative algebra")]
    NotCommutative,
    #[error("the algebras are defined over different truncations or fields")]
    Mismatch,
    #[error("{0:?} is not a Γ-degree of this algebra")]
    UnknownDegree(Vec<i64>),
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error(transparent)]
    Witt(#[from] WittError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum KGroupError {
    #[error("r = {r} exceeds n = {n}")]
    RankTooLarge { n: usize, r: usize },
    #[error("parameter {0} must be positive")]
    NonPositive(&'static str),
}
