use thiserror::Error;

/// Errors raised by constructions, transforms and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the configured limit {limit}")]
    FieldTooLarge { p: u64, k: u32, limit: u64 },
    #[error("polynomial {0:?} is not a monic irreducible modulus")]
    NotIrreducible(Vec<u64>),
    #[error("element {0:?} does not belong to this field")]
    ForeignElement(Vec<u64>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no discrete logarithm")]
    LogOfZero,
    #[error("element {0:?} is not primitive")]
    NotPrimitive(Vec<u64>),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("a group needs at least one cyclic factor, each of order at least 2 (got {0:?})")]
    InvalidGroup(Vec<u64>),
    #[error("element {element:?} does not belong to the group with moduli {moduli:?}")]
    InvalidElement { element: Vec<u64>, moduli: Vec<u64> },
    #[error("duplicate element {0:?}")]
    DuplicateElement(Vec<u64>),
    #[error("moduli {0:?} are not pairwise coprime")]
    NotCoprime(Vec<u64>),
    #[error("expected a cyclic group of order {expected}, got moduli {got:?}")]
    GroupMismatch { expected: u64, got: Vec<u64> },

    #[error("generator matrix {0:?} is singular")]
    SingularLattice([[i64; 2]; 2]),
    #[error("shape must contain the origin")]
    ShapeWithoutOrigin,
    #[error("the shape is not a lattice tiling: {0}")]
    NotTiling(String),
    #[error("the zero vector is not a direction")]
    ZeroDirection,
    #[error("direction ({0}, {1}) does not define a folding")]
    NoFolding(i64, i64),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("point ({0}, {1}) is not in the shape")]
    PointOutsideShape(i64, i64),
    #[error("anchor ({0}, {1}) is not a dot of the pattern")]
    AnchorNotDot(i64, i64),
    #[error("the pattern has no dots to anchor on")]
    EmptyPattern,
    #[error("dot ({0}, {1}) appears twice")]
    DuplicateDot(i64, i64),
    #[error("the input set is not a Sidon sequence")]
    NotSidon,
    #[error("search space of size {size} exceeds the cap {cap}")]
    SearchCapExceeded { size: u64, cap: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
