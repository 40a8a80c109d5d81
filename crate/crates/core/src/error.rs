use thiserror::Error;

use crate::matrix::Label;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds the supported maximum of {max}", max = crate::field::MAX_ORDER)]
    FieldTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("no reduction polynomial available for GF({p}^{k})")]
    MissingReduction { p: u32, k: u32 },
    #[error("reduction polynomial must have {expected} coefficients, got {got}")]
    ReductionLength { expected: usize, got: usize },
    #[error("reduction polynomial {0:?} is reducible")]
    Reducible(Vec<u8>),
    #[error("element {value} is not in GF({q})")]
    InvalidElement { value: u32, q: u32 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("operation {op} expects {expected} operand(s), got {got}")]
    Arity { op: &'static str, expected: usize, got: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrices are over different fields")]
    FieldMismatch,
    #[error("row transformation is singular")]
    SingularTransform,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("basis columns {0:?} are linearly dependent")]
    DependentBasis(Vec<Label>),
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("duplicate label {0}")]
    DuplicateLabel(Label),
    #[error("unknown label {0}")]
    UnknownLabel(Label),
    #[error("matrix is not in standard form")]
    NotStandard,

    #[error("matroid has no bases")]
    NoBases,
    #[error("basis {0:?} does not have size equal to the rank")]
    BasisSize(Vec<Label>),
    #[error("ground set of {0} elements exceeds the supported maximum of {max}", max = crate::matroid::MAX_GROUND)]
    GroundTooLarge(usize),
    #[error("{0:?} is not a basis")]
    NotABasis(Vec<Label>),
    #[error("element {0} belongs to the basis")]
    ElementInBasis(Label),
    #[error("matroids have different ground sets")]
    GroundSetMismatch,
    #[error("unknown built-in {0:?}")]
    UnknownBuiltin(String),

    #[error("matroid is not connected")]
    Disconnected,
    #[error("matroid is not simple")]
    NotSimple,
    #[error("matroid is not cosimple")]
    NotCosimple,
    #[error("pinned entries are not a spanning forest: {0}")]
    InvalidForest(String),
    #[error("{got} unknowns exceed the cap of {cap}")]
    TooManyUnknowns { got: usize, cap: usize },
    #[error("bad assignment: {0}")]
    BadAssignment(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
