use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("coefficient vector has {got} entries, expected {expected}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("{0} is not coprime to the group order {1}")]
    NotCoprime(i64, usize),
    #[error("element is not a unit in the group ring")]
    NotAUnit,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("orientation character {sign} is not a homomorphism on C{order}")]
    BadCharacter { sign: i8, order: usize },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid module presentation: {0}")]
    InvalidModule(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("intersection of subcomplexes is empty")]
    EmptyIntersection,
    #[error("invalid subcomplex: {0}")]
    InvalidSubComplex(String),
    #[error("subcomplex is not contractible")]
    NotContractible,
    #[error("extension depends on attachment order (malformed face data)")]
    AttachmentOrder,
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    CapExceeded { what: &'static str, value: usize, max: usize },
    #[error("operation requires a finite module")]
    InfiniteModule,
    #[error("element is not in the expected subgroup: {0}")]
    NotInSubgroup(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("dimension mismatch between h-cobordism symbols: {0} vs {1}")]
    SymbolMismatch(i64, i64),
    #[error("cycle degree n = {0} must be at least 2")]
    CycleDegree(usize),
    #[error("automorphism {0} is not realised by a homotopy self-equivalence")]
    NotRealizable(u64),
    #[error("free factor present; localisation bookkeeping needs a finite group")]
    FreeFactor,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
