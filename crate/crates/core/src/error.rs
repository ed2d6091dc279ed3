use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} exceeds the permutation-expansion bound of 8")]
    MatrixTooLarge(usize),
    #[error("division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("index {index} out of range (expected {expected})")]
    IndexOutOfRange { index: usize, expected: String },
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("cyclotomic operands use different primes ({0} vs {1})")]
    PrimeMismatch(u32, u32),
    #[error("matrix is not monomial in powers of the root of unity")]
    NotMonomial,
    #[error("cohomology classes live in different algebras")]
    ContextMismatch,
    #[error("Milnor primitive Q_{0} exceeds the recursion depth guard of 6")]
    DepthGuard(u32),
    #[error("class has a nonzero exterior part")]
    OddPartPresent,
    #[error("expected {expected} entries, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("slash symbol needs two distinct partitions")]
    SamePartition,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
