use thiserror::Error;

/// Everything that can go wrong while computing invariants or bounds.
///
/// Input-shaped failures (non-coprime pairs, out-of-range parameters) are
/// distinguished from [`Error::Invariant`], which means two computations that
/// must agree did not.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not invertible modulo {1}")]
    NotInvertible(String, String),
    #[error("division is not exact: nonzero remainder {0}")]
    InexactDivision(String),
    #[error("polynomial is not symmetric under T -> T^-1")]
    NotSymmetric,
    #[error("({0}, {1}) is not a primitive class")]
    NotPrimitive(i64, i64),
    #[error("(0, 0) does not determine a knot")]
    ZeroClass,
    #[error("({0}, {1}) is not a coprime pair")]
    NotCoprime(i64, i64),
    #[error("signature {0} is odd")]
    OddSignature(i64),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("crosscap construction needs pq even, got ({0}, {1})")]
    ParityError(i64, i64),
    #[error("internal consistency failure: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
