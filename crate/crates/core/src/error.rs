use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },

    #[error("not a rainbow: {reason}")]
    NotARainbow { reason: String },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("integer overflow in {op}")]
    Overflow { op: &'static str },

    #[error("relation is not symmetric")]
    NotSymmetric,

    #[error("relation is not irreflexive")]
    NotIrreflexive,

    #[error("rainbow is not homogeneous")]
    NotHomogeneous,

    #[error("rainbow is not a Jordan configuration")]
    NotJordan,

    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: usize, found: usize },

    #[error("infeasible strongly regular parameters ({v},{k},{lambda},{mu})")]
    InfeasibleParams { v: u64, k: u64, lambda: u64, mu: u64 },

    #[error("color labels do not match the rainbow: {reason}")]
    LabelMismatch { reason: String },

    #[error("divisibility requirement violated: {reason}")]
    DivisibilityError { reason: String },

    #[error("invalid construction parameters: {reason}")]
    SpecInvalid { reason: String },

    #[error("base scheme rejected: {reason}")]
    BaseInvalid { reason: String },

    #[error("fiber index {index} out of range (there are {fibers} fibers)")]
    BadFiberIndex { index: usize, fibers: usize },

    #[error("multiplication table verification failed for q={q}, m={m}")]
    TableVerificationFailed { q: usize, m: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal verification failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn not_a_rainbow(reason: impl Into<String>) -> Self {
        Error::NotARainbow {
            reason: reason.into(),
        }
    }

    /// True for errors that signal a failed internal assertion rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::TableVerificationFailed { .. } | Error::Overflow { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_order(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::OrderMismatch { left, right })
    }
}
