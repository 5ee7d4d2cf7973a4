use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Request exceeds a configured size cap (rank, weight, enumeration).
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A caller-side precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    /// An internal invariant failed; signals a convention or implementation bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use invariant;
