use crate::engine::SeriesKind;
use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("incompatible pi powers: {0} and {1}")]
    IncompatiblePiPowers(i32, i32),

    /// A precondition on an integer argument was violated.
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("missing {kind} entry for k = {k}")]
    MissingDependency { kind: SeriesKind, k: u32 },

    #[error("invalid {kind} table: {reason}")]
    InvalidTable { kind: SeriesKind, reason: String },
}
