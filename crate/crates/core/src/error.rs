use thiserror::Error;

use crate::picard::DivisorClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain (e ≤ 0, rank ≤ 0, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid range {from}..{to}: lower end exceeds upper end")]
    InvalidRange { from: i64, to: i64 },

    #[error("twisting class {0} must be spanned and nonzero")]
    NotSpanned(DivisorClass),

    /// A named hypothesis of a construction does not hold.
    #[error("hypothesis `{name}` violated: {detail}")]
    Hypothesis { name: &'static str, detail: String },

    /// A computed quantity broke an identity it must satisfy; always a bug.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn hypothesis(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            name,
            detail: detail.into(),
        }
    }
}
