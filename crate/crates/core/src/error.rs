use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{op}: {violated}")]
    Domain { op: &'static str, violated: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, violated: impl Into<String>) -> Error {
    Error::Domain {
        op,
        violated: violated.into(),
    }
}

/// Checks `1 <= k <= n`, naming the first violated bound.
pub(crate) fn check_parts_bounds(op: &'static str, n: u32, k: u32) -> Result<()> {
    if n < 1 {
        Err(domain(op, format!("n must be >= 1 (got n = {n})")))
    } else if k < 1 {
        Err(domain(op, format!("k must be >= 1 (got k = {k})")))
    } else if k > n {
        Err(domain(op, format!("k must be <= n (got k = {k}, n = {n})")))
    } else {
        Ok(())
    }
}
