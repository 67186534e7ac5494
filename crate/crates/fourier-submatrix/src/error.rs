use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Submatrix dimensions exceed the ambient DFT size.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A theorem or proposition hypothesis is violated.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// A scalar evaluation would overflow the double range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// An iterative summation or quadrature failed to reach its tolerance.
    #[error("did not converge: {0}")]
    Nonconvergence(String),

    /// A fixed-shape family has no member measurable below the cap.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// I/O error when writing report files.
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
