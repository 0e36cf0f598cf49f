use thiserror::Error;

/// Errors raised by the numeric layers of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value is not invertible: {0}")]
    NonInvertible(&'static str),

    #[error("argument outside the domain: {0}")]
    DomainError(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: String, found: String },

    #[error("matrix is not Hermitian (A* != A, residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("columns are not orthonormal (residual {residual:.3e})")]
    NotOrthonormal { residual: f64 },

    #[error("complex matrix lacks the [[A1, A2], [-conj(A2), conj(A1)]] block symmetry")]
    MalformedAdjoint,

    #[error("matrix is singular: standard part has rank {rank} < {dim}")]
    Singular { rank: usize, dim: usize },

    #[error("vector is infinitesimal (zero standard part)")]
    InfinitesimalVector,

    #[error("matrix is infinitesimal (zero standard part)")]
    InfinitesimalMatrix,

    #[error("standard part has rank {rank}, expected full column rank {expected}")]
    RankDeficientStandardPart { rank: usize, expected: usize },

    #[error("exact subset search limited to {limit} columns, got {cols}")]
    TooLargeForExactSearch { cols: usize, limit: usize },

    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_mismatch(expected: impl ToString, found: impl ToString) -> Error {
    Error::DimMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
