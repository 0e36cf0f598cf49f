//! Quaternion matrix decompositions that the dual quaternion algorithms
//! reduce to: Hermitian eigendecomposition (via the complex adjoint), SVD,
//! pseudoinverse, rank, solves and orthonormal completion.

mod adjoint;
mod cmatrix;
mod eig;
mod solve;
mod svd;
mod tridiag;
pub(crate) mod vecops;

pub use adjoint::{from_complex_adjoint, to_complex_adjoint};
pub use cmatrix::CMatrix;
pub use eig::{hermitian_eig, QHermEig};
pub use solve::{inverse, orthonormal_completion, solve};
pub use svd::{default_rank_rel_tol, null_basis, pinv, rank, rank_default, svd, QSvd};
pub use tridiag::hermitian_eigen as complex_hermitian_eigen;

pub(crate) use eig::fix_phase;
