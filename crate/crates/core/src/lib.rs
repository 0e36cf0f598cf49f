//! Exact dual quaternion linear algebra.
//!
//! Values carry a standard part and an infinitesimal part, `a = a_st + a_I·ε`
//! with `ε² = 0`. Arithmetic is exact in ε; floating-point enters only
//! through the quaternion-matrix backend.
//!
//! The crate is organised bottom-up:
//!
//! * [`dual`]: dual numbers with their total order, `|·|`, `√` and inverse.
//! * [`quaternion`], [`qmatrix`], [`backend`]: quaternion scalars, dense
//!   matrices and the decompositions (Hermitian eigen, SVD, pseudoinverse).
//! * [`dq`], [`dqmatrix`]: dual quaternion scalars, vectors and matrices.
//! * [`independence`]: the strict, appreciable and weak right linear
//!   independence tests, rank and weak rank.
//! * [`spectral`]: Hermitian eigendecomposition, SVD, Rayleigh quotients,
//!   minimax checks and the Fan–Hoffman comparison.
//! * [`ginverse`]: `{1,2,3,4}` generalized-inverse conditions and the
//!   Moore–Penrose inverse when it exists.
//! * [`cli`]: the JSON matrix file format and command dispatch behind `dqla`.
//!
//! ```
//! use dq_linalg::{spectral, DQMatrix, DualNumber, QMatrix};
//!
//! let a = DQMatrix::new(QMatrix::diag_real(2, 2, &[1.0, 2.0]), QMatrix::diag_real(2, 2, &[0.0, 1.0])).unwrap();
//! let e = spectral::hermitian_eig(&a).unwrap();
//! assert_eq!(e.eigenvalues[0], DualNumber::new(2.0, 1.0));
//! assert_eq!(e.eigenvalues[1], DualNumber::new(1.0, 0.0));
//! ```

pub mod backend;
pub mod cli;
pub mod dq;
pub mod dqmatrix;
pub mod dual;
pub mod error;
pub mod ginverse;
pub mod independence;
pub mod qmatrix;
pub mod quaternion;
pub mod sample;
pub mod spectral;

pub use dq::DualQuaternion;
pub use dqmatrix::{DQMatrix, DQVector};
pub use dual::DualNumber;
pub use error::{Error, Result};
pub use qmatrix::QMatrix;
pub use quaternion::Quaternion;
