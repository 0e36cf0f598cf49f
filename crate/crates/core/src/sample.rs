//! Seeded random generators for quaternion and dual quaternion data.
//!
//! Every coefficient is an independent standard normal draw. The generator
//! is ChaCha8, so a seed fixes the whole stream on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::backend;
use crate::dq::DualQuaternion;
use crate::dqmatrix::{DQMatrix, DQVector};
use crate::dual::DualNumber;
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn dual_number(&mut self) -> DualNumber {
        DualNumber::new(self.normal(), self.normal())
    }

    pub fn quaternion(&mut self) -> Quaternion {
        Quaternion::new(self.normal(), self.normal(), self.normal(), self.normal())
    }

    /// A quaternion with zero real part.
    pub fn pure_quaternion(&mut self) -> Quaternion {
        Quaternion::new(0.0, self.normal(), self.normal(), self.normal())
    }

    pub fn dual_quaternion(&mut self) -> DualQuaternion {
        DualQuaternion::new(self.quaternion(), self.quaternion())
    }

    pub fn qmatrix(&mut self, m: usize, n: usize) -> QMatrix {
        QMatrix::from_fn(m, n, |_, _| self.quaternion())
    }

    pub fn qvector(&mut self, n: usize) -> Vec<Quaternion> {
        (0..n).map(|_| self.quaternion()).collect()
    }

    pub fn dq_vector(&mut self, n: usize) -> DQVector {
        let s = self.qvector(n);
        let i = self.qvector(n);
        DQVector::new(s, i).expect("equal lengths")
    }

    pub fn dq_matrix(&mut self, m: usize, n: usize) -> DQMatrix {
        let s = self.qmatrix(m, n);
        let i = self.qmatrix(m, n);
        DQMatrix::new(s, i).expect("equal shapes")
    }

    /// `(B + B*)/2` for random `B`.
    pub fn hermitian_qmatrix(&mut self, n: usize) -> QMatrix {
        self.qmatrix(n, n).hermitian_part()
    }

    pub fn dq_hermitian(&mut self, n: usize) -> DQMatrix {
        let s = self.hermitian_qmatrix(n);
        let i = self.hermitian_qmatrix(n);
        DQMatrix::new(s, i).expect("equal shapes")
    }

    /// Haar-like unitary quaternion matrix from the SVD of a random matrix.
    pub fn unitary_qmatrix(&mut self, n: usize) -> QMatrix {
        backend::svd(&self.qmatrix(n, n)).u
    }

    /// Dual unitary `U_st (I + Cε)` with `C` anti-Hermitian.
    pub fn dq_unitary(&mut self, n: usize) -> DQMatrix {
        let u = self.unitary_qmatrix(n);
        let b = self.qmatrix(n, n);
        let c = (&b - &b.adjoint()).scale(0.5);
        let inf = &u * &c;
        DQMatrix::new(u, inf).expect("equal shapes")
    }

    /// Random `m × n` quaternion matrix of rank `r` (generically).
    pub fn qmatrix_with_rank(&mut self, m: usize, n: usize, r: usize) -> QMatrix {
        if r == 0 {
            return QMatrix::zeros(m, n);
        }
        &self.qmatrix(m, r) * &self.qmatrix(r, n)
    }

    /// Dual quaternion matrix whose standard part has rank `r`.
    pub fn dq_with_std_rank(&mut self, m: usize, n: usize, r: usize) -> DQMatrix {
        let s = self.qmatrix_with_rank(m, n, r);
        let i = self.qmatrix(m, n);
        DQMatrix::new(s, i).expect("equal shapes")
    }

    /// Hermitian dual quaternion matrix whose standard part has the given
    /// eigenvalues (repeats allowed, so clusters can be forced).
    pub fn dq_hermitian_with_spectrum(&mut self, eigenvalues: &[f64]) -> DQMatrix {
        let n = eigenvalues.len();
        let u = self.unitary_qmatrix(n);
        let s = (&(&u * &QMatrix::diag_real(n, n, eigenvalues)) * &u.adjoint()).hermitian_part();
        let i = self.hermitian_qmatrix(n);
        DQMatrix::new(s, i).expect("equal shapes")
    }
}
