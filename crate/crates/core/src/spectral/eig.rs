//! Eigendecomposition `A = U·Σ·U*` of a dual quaternion Hermitian matrix.
//!
//! With `U = U_st (I + Cε)` and `Σ = Λ + Mε`, the ε-part of `A U = U Σ`
//! reads `B + Λ C - C Λ = M` for `B = U_st* A_I U_st`. Off-cluster entries
//! give `C_pq = B_pq / (λ_q - λ_p)`; on-cluster blocks must already be
//! diagonal, which the per-cluster rotation arranges.

use serde::Serialize;

use super::{cluster_runs, CLUSTER_REL_TOL};
use crate::backend::{self, fix_phase};
use crate::dqmatrix::{DQMatrix, DQVector};
use crate::dual::DualNumber;
use crate::error::{dim_mismatch, Error, Result};
use crate::qmatrix::QMatrix;

/// A group of equal standard-part eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct HermEig {
    /// Dual unitary with `A·U = U·diag(eigenvalues)`.
    pub u: DQMatrix,
    /// Descending in the total order of dual numbers.
    pub eigenvalues: Vec<DualNumber>,
    pub clusters: Vec<Cluster>,
}

impl HermEig {
    pub fn eigenvector(&self, k: usize) -> DQVector {
        self.u.column(k)
    }

    /// `diag(eigenvalues)` as an `m × m` dual matrix.
    pub fn sigma(&self) -> DQMatrix {
        let m = self.eigenvalues.len();
        DQMatrix::diag_dual(m, m, &self.eigenvalues)
    }

    /// Max-abs residuals of `A·U - U·Σ` in each part.
    pub fn residuals(&self, a: &DQMatrix) -> (f64, f64) {
        let lhs = a * &self.u;
        let rhs = self.u.scale_columns(&self.eigenvalues);
        (&lhs - &rhs).max_abs_parts()
    }
}

pub(crate) fn check_hermitian(a: &DQMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(dim_mismatch("square matrix", format!("{}x{}", a.rows(), a.cols())));
    }
    if !a.is_hermitian() {
        let (s, i) = a.hermitian_residuals();
        return Err(Error::NotHermitian { residual: s.max(i) });
    }
    Ok(())
}

pub fn hermitian_eig(a: &DQMatrix) -> Result<HermEig> {
    check_hermitian(a)?;
    let a = a.hermitian_part();
    let m = a.rows();
    let base = backend::hermitian_eig(a.std())?;
    let delta = CLUSTER_REL_TOL * (1.0 + a.std().norm());

    let mut ust = base.vectors;
    let mut lam = vec![0.0; m];
    let mut eigenvalues = Vec::with_capacity(m);
    let mut clusters = Vec::new();
    for (start, k) in cluster_runs(&base.values, delta) {
        let value = base.values[start..start + k].iter().sum::<f64>() / k as f64;
        let vi = ust.columns_range(start, start + k);
        let compressed = (&(&vi.adjoint() * a.inf()) * &vi).hermitian_part();
        let inner = backend::hermitian_eig(&compressed)?;
        let rotated = &vi * &inner.vectors;
        for j in 0..k {
            let mut col = rotated.column(j);
            fix_phase(&mut col);
            ust.set_column(start + j, &col);
            lam[start + j] = value;
            eigenvalues.push(DualNumber::new(value, inner.values[j]));
        }
        clusters.push(Cluster { value, multiplicity: k });
    }

    let b = &(&ust.adjoint() * a.inf()) * &ust;
    let c = QMatrix::from_fn(m, m, |p, q| {
        if lam[p] == lam[q] {
            crate::Quaternion::ZERO
        } else {
            b[(p, q)].scale(1.0 / (lam[q] - lam[p]))
        }
    });
    let uinf = &ust * &c;
    let u = DQMatrix::new(ust, uinf)?;
    Ok(HermEig { u, eigenvalues, clusters })
}

/// `‖x‖⁻²·(x* A x)` for Hermitian `A` and appreciable `x`.
pub fn rayleigh_quotient(a: &DQMatrix, x: &DQVector) -> Result<DualNumber> {
    check_hermitian(a)?;
    if x.dim() != a.rows() {
        return Err(dim_mismatch(a.rows(), x.dim()));
    }
    if !x.is_appreciable() {
        return Err(Error::InfinitesimalVector);
    }
    let ax = a.mul_vec(x)?;
    let xax = ax.inner(x)?.re();
    let n = x.norm();
    Ok(xax * (n * n).inverse()?)
}
