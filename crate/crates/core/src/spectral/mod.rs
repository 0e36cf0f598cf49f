//! Spectral theory of dual quaternion matrices: Hermitian eigendecomposition,
//! singular value decomposition, Rayleigh quotients, minimax characterizations
//! and the Fan–Hoffman inequality.

mod eig;
mod minimax;
mod svd;

pub use eig::{hermitian_eig, rayleigh_quotient, Cluster, HermEig};
pub use minimax::{
    minimax_attainment, nullspace_basis, sampled_minimax, subspace_rayleigh_extremum, Attainment, Sense,
};
pub use svd::{augmented_singular_values, fan_hoffman_gap, svd, svd_with_tol, DualSvd};

/// Relative gap below which standard-part eigenvalues or singular values are
/// treated as one cluster: `δ = CLUSTER_REL_TOL·(1 + ‖A_st‖)`.
pub const CLUSTER_REL_TOL: f64 = 1e-8;

/// Splits a descending list into runs whose consecutive gaps are at most
/// `delta`. Returns `(start, len)` pairs.
pub(crate) fn cluster_runs(values: &[f64], delta: f64) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > delta {
            runs.push((start, i - start));
            start = i;
        }
    }
    runs
}

/// Replaces columns `start..start + w.cols()` of `m` by `m[:, block]·w`.
pub(crate) fn rotate_columns(m: &mut crate::QMatrix, start: usize, w: &crate::QMatrix) {
    let k = w.cols();
    let rotated = &m.columns_range(start, start + k) * w;
    m.set_block(0, start, &rotated);
}
