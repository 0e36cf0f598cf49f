//! Rayleigh-quotient extrema over subspaces and the minimax checks.

use serde::Serialize;

use super::eig::{check_hermitian, hermitian_eig};
use crate::backend;
use crate::dqmatrix::{DQMatrix, DQVector};
use crate::dual::DualNumber;
use crate::error::{dim_mismatch, Error, Result};
use crate::sample::Sampler;

/// Orthonormality required of the columns passed to
/// [`subspace_rayleigh_extremum`].
const ORTHONORMAL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    Max,
    Min,
}

/// Orthonormal basis `Q` of `N(B*) = {x : B* x = 0}` for `B` (m×k) with
/// `rank(B_st) = k`: `Q_st` spans the null space of `B_st*` and
/// `Q_I = -(B_st*)† B_I* Q_st`, so `B*Q = O` and `Q*Q = I` in both parts.
pub fn nullspace_basis(b: &DQMatrix) -> Result<DQMatrix> {
    let (m, k) = b.shape();
    let bs_adj = b.std().adjoint();
    let rank = backend::rank_default(&bs_adj);
    if rank != k {
        return Err(Error::RankDeficientStandardPart { rank, expected: k });
    }
    if k == 0 {
        return Ok(DQMatrix::identity(m));
    }
    let qst = backend::null_basis(&bs_adj);
    let qinf = (&(&backend::pinv(&bs_adj) * &b.inf().adjoint()) * &qst).scale(-1.0);
    DQMatrix::new(qst, qinf)
}

/// Extremum of `‖x‖⁻²(x* A x)` over `x = Q y`, `y` appreciable, taken from
/// the eigendecomposition of `Q* A Q`. Returns the value and a maximizer
/// (or minimizer).
pub fn subspace_rayleigh_extremum(a: &DQMatrix, q: &DQMatrix, sense: Sense) -> Result<(DualNumber, DQVector)> {
    check_hermitian(a)?;
    if q.rows() != a.rows() || q.cols() == 0 {
        return Err(dim_mismatch(format!("{} x (>= 1)", a.rows()), format!("{}x{}", q.rows(), q.cols())));
    }
    let (us, ui) = q.unitary_residuals();
    if us.max(ui) > ORTHONORMAL_TOL {
        return Err(Error::NotOrthonormal { residual: us.max(ui) });
    }
    let compressed = (&(&q.adjoint() * a) * q).hermitian_part();
    let e = hermitian_eig(&compressed)?;
    let idx = match sense {
        Sense::Max => 0,
        Sense::Min => e.eigenvalues.len() - 1,
    };
    let y = e.u.column(idx).to_matrix();
    let x = (q * &y).column(0);
    Ok((e.eigenvalues[idx], x))
}

/// One attainment check: the extremum over `N(B*)` for the `B` built from
/// eigenvectors, next to the eigenvalue it should equal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Attainment {
    pub sense: Sense,
    /// Number of eigenvector columns in `B` (`k - 1` for max, `k` for min).
    pub k: usize,
    /// 1-based index of the eigenvalue the extremum should equal.
    pub index: usize,
    pub expected: DualNumber,
    pub attained: DualNumber,
}

impl Attainment {
    pub fn error(&self) -> (f64, f64) {
        (
            (self.expected.std - self.attained.std).abs(),
            (self.expected.inf - self.attained.inf).abs(),
        )
    }
}

/// Minimax attainment for every `k`:
///
/// * max over `N(B*)` with `B = [u_1 … u_{k-1}]` equals `λ^(k)`, `k = 1..m`;
/// * min over `N(C*)` with `C = [u_{m-k+1} … u_m]` equals `λ^(m-k)`,
///   `k = 1..m-1`.
pub fn minimax_attainment(a: &DQMatrix) -> Result<Vec<Attainment>> {
    let e = hermitian_eig(a)?;
    let m = a.rows();
    let mut out = Vec::with_capacity(2 * m);
    for k in 1..=m {
        let b = e.u.columns_range(0, k - 1);
        let q = nullspace_basis(&b)?;
        let (v, _) = subspace_rayleigh_extremum(a, &q, Sense::Max)?;
        out.push(Attainment {
            sense: Sense::Max,
            k: k - 1,
            index: k,
            expected: e.eigenvalues[k - 1],
            attained: v,
        });
    }
    for k in 1..m {
        let c = e.u.columns_range(m - k, m);
        let q = nullspace_basis(&c)?;
        let (v, _) = subspace_rayleigh_extremum(a, &q, Sense::Min)?;
        out.push(Attainment {
            sense: Sense::Min,
            k,
            index: m - k,
            expected: e.eigenvalues[m - k - 1],
            attained: v,
        });
    }
    Ok(out)
}

/// Maxima of the Rayleigh quotient over `N(B*)` for `samples` random `B`
/// (m × (k-1), normal entries in both parts) with full-rank standard part.
/// Each is an upper bound for `λ^(k)`.
pub fn sampled_minimax(a: &DQMatrix, k: usize, samples: usize, seed: u64) -> Result<Vec<DualNumber>> {
    check_hermitian(a)?;
    let m = a.rows();
    if k == 0 || k > m {
        return Err(dim_mismatch(format!("1 <= k <= {m}"), k));
    }
    let mut rng = Sampler::new(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let b = rng.dq_matrix(m, k - 1);
        let q = match nullspace_basis(&b) {
            Ok(q) => q,
            Err(Error::RankDeficientStandardPart { .. }) => continue,
            Err(e) => return Err(e),
        };
        out.push(subspace_rayleigh_extremum(a, &q, Sense::Max)?.0);
    }
    Ok(out)
}
