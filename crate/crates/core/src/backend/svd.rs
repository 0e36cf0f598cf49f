//! Quaternion SVD by one-sided (Hestenes) Jacobi rotations, plus the
//! rank, pseudoinverse and null-space helpers built on it.

use super::solve::gram_schmidt_complete;
use super::vecops::inner;
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

const MAX_SWEEPS: usize = 80;

/// `A = U·diag(sigma)·V*` with `U` (m×m), `V` (n×n) unitary and `sigma`
/// descending of length `min(m, n)`.
#[derive(Clone, Debug)]
pub struct QSvd {
    pub u: QMatrix,
    pub sigma: Vec<f64>,
    pub v: QMatrix,
}

impl QSvd {
    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Number of singular values above `rel_tol·σ_max`.
    pub fn rank_with(&self, rel_tol: f64) -> usize {
        let thresh = rel_tol * self.sigma_max();
        self.sigma.iter().filter(|&&s| s > thresh && s > 0.0).count()
    }

    /// Rank under the default tolerance `max(m,n)·σ_max·1e-12`.
    pub fn rank(&self) -> usize {
        self.rank_with(default_rank_rel_tol(self.u.rows(), self.v.rows()))
    }

    /// `Σ` as an `m × n` real diagonal matrix.
    pub fn sigma_matrix(&self) -> QMatrix {
        QMatrix::diag_real(self.u.rows(), self.v.rows(), &self.sigma)
    }
}

/// Relative rank tolerance `max(m,n)·1e-12`.
pub fn default_rank_rel_tol(m: usize, n: usize) -> f64 {
    m.max(n).max(1) as f64 * 1e-12
}

pub fn svd(a: &QMatrix) -> QSvd {
    let (m, n) = a.shape();
    if m < n {
        let t = svd(&a.adjoint());
        return QSvd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        };
    }
    // m >= n: orthogonalize the columns of W = A·V
    let mut w: Vec<Vec<Quaternion>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<Quaternion>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { Quaternion::ONE } else { Quaternion::ZERO }).collect())
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = w[p].iter().map(|x| x.norm_sqr()).sum();
                let beta: f64 = w[q].iter().map(|x| x.norm_sqr()).sum();
                // gamma = w_p* w_q
                let gamma = inner(&w[q], &w[p]);
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // make the coupling real: w_q <- w_q·conj(gamma/|gamma|)
                let phase = gamma.conj().scale(1.0 / g);
                w[q].iter_mut().for_each(|x| *x *= phase);
                v[q].iter_mut().for_each(|x| *x *= phase);

                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s);
                rotate(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sig: Vec<(f64, usize)> = w
        .iter()
        .enumerate()
        .map(|(j, col)| (col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt(), j))
        .collect();
    sig.sort_by(|x, y| y.0.total_cmp(&x.0));
    let sigma: Vec<f64> = sig.iter().map(|s| s.0).collect();
    let smax = sigma.first().copied().unwrap_or(0.0);
    let keep_thresh = smax * f64::EPSILON * m as f64;

    let mut vmat = QMatrix::zeros(n, n);
    for (jj, &(_, j)) in sig.iter().enumerate() {
        vmat.set_column(jj, &v[j]);
    }
    let mut ucols = QMatrix::zeros(m, 0);
    for &(s, j) in &sig {
        if s <= keep_thresh || s == 0.0 {
            break;
        }
        let col: Vec<Quaternion> = w[j].iter().map(|x| x.scale(1.0 / s)).collect();
        ucols = ucols.hstack(&QMatrix::column_vector(&col)).expect("row count");
    }
    // columns belonging to tiny singular values may have drifted; the
    // completion re-orthogonalizes them
    let u = gram_schmidt_complete(&ucols);
    QSvd { u, sigma, v: vmat }
}

fn rotate(cols: &mut [Vec<Quaternion>], p: usize, q: usize, c: f64, s: f64) {
    let (lo, hi) = cols.split_at_mut(q);
    let (cp, cq) = (&mut lo[p], &mut hi[0]);
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let (a, b) = (*x, *y);
        *x = a.scale(c) - b.scale(s);
        *y = a.scale(s) + b.scale(c);
    }
}

/// Moore–Penrose pseudoinverse `V·Σ⁺·U*`, inverting singular values above
/// the default rank threshold.
pub fn pinv(a: &QMatrix) -> QMatrix {
    let s = svd(a);
    let r = s.rank();
    let (m, n) = a.shape();
    let mut out = QMatrix::zeros(n, m);
    for k in 0..r {
        let inv = 1.0 / s.sigma[k];
        for i in 0..n {
            let vik = s.v[(i, k)].scale(inv);
            for j in 0..m {
                out[(i, j)] += vik * s.u[(j, k)].conj();
            }
        }
    }
    out
}

/// Rank with singular values counted above `rel_tol·σ_max`.
pub fn rank(a: &QMatrix, rel_tol: f64) -> usize {
    svd(a).rank_with(rel_tol)
}

/// Rank under the default tolerance.
pub fn rank_default(a: &QMatrix) -> usize {
    svd(a).rank()
}

/// Orthonormal basis of `{x : A x = 0}` as the columns of an `n × (n - r)` matrix.
pub fn null_basis(a: &QMatrix) -> QMatrix {
    let s = svd(a);
    let r = s.rank();
    s.v.columns_range(r, a.cols())
}
