//! Singular value decomposition `A = U·[[Σ_t, O], [O, O]]·V*`.
//!
//! Starting from the backend SVD `A_st = U0 Σ0 V0*`, write
//! `U = U0 (I + Xε)`, `V = V0 (I + Yε)` with `X`, `Y` anti-Hermitian and
//! `B = U0* A_I V0`. Then `U* A V = Σ0 + (B - XΣ0 + Σ0Y)ε`, and `X`, `Y`
//! are chosen block by block so the ε-part is diagonal:
//!
//! * null block `B22`: absorbed by rotating the null bases with the SVD of
//!   `B22`, which yields the infinitesimal singular values;
//! * off-diagonal blocks: `X21 = B21 S⁻¹`, `Y12 = -S⁻¹ B12`;
//! * `σ`-clusters: rotate by the eigenvectors of the Hermitian part of the
//!   cluster block and cancel its anti-Hermitian part with `X = -Y`;
//! * distinct `σ_p ≠ σ_q`: a 2×2 real system per entry pair.

use super::eig::hermitian_eig;
use super::{cluster_runs, rotate_columns, CLUSTER_REL_TOL};
use crate::backend;
use crate::dqmatrix::DQMatrix;
use crate::dual::DualNumber;
use crate::error::Result;
use crate::qmatrix::QMatrix;

#[derive(Clone, Debug)]
pub struct DualSvd {
    pub u: DQMatrix,
    pub v: DQMatrix,
    /// The `t` nonzero singular values, appreciable ones first, each group
    /// descending.
    pub singulars: Vec<DualNumber>,
    /// Number of appreciable singular values (`rank(A_st)`).
    pub r: usize,
    /// Number of nonzero singular values.
    pub t: usize,
    /// Cut-off used to classify singular values as nonzero.
    pub threshold: f64,
}

impl DualSvd {
    pub fn shape(&self) -> (usize, usize) {
        (self.u.rows(), self.v.rows())
    }

    /// `[[Σ_t, O], [O, O]]` as an `m × n` dual matrix.
    pub fn sigma_matrix(&self) -> DQMatrix {
        let (m, n) = self.shape();
        DQMatrix::diag_dual(m, n, &self.singulars)
    }

    /// Singular values padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<DualNumber> {
        let mut s = self.singulars.clone();
        s.resize(len.max(s.len()), DualNumber::ZERO);
        s
    }

    pub fn infinitesimal_singulars(&self) -> &[DualNumber] {
        &self.singulars[self.r..]
    }

    pub fn reconstruct(&self) -> DQMatrix {
        &(&self.u * &self.sigma_matrix()) * &self.v.adjoint()
    }

    /// The factors of `A = PQ` with `P = UV*` unitary and `Q = V Σ V*`
    /// Hermitian; defined for square `A`.
    pub fn polar(&self) -> Option<(DQMatrix, DQMatrix)> {
        let (m, n) = self.shape();
        if m != n {
            return None;
        }
        let vadj = self.v.adjoint();
        let p = &self.u * &vadj;
        let q = &(&self.v * &self.sigma_matrix()) * &vadj;
        Some((p, q))
    }
}

/// SVD with the default relative tolerance `max(m,n)·1e-12`.
pub fn svd(a: &DQMatrix) -> DualSvd {
    let (m, n) = a.shape();
    svd_with_tol(a, backend::default_rank_rel_tol(m, n))
}

/// SVD where singular values at or below `rel_tol·scale` count as zero. The
/// scale is `σ_max(A_st)` for the appreciable ones and `max(σ_max(A_st),
/// σ_max(B22))` for the infinitesimal ones.
pub fn svd_with_tol(a: &DQMatrix, rel_tol: f64) -> DualSvd {
    let (m, n) = a.shape();
    let base = backend::svd(a.std());
    let r = base.rank_with(rel_tol);
    let mut u0 = base.u;
    let mut v0 = base.v;
    let coupling = |u0: &QMatrix, v0: &QMatrix| &(&u0.adjoint() * a.inf()) * v0;

    // null block
    let mut inf_sigma = Vec::new();
    if m > r && n > r {
        let b22 = coupling(&u0, &v0).block(r, r, m - r, n - r);
        let s22 = backend::svd(&b22);
        rotate_columns(&mut u0, r, &s22.u);
        rotate_columns(&mut v0, r, &s22.v);
        inf_sigma = s22.sigma;
    }
    let scale = base.sigma.first().copied().unwrap_or(0.0).max(inf_sigma.first().copied().unwrap_or(0.0));
    let threshold = rel_tol * scale;

    // σ clusters
    let delta = CLUSTER_REL_TOL * (1.0 + a.std().norm());
    let mut sig = vec![0.0; r];
    let mut cluster_id = vec![0usize; r];
    let mut singulars = Vec::with_capacity(m.min(n));
    let runs = cluster_runs(&base.sigma[..r], delta);
    for (id, &(start, k)) in runs.iter().enumerate() {
        let value = base.sigma[start..start + k].iter().sum::<f64>() / k as f64;
        let h = coupling(&u0, &v0).block(start, start, k, k).hermitian_part();
        let e = backend::hermitian_eig(&h).expect("Hermitian by construction");
        rotate_columns(&mut u0, start, &e.vectors);
        rotate_columns(&mut v0, start, &e.vectors);
        for j in 0..k {
            sig[start + j] = value;
            cluster_id[start + j] = id;
            singulars.push(DualNumber::new(value, e.values[j]));
        }
    }
    singulars.extend(inf_sigma.iter().take_while(|&&s| s > threshold).map(|&s| DualNumber::new(0.0, s)));
    let t = singulars.len();

    let b = coupling(&u0, &v0);
    let mut x = QMatrix::zeros(m, m);
    let mut y = QMatrix::zeros(n, n);
    for p in 0..r {
        for q in 0..r {
            let bpq = b[(p, q)];
            let c = b[(q, p)].conj();
            if cluster_id[p] == cluster_id[q] {
                let xpq = (bpq - c).scale(0.25 / sig[p]);
                x[(p, q)] = xpq;
                y[(p, q)] = -xpq;
            } else {
                let (sp, sq) = (sig[p], sig[q]);
                let d = sq * sq - sp * sp;
                x[(p, q)] = (bpq.scale(sq) + c.scale(sp)).scale(1.0 / d);
                y[(p, q)] = (c.scale(sq) + bpq.scale(sp)).scale(1.0 / d);
            }
        }
        for i in r..m {
            let xiq = b[(i, p)].scale(1.0 / sig[p]);
            x[(i, p)] = xiq;
            x[(p, i)] = -xiq.conj();
        }
        for j in r..n {
            let ypj = -b[(p, j)].scale(1.0 / sig[p]);
            y[(p, j)] = ypj;
            y[(j, p)] = -ypj.conj();
        }
    }
    let uinf = &u0 * &x;
    let vinf = &v0 * &y;
    DualSvd {
        u: DQMatrix::new(u0, uinf).expect("square"),
        v: DQMatrix::new(v0, vinf).expect("square"),
        singulars,
        r,
        t,
        threshold,
    }
}

/// Singular values read off the Hermitian `[[O, A], [A*, O]]`: its leading
/// `min(m, n)` eigenvalues. Used as an independent check of [`svd`].
pub fn augmented_singular_values(a: &DQMatrix) -> Result<Vec<DualNumber>> {
    let (m, n) = a.shape();
    let mut std = QMatrix::zeros(m + n, m + n);
    let mut inf = QMatrix::zeros(m + n, m + n);
    std.set_block(0, m, a.std());
    std.set_block(m, 0, &a.std().adjoint());
    inf.set_block(0, m, a.inf());
    inf.set_block(m, 0, &a.inf().adjoint());
    let e = hermitian_eig(&DQMatrix::new(std, inf)?)?;
    Ok(e.eigenvalues[..m.min(n)].to_vec())
}

/// `σ_k(A) - λ_k(H)` for `H = (A* + A)/2`, `k = 1..m`; singular values are
/// padded with zeros to `m`.
pub fn fan_hoffman_gap(a: &DQMatrix) -> Result<Vec<DualNumber>> {
    if !a.is_square() {
        return Err(crate::error::dim_mismatch("square matrix", format!("{}x{}", a.rows(), a.cols())));
    }
    let m = a.rows();
    let h = a.hermitian_part();
    let lam = hermitian_eig(&h)?.eigenvalues;
    let sig = svd(a).padded(m);
    Ok(sig.iter().zip(&lam).map(|(s, l)| *s - *l).collect())
}
