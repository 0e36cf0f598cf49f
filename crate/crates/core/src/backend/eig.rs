//! Eigendecomposition of quaternion Hermitian matrices through the complex
//! adjoint.

use super::adjoint::{quaternion_vector_from_complex, to_complex_adjoint};
use super::tridiag::hermitian_eigen;
use super::vecops::{normalize, project_out, vnorm};
use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

/// `A = V·diag(values)·V*` with `V` unitary and `values` descending.
#[derive(Clone, Debug)]
pub struct QHermEig {
    pub values: Vec<f64>,
    pub vectors: QMatrix,
}

/// Hermitian eigendecomposition of a quaternion matrix.
///
/// Every eigenvalue of the `2m × 2m` complex adjoint appears twice; each
/// doubled cluster is reduced to quaternion eigenvectors by pivoted
/// Gram–Schmidt over quaternion lines. Eigenvectors are phase-fixed so that
/// their largest-modulus entry is real and positive.
pub fn hermitian_eig(a: &QMatrix) -> Result<QHermEig> {
    if !a.is_square() {
        return Err(Error::NotHermitian { residual: f64::INFINITY });
    }
    if !a.is_hermitian() {
        return Err(Error::NotHermitian {
            residual: a.hermitian_residual(),
        });
    }
    let m = a.rows();
    if m == 0 {
        return Ok(QHermEig {
            values: Vec::new(),
            vectors: QMatrix::zeros(0, 0),
        });
    }
    let a = a.hermitian_part();
    let (cvals, cvecs) = hermitian_eigen(&to_complex_adjoint(&a))?;

    // Doubled eigenvalues agree to rounding; group them with a loose gap so
    // that each group has even size.
    let delta = 1e-10 * a.norm().max(1.0);
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=cvals.len() {
        let split = k == cvals.len() || cvals[k - 1] - cvals[k] > delta;
        if split && (k - start) % 2 == 0 {
            groups.push((start, k));
            start = k;
        }
    }
    if start != cvals.len() {
        groups.push((start, cvals.len()));
    }

    let mut basis: Vec<Vec<Quaternion>> = Vec::with_capacity(m);
    for &(lo, hi) in &groups {
        let want = ((hi - lo) / 2).min(m - basis.len());
        let mut cands: Vec<Vec<Quaternion>> = (lo..hi)
            .map(|k| quaternion_vector_from_complex(&cvecs.column(k)))
            .collect();
        for _ in 0..want {
            let mut best: Option<(usize, f64, Vec<Quaternion>)> = None;
            for (ci, cand) in cands.iter().enumerate() {
                let mut r = cand.clone();
                project_out(&mut r, &basis);
                project_out(&mut r, &basis);
                let nr = vnorm(&r);
                if best.as_ref().is_none_or(|b| nr > b.1) {
                    best = Some((ci, nr, r));
                }
            }
            let (ci, _, mut r) = best.expect("candidate pool exhausted");
            cands.swap_remove(ci);
            normalize(&mut r);
            basis.push(r);
        }
    }
    debug_assert_eq!(basis.len(), m);

    let mut pairs: Vec<(f64, Vec<Quaternion>)> = basis
        .into_iter()
        .map(|mut x| {
            fix_phase(&mut x);
            let ax = a.mul_vec(&x).expect("square");
            let rq: f64 = x.iter().zip(&ax).map(|(xi, yi)| (xi.conj() * *yi).w).sum();
            (rq, x)
        })
        .collect();
    pairs.sort_by(|p, q| q.0.total_cmp(&p.0));

    let mut vectors = QMatrix::zeros(m, m);
    let mut values = Vec::with_capacity(m);
    for (j, (v, x)) in pairs.into_iter().enumerate() {
        values.push(v);
        vectors.set_column(j, &x);
    }
    Ok(QHermEig { values, vectors })
}

/// Right-multiplies `x` by the unit quaternion that makes its largest-modulus
/// entry real positive. Ties go to the first index.
pub(crate) fn fix_phase(x: &mut [Quaternion]) {
    let mut best = 0;
    let mut bn = -1.0;
    for (i, q) in x.iter().enumerate() {
        let n = q.norm();
        if n > bn * (1.0 + 1e-12) {
            bn = n;
            best = i;
        }
    }
    if bn <= 0.0 {
        return;
    }
    let u = x[best].conj().scale(1.0 / bn);
    for q in x.iter_mut() {
        *q *= u;
    }
}
