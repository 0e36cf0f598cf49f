//! Complex adjoint of a quaternion matrix.
//!
//! Writing `A = A1 + A2·j` with complex `A1`, `A2`, the adjoint is the
//! `2m × 2n` complex matrix `[[A1, A2], [-conj(A2), conj(A1)]]`. The map is
//! additive and multiplicative, and a quaternion vector `x = x1 + x2·j`
//! corresponds to the complex column `[x1; -conj(x2)]`.

use num_complex::Complex64;

use super::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

/// Maps `A ∈ Q^{m×n}` to its `2m × 2n` complex adjoint.
pub fn to_complex_adjoint(a: &QMatrix) -> CMatrix {
    let (m, n) = a.shape();
    let mut c = CMatrix::zeros(2 * m, 2 * n);
    for i in 0..m {
        for j in 0..n {
            let (a1, a2) = a[(i, j)].to_complex_pair();
            c[(i, j)] = a1;
            c[(i, n + j)] = a2;
            c[(m + i, j)] = -a2.conj();
            c[(m + i, n + j)] = a1.conj();
        }
    }
    c
}

/// Inverse of [`to_complex_adjoint`].
///
/// Fails with [`Error::MalformedAdjoint`] if the dimensions are odd or the
/// lower blocks do not mirror the upper ones exactly.
pub fn from_complex_adjoint(c: &CMatrix) -> Result<QMatrix> {
    if !c.rows().is_multiple_of(2) || !c.cols().is_multiple_of(2) {
        return Err(Error::MalformedAdjoint);
    }
    let (m, n) = (c.rows() / 2, c.cols() / 2);
    let mut a = QMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            let a1 = c[(i, j)];
            let a2 = c[(i, n + j)];
            if c[(m + i, j)] != -a2.conj() || c[(m + i, n + j)] != a1.conj() {
                return Err(Error::MalformedAdjoint);
            }
            a[(i, j)] = Quaternion::from_complex_pair(a1, a2);
        }
    }
    Ok(a)
}

/// Quaternion vector represented by the complex column `[a; b]` of length `2m`.
pub(crate) fn quaternion_vector_from_complex(col: &[Complex64]) -> Vec<Quaternion> {
    let m = col.len() / 2;
    (0..m)
        .map(|i| Quaternion::from_complex_pair(col[i], -col[m + i].conj()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_of_j() {
        let a = QMatrix::from_rows(&[vec![Quaternion::J]]);
        let c = to_complex_adjoint(&a);
        assert_eq!(c[(0, 0)], Complex64::new(0.0, 0.0));
        assert_eq!(c[(0, 1)], Complex64::new(1.0, 0.0));
        assert_eq!(c[(1, 0)], Complex64::new(-1.0, 0.0));
        assert_eq!(c[(1, 1)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn identity_roundtrip() {
        let c = CMatrix::identity(4);
        let a = from_complex_adjoint(&c).unwrap();
        assert_eq!(a, QMatrix::identity(2));
        assert_eq!(to_complex_adjoint(&a), c);
    }

    #[test]
    fn rejects_broken_symmetry() {
        let mut c = CMatrix::identity(2);
        c[(1, 1)] = Complex64::new(2.0, 0.0);
        assert_eq!(from_complex_adjoint(&c), Err(Error::MalformedAdjoint));
        assert_eq!(from_complex_adjoint(&CMatrix::identity(3)), Err(Error::MalformedAdjoint));
    }

    #[test]
    fn vector_correspondence() {
        // A x computed in quaternions equals the adjoint acting on [x1; -conj(x2)].
        let a = QMatrix::from_rows(&[
            vec![Quaternion::new(1.0, 2.0, -1.0, 0.5), Quaternion::new(0.0, 1.0, 3.0, -2.0)],
            vec![Quaternion::new(-1.0, 0.0, 0.5, 1.0), Quaternion::new(2.0, -0.5, 0.0, 1.0)],
        ]);
        let x = vec![Quaternion::new(0.3, -1.0, 2.0, 0.1), Quaternion::new(1.5, 0.2, -0.7, 0.4)];
        let ax = a.mul_vec(&x).unwrap();
        let mut col = CMatrix::zeros(4, 1);
        for (i, q) in x.iter().enumerate() {
            let (c1, c2) = q.to_complex_pair();
            col[(i, 0)] = c1;
            col[(2 + i, 0)] = -c2.conj();
        }
        let y = to_complex_adjoint(&a).matmul(&col);
        let back = quaternion_vector_from_complex(&y.column(0));
        for (p, q) in back.iter().zip(&ax) {
            assert!((*p - *q).norm() < 1e-14);
        }
    }
}
