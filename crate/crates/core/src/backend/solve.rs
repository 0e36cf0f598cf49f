//! Linear solves and orthonormal completion for quaternion matrices.

use super::vecops::{normalize, project_out, vnorm};
use crate::error::{dim_mismatch, Error, Result};
use crate::qmatrix::{QMatrix, UNITARY_TOL};
use crate::quaternion::Quaternion;

/// Extends `v0` (orthonormal columns) to a unitary matrix whose leading
/// columns are exactly `v0`.
///
/// Added columns come from the standard basis vectors, picked greedily by
/// largest component orthogonal to the current span.
pub fn orthonormal_completion(v0: &QMatrix) -> Result<QMatrix> {
    let residual = v0.unitary_residual();
    if v0.cols() > v0.rows() || residual > UNITARY_TOL {
        return Err(Error::NotOrthonormal { residual });
    }
    let m = v0.rows();
    let mut basis: Vec<Vec<Quaternion>> = (0..v0.cols()).map(|j| v0.column(j)).collect();
    extend_with_standard_basis(&mut basis, m);
    let mut w = v0.clone();
    for col in &basis[v0.cols()..] {
        w = w.hstack(&QMatrix::column_vector(col)).expect("same rows");
    }
    Ok(w)
}

/// Orthonormalizes the columns of `v0` in order, then completes to a unitary
/// matrix. Columns that are numerically dependent are replaced.
pub(crate) fn gram_schmidt_complete(v0: &QMatrix) -> QMatrix {
    let m = v0.rows();
    let mut basis: Vec<Vec<Quaternion>> = Vec::with_capacity(m);
    for j in 0..v0.cols() {
        let mut c = v0.column(j);
        project_out(&mut c, &basis);
        project_out(&mut c, &basis);
        if vnorm(&c) > 1e-8 {
            normalize(&mut c);
            basis.push(c);
        }
    }
    extend_with_standard_basis(&mut basis, m);
    let mut w = QMatrix::zeros(m, m);
    for (j, col) in basis.iter().enumerate() {
        w.set_column(j, col);
    }
    w
}

fn extend_with_standard_basis(basis: &mut Vec<Vec<Quaternion>>, m: usize) {
    while basis.len() < m {
        let mut best: Option<(f64, Vec<Quaternion>)> = None;
        for i in 0..m {
            let mut e = vec![Quaternion::ZERO; m];
            e[i] = Quaternion::ONE;
            project_out(&mut e, basis);
            project_out(&mut e, basis);
            let n = vnorm(&e);
            if best.as_ref().is_none_or(|b| n > b.0 * (1.0 + 1e-12)) {
                best = Some((n, e));
            }
        }
        let (_, mut e) = best.expect("m > 0");
        normalize(&mut e);
        basis.push(e);
    }
}

/// Solves `A X = B` for square nonsingular `A` by Gaussian elimination with
/// partial pivoting. Row operations act by left multiplication.
pub fn solve(a: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    let n = a.rows();
    if !a.is_square() {
        return Err(dim_mismatch("square matrix", format!("{}x{}", a.rows(), a.cols())));
    }
    if b.rows() != n {
        return Err(dim_mismatch(format!("{n} rows"), format!("{} rows", b.rows())));
    }
    let k = b.cols();
    let mut lu = a.clone();
    let mut x = b.clone();
    let scale = a.max_abs();
    for col in 0..n {
        let (piv, pn) = (col..n)
            .map(|r| (r, lu[(r, col)].norm()))
            .fold((col, -1.0), |acc, c| if c.1 > acc.1 { c } else { acc });
        if pn <= f64::EPSILON * scale * n as f64 || pn == 0.0 {
            return Err(Error::Singular { rank: col, dim: n });
        }
        if piv != col {
            for j in 0..n {
                let t = lu[(col, j)];
                lu[(col, j)] = lu[(piv, j)];
                lu[(piv, j)] = t;
            }
            for j in 0..k {
                let t = x[(col, j)];
                x[(col, j)] = x[(piv, j)];
                x[(piv, j)] = t;
            }
        }
        let pinv = lu[(col, col)].inverse()?;
        for r in col + 1..n {
            let l = lu[(r, col)] * pinv;
            if l.is_zero() {
                continue;
            }
            for j in col..n {
                let t = l * lu[(col, j)];
                lu[(r, j)] -= t;
            }
            for j in 0..k {
                let t = l * x[(col, j)];
                x[(r, j)] -= t;
            }
        }
    }
    for col in (0..n).rev() {
        let pinv = lu[(col, col)].inverse()?;
        for j in 0..k {
            let mut acc = x[(col, j)];
            for c in col + 1..n {
                acc -= lu[(col, c)] * x[(c, j)];
            }
            x[(col, j)] = pinv * acc;
        }
    }
    Ok(x)
}

pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    solve(a, &QMatrix::identity(a.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_of_e1() {
        let v0 = QMatrix::column_vector(&[Quaternion::ONE, Quaternion::ZERO]);
        let w = orthonormal_completion(&v0).unwrap();
        assert!((&w - &QMatrix::identity(2)).max_abs() < 1e-15);
    }

    #[test]
    fn completion_of_mixed_vector() {
        let s = 0.5f64.sqrt();
        let v0 = QMatrix::column_vector(&[Quaternion::real(s), Quaternion::I.scale(s)]);
        let w = orthonormal_completion(&v0).unwrap();
        assert!(w.is_unitary());
        assert_eq!(w.column(0), v0.column(0));
    }

    #[test]
    fn completion_of_square_unitary_is_identity_map() {
        let s = 0.5f64.sqrt();
        let u = QMatrix::from_rows(&[
            vec![Quaternion::real(s), Quaternion::K.scale(s)],
            vec![Quaternion::K.scale(s), Quaternion::real(s)],
        ]);
        assert_eq!(orthonormal_completion(&u).unwrap(), u);
    }

    #[test]
    fn completion_rejects_non_orthonormal() {
        let v0 = QMatrix::column_vector(&[Quaternion::ONE, Quaternion::ONE]);
        assert!(matches!(orthonormal_completion(&v0), Err(Error::NotOrthonormal { .. })));
    }

    #[test]
    fn solve_and_inverse() {
        let a = QMatrix::diag(&[Quaternion::real(2.0), Quaternion::I]);
        let inv = inverse(&a).unwrap();
        assert!((&inv - &QMatrix::diag(&[Quaternion::real(0.5), -Quaternion::I])).max_abs() < 1e-15);
        let b = QMatrix::from_rows(&[
            vec![Quaternion::new(0.0, 1.0, 2.0, 0.0), Quaternion::new(1.0, 0.0, 0.0, 3.0)],
            vec![Quaternion::new(0.5, 0.0, -1.0, 1.0), Quaternion::new(0.0, 0.0, 2.0, 0.0)],
        ]);
        let binv = inverse(&b).unwrap();
        assert!((&(&b * &binv) - &QMatrix::identity(2)).max_abs() < 1e-14);
        assert!((&(&binv * &b) - &QMatrix::identity(2)).max_abs() < 1e-14);
        assert!(matches!(inverse(&QMatrix::zeros(2, 2)), Err(Error::Singular { .. })));
    }
}
