//! Dense complex Hermitian eigensolver: Householder reduction to a real
//! symmetric tridiagonal matrix followed by implicit QL with shifts.

use num_complex::Complex64;

use super::cmatrix::CMatrix;
use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 60;

/// Eigenvalues (descending) and unitary eigenvectors of a complex Hermitian
/// matrix. Only the lower triangle and the real part of the diagonal are
/// trusted; the caller is responsible for Hermitian input.
pub fn hermitian_eigen(a: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "eigensolver needs a square matrix");
    if n == 0 {
        return Ok((Vec::new(), CMatrix::zeros(0, 0)));
    }
    let (diag, sub, q) = tridiagonalize(a);
    let (vals, z) = tql2(diag, sub)?;

    // eigenvectors of A are Q·Z; Z is real
    let mut vecs = CMatrix::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            let qik = q[(i, k)];
            if qik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                vecs[(i, j)] += qik * z[k * n + j];
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| vals[y].total_cmp(&vals[x]));
    let sorted_vals = order.iter().map(|&k| vals[k]).collect();
    let sorted_vecs = CMatrix::from_fn(n, n, |i, j| vecs[(i, order[j])]);
    Ok((sorted_vals, sorted_vecs))
}

/// Returns `(d, e, Q)` with `Q* A Q` real symmetric tridiagonal, diagonal `d`
/// and subdiagonal `e[i] = T[i][i-1]` (`e[0] = 0`).
fn tridiagonalize(a: &CMatrix) -> (Vec<f64>, Vec<f64>, CMatrix) {
    let n = a.rows();
    let zero = Complex64::new(0.0, 0.0);
    // Work on an exactly Hermitian copy built from the lower triangle.
    let mut h = CMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => a[(i, j)],
        std::cmp::Ordering::Less => a[(j, i)].conj(),
        std::cmp::Ordering::Equal => Complex64::new(a[(i, i)].re, 0.0),
    });
    let mut q = CMatrix::identity(n);
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];

    for k in 0..n.saturating_sub(2) {
        let norm_x = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm_x;

        v.iter_mut().for_each(|c| *c = zero);
        for i in k + 1..n {
            v[i] = h[(i, k)];
        }
        v[k + 1] -= alpha;
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // H A H = A - v w* - w v*, with p = beta A v and w = p - (beta/2)(v* p) v
        for i in 0..n {
            p[i] = (k + 1..n).map(|j| h[(i, j)] * v[j]).sum::<Complex64>() * beta;
        }
        let vp: Complex64 = (k + 1..n).map(|i| v[i].conj() * p[i]).sum();
        let kfac = 0.5 * beta * vp.re;
        let w: Vec<Complex64> = (0..n).map(|i| p[i] - v[i] * kfac).collect();
        for i in 0..n {
            for j in 0..n {
                h[(i, j)] -= v[i] * w[j].conj() + w[i] * v[j].conj();
            }
        }
        // Q <- Q H
        for i in 0..n {
            let qv: Complex64 = (k + 1..n).map(|j| q[(i, j)] * v[j]).sum::<Complex64>() * beta;
            for j in k + 1..n {
                q[(i, j)] -= qv * v[j].conj();
            }
        }
    }

    // Scale by a diagonal phase so the subdiagonal becomes real nonnegative.
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut phase = Complex64::new(1.0, 0.0);
    for i in 0..n {
        d[i] = h[(i, i)].re;
        if i > 0 {
            let t = h[(i, i - 1)];
            let r = t.norm();
            e[i] = r;
            if r > 0.0 {
                phase *= t / r;
            }
            for row in 0..n {
                q[(row, i)] *= phase;
            }
        }
    }
    (d, e, q)
}

/// Implicit QL iteration for a real symmetric tridiagonal matrix.
/// Returns unsorted eigenvalues and the row-major orthogonal eigenvector matrix.
fn tql2(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= f64::EPSILON * tst1 {
                break;
            }
            m += 1;
        }
        // e[n-1] is zero, so m < n here
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_QL_ITERATIONS {
                    return Err(Error::NoConvergence(MAX_QL_ITERATIONS));
                }
                // shift from the leading 2x2 block
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for k in 0..n {
                        let zk = &mut z[k * n..(k + 1) * n];
                        h = zk[i + 1];
                        zk[i + 1] = s * zk[i] + c * h;
                        zk[i] = c * zk[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= f64::EPSILON * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok((d, z))
}
