//! Independent oracles and generators shared by the integration tests.
//!
//! The oracles never call the crate's backend: quaternion matrices are mapped
//! to real matrices through the left-multiplication representation and
//! handed to nalgebra.
#![allow(dead_code)]

pub mod golden;

use dq_linalg::{DQMatrix, DualNumber, DualQuaternion, QMatrix, Quaternion};
use nalgebra::{DMatrix, Matrix4, SymmetricEigen};
use proptest::prelude::*;

/// Real 4×4 matrix of `p ↦ q p`.
pub fn left_mat(q: Quaternion) -> Matrix4<f64> {
    let (a, b, c, d) = (q.w, q.x, q.y, q.z);
    Matrix4::new(a, -b, -c, -d, b, a, -d, c, c, d, a, -b, d, -c, b, a)
}

/// Real `4m × 4n` matrix of `x ↦ A x` for quaternion vectors stored as
/// consecutive `(w, x, y, z)` blocks.
pub fn real_rep(a: &QMatrix) -> DMatrix<f64> {
    let (m, n) = a.shape();
    let mut r = DMatrix::zeros(4 * m, 4 * n);
    for i in 0..m {
        for j in 0..n {
            r.fixed_view_mut::<4, 4>(4 * i, 4 * j).copy_from(&left_mat(a[(i, j)]));
        }
    }
    r
}

/// Real `8m × 8n` matrix of `(x_st, x_I) ↦ (A_st x_st, A_I x_st + A_st x_I)`.
pub fn dual_real_rep(a: &DQMatrix) -> DMatrix<f64> {
    let (m, n) = a.shape();
    let s = real_rep(a.std());
    let i = real_rep(a.inf());
    let mut r = DMatrix::zeros(8 * m, 8 * n);
    r.view_mut((0, 0), (4 * m, 4 * n)).copy_from(&s);
    r.view_mut((4 * m, 0), (4 * m, 4 * n)).copy_from(&i);
    r.view_mut((4 * m, 4 * n), (4 * m, 4 * n)).copy_from(&s);
    r
}

/// Reads a quaternion matrix back from its real representation (first
/// column of every 4×4 block).
pub fn from_real_rep(r: &DMatrix<f64>) -> QMatrix {
    let (m, n) = (r.nrows() / 4, r.ncols() / 4);
    QMatrix::from_fn(m, n, |i, j| Quaternion::new(r[(4 * i, 4 * j)], r[(4 * i + 1, 4 * j)], r[(4 * i + 2, 4 * j)], r[(4 * i + 3, 4 * j)]))
}

pub fn real_rank(r: &DMatrix<f64>, rel_tol: f64) -> usize {
    if r.is_empty() {
        return 0;
    }
    let sv = r.clone().svd(false, false).singular_values;
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Quaternion rank: the real representation has four times the rank.
pub fn oracle_rank(a: &QMatrix) -> usize {
    let (m, n) = a.shape();
    let r = real_rank(&real_rep(a), m.max(n) as f64 * 1e-12);
    assert_eq!(r % 4, 0, "real representation rank {r} not a multiple of 4");
    r / 4
}

/// Eigenvalues of a quaternion Hermitian matrix, descending. Each appears
/// four times in the real representation.
pub fn oracle_herm_eigs(a: &QMatrix) -> Vec<f64> {
    let r = real_rep(a);
    let r = (&r + r.transpose()) * 0.5;
    let mut ev: Vec<f64> = SymmetricEigen::new(r).eigenvalues.iter().cloned().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev.iter().step_by(4).cloned().collect()
}

/// Orthonormal basis of the real null space of `r`, from the eigenvectors of
/// `rᵀ r` with eigenvalues at most `tol²·max(1, ‖r‖²)`.
pub fn real_null_space(r: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    let g = r.transpose() * r;
    let scale = g.norm().max(1.0);
    let e = SymmetricEigen::new(g);
    let keep: Vec<usize> = (0..e.eigenvalues.len()).filter(|&k| e.eigenvalues[k] <= tol * tol * scale).collect();
    DMatrix::from_fn(r.ncols(), keep.len(), |i, j| e.eigenvectors[(i, keep[j])])
}

/// Weak independence of the columns: every solution of `Ax = 0` has
/// `x_st = 0`, i.e. the null space of the dual representation has a
/// vanishing `x_st` block.
pub fn oracle_weakly_independent(a: &DQMatrix) -> bool {
    let n = a.cols();
    let ns = real_null_space(&dual_real_rep(a), 1e-7);
    ns.rows(0, 4 * n).norm() < 1e-6
}

/// Strict independence: `Ax = 0` only for `x = 0`.
pub fn oracle_strictly_independent(a: &DQMatrix) -> bool {
    real_null_space(&dual_real_rep(a), 1e-7).ncols() == 0
}

/// Largest column subset that is weakly independent, by exhaustive search.
pub fn oracle_weak_rank(a: &DQMatrix) -> usize {
    let n = a.cols();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        if oracle_weakly_independent(&a.select_columns(&idx)) {
            best = size;
        }
    }
    best
}

/// Moore–Penrose inverse of a quaternion matrix through nalgebra.
pub fn oracle_pinv(a: &QMatrix) -> QMatrix {
    let r = real_rep(a);
    let eps = 1e-12 * r.norm().max(1.0);
    let p = r.pseudo_inverse(eps).expect("svd converges");
    from_real_rep(&p)
}

/// Inverse of a square dual quaternion matrix read off the inverse of its
/// dual representation.
pub fn oracle_dq_inverse(a: &DQMatrix) -> Option<DQMatrix> {
    let m = a.rows();
    let inv = dual_real_rep(a).try_inverse()?;
    let s = from_real_rep(&inv.view((0, 0), (4 * m, 4 * m)).into_owned());
    let i = from_real_rep(&inv.view((4 * m, 0), (4 * m, 4 * m)).into_owned());
    Some(DQMatrix::new(s, i).unwrap())
}

pub fn qdiff(a: &QMatrix, b: &QMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| (*x - *y).norm()).fold(0.0, f64::max)
}

/// Entrywise max differences of both parts.
pub fn dqdiff(a: &DQMatrix, b: &DQMatrix) -> (f64, f64) {
    (qdiff(a.std(), b.std()), qdiff(a.inf(), b.inf()))
}

pub fn dual_close(a: DualNumber, b: DualNumber, tol: f64) -> bool {
    (a.std - b.std).abs() <= tol && (a.inf - b.inf).abs() <= tol
}

/// Compact form for failure messages.
pub fn fmt_duals(v: &[DualNumber]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

// ---- proptest generators ----

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    prop::array::uniform4(-2.0..2.0f64).prop_map(|c| Quaternion::new(c[0], c[1], c[2], c[3]))
}

pub fn dual_quaternion() -> impl Strategy<Value = DualQuaternion> {
    (quaternion(), quaternion()).prop_map(|(s, i)| DualQuaternion::new(s, i))
}

pub fn qmatrix(m: usize, n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(quaternion(), m * n).prop_map(move |v| QMatrix::from_vec(m, n, v).unwrap())
}

pub fn dq_matrix(m: usize, n: usize) -> impl Strategy<Value = DQMatrix> {
    (qmatrix(m, n), qmatrix(m, n)).prop_map(|(s, i)| DQMatrix::new(s, i).unwrap())
}

pub fn dq_hermitian(n: usize) -> impl Strategy<Value = DQMatrix> {
    dq_matrix(n, n).prop_map(|a| a.hermitian_part())
}

/// Square dual quaternion matrix with a random size in `1..=max`.
pub fn square_dq(max: usize) -> impl Strategy<Value = DQMatrix> {
    (1..=max).prop_flat_map(|n| dq_matrix(n, n))
}

pub fn any_dq(max_m: usize, max_n: usize) -> impl Strategy<Value = DQMatrix> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| dq_matrix(m, n))
}

/// Dyadic rationals `k/8` with `|k| ≤ 40`: products and the square roots
/// used below stay exact in binary floating point.
pub fn dyadic() -> impl Strategy<Value = f64> {
    (-40i32..=40).prop_map(|k| k as f64 / 8.0)
}

/// Dual numbers from a mixed pool: generic reals, dyadics, zero standard part.
pub fn dual_number() -> impl Strategy<Value = DualNumber> {
    prop_oneof![
        (-5.0..5.0f64, -5.0..5.0f64).prop_map(|(s, i)| DualNumber::new(s, i)),
        (dyadic(), dyadic()).prop_map(|(s, i)| DualNumber::new(s, i)),
        dyadic().prop_map(|i| DualNumber::new(0.0, i)),
    ]
}

/// Appreciable positive dual numbers `(a + cε)² = a² + 2acε` with dyadic
/// `a > 0`, `c`, so that square roots are exact.
pub fn exact_square() -> impl Strategy<Value = DualNumber> {
    ((1i32..=24), dyadic()).prop_map(|(k, c)| {
        let a = k as f64 / 8.0;
        DualNumber::new(a * a, 2.0 * a * c)
    })
}

// ---- generalized-inverse fixtures ----

/// `A = U0 [[S, O], [O, O]] V0* + U0 B V0* ε` with rank-`r` standard part
/// and the blocks `B22`, `B21`, `B12` of `B` zeroed on request. In this basis
/// the candidate inverse satisfies condition 1 iff `B22 = O`, 3 iff
/// `B21 = O` and 4 iff `B12 = O`.
pub fn engineered_gi(seed: u64, m: usize, n: usize, r: usize, zero: [bool; 3]) -> DQMatrix {
    let mut rng = dq_linalg::sample::Sampler::new(seed);
    let u0 = rng.unitary_qmatrix(m);
    let v0 = rng.unitary_qmatrix(n);
    let s: Vec<f64> = (0..r).map(|_| rng.uniform(0.5, 3.0)).collect();
    let mut b = rng.qmatrix(m, n);
    let [b22, b21, b12] = zero;
    if b22 {
        b.set_block(r, r, &QMatrix::zeros(m - r, n - r));
    }
    if b21 {
        b.set_block(r, 0, &QMatrix::zeros(m - r, r));
    }
    if b12 {
        b.set_block(0, r, &QMatrix::zeros(r, n - r));
    }
    let st = &(&u0 * &QMatrix::diag_real(m, n, &s)) * &v0.adjoint();
    let inf = &(&u0 * &b) * &v0.adjoint();
    DQMatrix::new(st, inf).unwrap()
}

fn blocks(r: &DMatrix<f64>, rows: usize, cols: usize) -> (DMatrix<f64>, DMatrix<f64>) {
    (r.view((0, 0), (rows, cols)).into_owned(), r.view((rows, 0), (rows, cols)).into_owned())
}

/// The four Penrose conditions evaluated on the real representations.
pub fn oracle_penrose(a: &DQMatrix, g: &DQMatrix) -> [bool; 4] {
    let (m, n) = a.shape();
    let (ra, rg) = (dual_real_rep(a), dual_real_rep(g));
    let (as_, ai) = a.part_norms();
    let (gs, gi) = g.part_norms();
    let (na, ng) = (as_ + ai, gs + gi);
    let tol = 1e-8 * (1.0 + na) * (1.0 + ng) * (1.0 + na.max(ng));
    let close = |x: &DMatrix<f64>, y: &DMatrix<f64>| (x - y).norm() / 2.0 <= tol;
    let sym = |x: &DMatrix<f64>| (x - x.transpose()).norm() / 2.0 <= tol;

    let (a_s, a_i) = blocks(&ra, 4 * m, 4 * n);
    let (g_s, g_i) = blocks(&rg, 4 * n, 4 * m);
    let (aga_s, aga_i) = blocks(&(&ra * &rg * &ra), 4 * m, 4 * n);
    let (gag_s, gag_i) = blocks(&(&rg * &ra * &rg), 4 * n, 4 * m);
    let (ag_s, ag_i) = blocks(&(&ra * &rg), 4 * m, 4 * m);
    let (ga_s, ga_i) = blocks(&(&rg * &ra), 4 * n, 4 * n);
    [
        close(&aga_s, &a_s) && close(&aga_i, &a_i),
        close(&gag_s, &g_s) && close(&gag_i, &g_i),
        sym(&ag_s) && sym(&ag_i),
        sym(&ga_s) && sym(&ga_i),
    ]
}
