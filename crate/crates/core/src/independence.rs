//! Right linear independence of dual quaternion vectors and the two ranks.
//!
//! With `A = [u¹ … uⁿ]` and `x = x_st + x_I ε`, `Ax = 0` splits into
//! `A_st x_st = 0` and `A_st x_I = -A_I x_st`. Strict and appreciable
//! independence both reduce to `rank(A_st) = n`. Weak independence asks
//! that every solution has `x_st = 0`: writing `x_st = N y` over a null
//! basis `N` of `A_st`, solvability of the second equation means
//! `(I - A_st A_st†) A_I N y = 0`, so the test is that this matrix has
//! full column rank.

use serde::Serialize;

use crate::backend;
use crate::dqmatrix::{DQMatrix, DQVector};
use crate::error::{dim_mismatch, Error, Result};
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

/// Largest column count handled by the exhaustive weak-rank search.
pub const WEAK_RANK_SUBSET_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `Σ uⁱαᵢ = 0 ⇒ all αᵢ = 0`.
    Strict,
    /// `Σ uⁱαᵢ infinitesimal ⇒ all αᵢ infinitesimal`.
    Appreciable,
    /// `Σ uⁱαᵢ = 0 ⇒ all αᵢ infinitesimal`.
    Weak,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndependenceReport {
    pub mode: Mode,
    pub independent: bool,
    /// Coefficients violating the definition when dependent: `Ax = 0`,
    /// `x ≠ 0` (strict); `Ax` infinitesimal, `x` appreciable (appreciable);
    /// `Ax = 0`, `x_st ≠ 0` (weak).
    pub witness: Option<DQVector>,
}

/// Tests the columns of `A`.
pub fn check_columns(a: &DQMatrix, mode: Mode) -> IndependenceReport {
    let (m, n) = a.shape();
    check_columns_with_tol(a, mode, backend::default_rank_rel_tol(m, n))
}

/// Tests the vectors `u¹ … uⁿ` (all of one dimension).
pub fn check_independence(vectors: &[DQVector], mode: Mode) -> Result<IndependenceReport> {
    if vectors.is_empty() {
        return Err(dim_mismatch("at least one vector", 0));
    }
    Ok(check_columns(&DQMatrix::from_columns(vectors)?, mode))
}

/// As [`check_columns`] with an explicit relative rank tolerance.
pub fn check_columns_with_tol(a: &DQMatrix, mode: Mode, rel_tol: f64) -> IndependenceReport {
    let n = a.cols();
    let s = backend::svd(a.std());
    let r = s.rank_with(rel_tol);
    let null = s.v.columns_range(r, n);
    match mode {
        Mode::Strict | Mode::Appreciable if r == n => IndependenceReport { mode, independent: true, witness: None },
        Mode::Strict => IndependenceReport {
            mode,
            independent: false,
            witness: Some(strict_witness(a, &null)),
        },
        Mode::Appreciable => IndependenceReport {
            mode,
            independent: false,
            witness: Some(DQVector::from_std(column_sum(&null))),
        },
        Mode::Weak => weak_check(a, &null, rel_tol, s.sigma_max()),
    }
}

fn column_sum(m: &QMatrix) -> Vec<Quaternion> {
    (0..m.rows()).map(|i| m.row(i).iter().copied().sum()).collect()
}

/// `x_st` from the null space, `x_I = -A_st† A_I x_st` when that solves the
/// ε-equation, otherwise the purely infinitesimal `x_st·ε`.
fn strict_witness(a: &DQMatrix, null: &QMatrix) -> DQVector {
    let xs = column_sum(null);
    let rhs: Vec<Quaternion> = a.inf().mul_vec(&xs).expect("shape").iter().map(|q| -*q).collect();
    let xi = backend::pinv(a.std()).mul_vec(&rhs).expect("shape");
    let resid = a.std().mul_vec(&xi).expect("shape");
    let scale = 1.0 + a.std().norm() + a.inf().norm();
    let err = resid.iter().zip(&rhs).map(|(p, q)| (*p - *q).norm()).fold(0.0, f64::max);
    if err <= 1e-10 * scale {
        DQVector::new(xs, xi).expect("lengths")
    } else {
        DQVector::from_inf(xs)
    }
}

fn weak_check(a: &DQMatrix, null: &QMatrix, rel_tol: f64, sigma_max: f64) -> IndependenceReport {
    let d = null.cols();
    if d == 0 {
        return IndependenceReport { mode: Mode::Weak, independent: true, witness: None };
    }
    let m = a.rows();
    let pinv = backend::pinv(a.std());
    let proj = &QMatrix::identity(m) - &(a.std() * &pinv);
    let coupled = &(&proj * a.inf()) * null;
    let cs = backend::svd(&coupled);
    let scale = sigma_max.max(a.inf().norm());
    let thresh = rel_tol * scale;
    let rank = cs.sigma.iter().filter(|&&s| s > thresh).count();
    if rank == d {
        return IndependenceReport { mode: Mode::Weak, independent: true, witness: None };
    }
    // a direction y with (I - P) A_I N y = 0
    let y = cs.v.column(rank);
    let xs = null.mul_vec(&y).expect("shape");
    let rhs: Vec<Quaternion> = a.inf().mul_vec(&xs).expect("shape").iter().map(|q| -*q).collect();
    let xi = pinv.mul_vec(&rhs).expect("shape");
    IndependenceReport {
        mode: Mode::Weak,
        independent: false,
        witness: Some(DQVector::new(xs, xi).expect("lengths")),
    }
}

/// Rank of `A`: the largest strictly independent column subset, equal to
/// `rank(A_st)`.
pub fn rank(a: &DQMatrix) -> usize {
    backend::rank_default(a.std())
}

pub fn rank_with_tol(a: &DQMatrix, rel_tol: f64) -> usize {
    backend::rank(a.std(), rel_tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeakRank {
    /// The weak rank, or the nonzero-singular-value count when `exact` is false.
    pub value: usize,
    /// Whether `value` came from the exhaustive subset search.
    pub exact: bool,
    /// Number of nonzero singular values `t`, reported alongside.
    pub nonzero_singular_values: usize,
    /// Number of appreciable singular values `r = rank(A)`.
    pub appreciable_singular_values: usize,
}

/// Weak rank by exhaustive search over column subsets (largest first).
/// Fails with `TooLargeForExactSearch` beyond [`WEAK_RANK_SUBSET_LIMIT`]
/// columns.
pub fn weak_rank(a: &DQMatrix) -> Result<WeakRank> {
    let (m, n) = a.shape();
    weak_rank_with_tol(a, backend::default_rank_rel_tol(m, n))
}

pub fn weak_rank_with_tol(a: &DQMatrix, rel_tol: f64) -> Result<WeakRank> {
    let n = a.cols();
    if n > WEAK_RANK_SUBSET_LIMIT {
        return Err(Error::TooLargeForExactSearch { cols: n, limit: WEAK_RANK_SUBSET_LIMIT });
    }
    let s = crate::spectral::svd_with_tol(a, rel_tol);
    // weak independence is inherited by subsets, so the first hit from the
    // top is the maximum
    let mut value = 0;
    'sizes: for size in (1..=n).rev() {
        for subset in Combinations::new(n, size) {
            if check_columns_with_tol(&a.select_columns(&subset), Mode::Weak, rel_tol).independent {
                value = size;
                break 'sizes;
            }
        }
    }
    Ok(WeakRank {
        value,
        exact: true,
        nonzero_singular_values: s.t,
        appreciable_singular_values: s.r,
    })
}

/// Weak rank when the exact search is affordable, otherwise the count of
/// nonzero singular values flagged as a heuristic.
pub fn weak_rank_or_estimate(a: &DQMatrix, rel_tol: f64) -> WeakRank {
    weak_rank_with_tol(a, rel_tol).unwrap_or_else(|_| {
        let s = crate::spectral::svd_with_tol(a, rel_tol);
        WeakRank {
            value: s.t,
            exact: false,
            nonzero_singular_values: s.t,
            appreciable_singular_values: s.r,
        }
    })
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
