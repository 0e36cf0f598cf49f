//! Dense row-major quaternion matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{dim_mismatch, Result};
use crate::quaternion::Quaternion;

/// Entrywise tolerance of [`QMatrix::is_hermitian`], relative to `max(1, max|a_ij|)`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance of [`QMatrix::is_unitary`] on `‖A*A - I‖_max`.
pub const UNITARY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(dim_mismatch(rows * cols, data.len()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Quaternion>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    /// Real diagonal matrix of the given shape.
    pub fn diag_real(rows: usize, cols: usize, d: &[f64]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &v) in d.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = Quaternion::real(v);
        }
        m
    }

    pub fn diag(d: &[Quaternion]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn column_vector(v: &[Quaternion]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Quaternion> {
        self.data
    }

    pub fn column(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Quaternion]) {
        assert_eq!(v.len(), self.rows);
        for (i, &q) in v.iter().enumerate() {
            self[(i, j)] = q;
        }
    }

    pub fn row(&self, i: usize) -> &[Quaternion] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Columns `idx` in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])])
    }

    pub fn columns_range(&self, start: usize, end: usize) -> Self {
        Self::from_fn(self.rows, end - start, |i, j| self[(i, start + j)])
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    pub fn hstack(&self, other: &QMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(dim_mismatch(format!("{} rows", self.rows), format!("{} rows", other.rows)));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        Ok(m)
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise conjugate `Ā`.
    pub fn conj(&self) -> Self {
        self.map(Quaternion::conj)
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|q| q.scale(s))
    }

    /// Right scalar multiplication `A·b`.
    pub fn mul_scalar_right(&self, b: Quaternion) -> Self {
        self.map(|q| q * b)
    }

    /// Left scalar multiplication `b·A`.
    pub fn mul_scalar_left(&self, b: Quaternion) -> Self {
        self.map(|q| b * q)
    }

    pub fn try_add(&self, other: &QMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &QMatrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn try_mul(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(dim_mismatch(
                format!("{}x{} * {}x_", self.rows, self.cols, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for (k, &a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &QMatrix, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    fn check_same_shape(&self, other: &QMatrix) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(dim_mismatch(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(())
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Quaternion]) -> Result<Vec<Quaternion>> {
        if v.len() != self.cols {
            return Err(dim_mismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// Frobenius norm `‖A‖`.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|q| q.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|q| q.is_finite())
    }

    /// `max |A - A*|` over entries; `∞` for non-square input.
    pub fn hermitian_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut r: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                r = r.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        r
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_residual() <= HERMITIAN_TOL * self.max_abs().max(1.0)
    }

    /// `(A + A*)/2`.
    pub fn hermitian_part(&self) -> Self {
        let a = self.adjoint();
        self.zip(&a, |x, y| (x + y).scale(0.5))
    }

    /// `max |A*A - I|` over entries.
    pub fn unitary_residual(&self) -> f64 {
        let g = self.adjoint() * self;
        (&g - &Self::identity(self.cols)).max_abs()
    }

    /// Columns orthonormal within [`UNITARY_TOL`]; square is not required.
    pub fn has_orthonormal_columns(&self) -> bool {
        self.unitary_residual() <= UNITARY_TOL
    }

    pub fn is_unitary(&self) -> bool {
        self.is_square() && self.has_orthonormal_columns()
    }

    pub fn is_normal(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        let a = self.adjoint();
        (&(self * &a) - &(&a * self)).max_abs() <= tol * self.max_abs().powi(2).max(1.0)
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods return errors.

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        self.try_add(rhs).expect("shape mismatch in matrix addition")
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        self.try_sub(rhs).expect("shape mismatch in matrix subtraction")
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("shape mismatch in matrix product")
    }
}

impl Mul<&QMatrix> for QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        &self * rhs
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.map(|q| -q)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| format!("{q}")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
