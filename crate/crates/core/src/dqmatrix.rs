//! Dual quaternion vectors and matrices, stored as a pair of quaternion
//! matrices `A = A_st + A_I·ε`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::backend;
use crate::dq::DualQuaternion;
use crate::dual::DualNumber;
use crate::error::{dim_mismatch, Error, Result};
use crate::qmatrix::{QMatrix, UNITARY_TOL};
use crate::quaternion::Quaternion;

/// Residual tolerance for the structural flags of [`DQMatrix::structure`].
pub const STRUCTURE_TOL: f64 = 1e-10;

/// A column vector `x = x_st + x_I·ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct DQVector {
    std: Vec<Quaternion>,
    inf: Vec<Quaternion>,
}

impl DQVector {
    pub fn new(std: Vec<Quaternion>, inf: Vec<Quaternion>) -> Result<Self> {
        if std.len() != inf.len() {
            return Err(dim_mismatch(std.len(), inf.len()));
        }
        Ok(Self { std, inf })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            std: vec![Quaternion::ZERO; n],
            inf: vec![Quaternion::ZERO; n],
        }
    }

    pub fn from_std(std: Vec<Quaternion>) -> Self {
        let n = std.len();
        Self { std, inf: vec![Quaternion::ZERO; n] }
    }

    /// A purely infinitesimal vector `x_I·ε`.
    pub fn from_inf(inf: Vec<Quaternion>) -> Self {
        let n = inf.len();
        Self { std: vec![Quaternion::ZERO; n], inf }
    }

    pub fn from_entries(entries: &[DualQuaternion]) -> Self {
        Self {
            std: entries.iter().map(|e| e.std).collect(),
            inf: entries.iter().map(|e| e.inf).collect(),
        }
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.std[i] = Quaternion::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.std.len()
    }

    pub fn std(&self) -> &[Quaternion] {
        &self.std
    }

    pub fn inf(&self) -> &[Quaternion] {
        &self.inf
    }

    pub fn get(&self, i: usize) -> DualQuaternion {
        DualQuaternion::new(self.std[i], self.inf[i])
    }

    pub fn set(&mut self, i: usize, v: DualQuaternion) {
        self.std[i] = v.std;
        self.inf[i] = v.inf;
    }

    pub fn entries(&self) -> Vec<DualQuaternion> {
        (0..self.dim()).map(|i| self.get(i)).collect()
    }

    pub fn is_appreciable(&self) -> bool {
        backend::vecops::vnorm(&self.std) > crate::dual::APPRECIABLE_TOL
    }

    pub fn is_zero(&self) -> bool {
        self.std.iter().chain(&self.inf).all(|q| q.is_zero())
    }

    /// `⟨u, v⟩ = Σ conj(v_i)·u_i`.
    pub fn inner(&self, v: &DQVector) -> Result<DualQuaternion> {
        if self.dim() != v.dim() {
            return Err(dim_mismatch(self.dim(), v.dim()));
        }
        Ok((0..self.dim()).map(|i| v.get(i).conj() * self.get(i)).sum())
    }

    /// Dual-number norm: `‖x_st‖ + Re⟨x_I, x_st⟩/‖x_st‖·ε` when appreciable,
    /// `‖x_I‖·ε` otherwise.
    pub fn norm(&self) -> DualNumber {
        let n = backend::vecops::vnorm(&self.std);
        if n != 0.0 {
            let cross = backend::vecops::inner(&self.inf, &self.std).w;
            DualNumber::new(n, cross / n)
        } else {
            DualNumber::new(0.0, backend::vecops::vnorm(&self.inf))
        }
    }

    /// `x·α` (scalars act from the right).
    pub fn mul_right(&self, a: DualQuaternion) -> Self {
        Self::from_entries(&self.entries().into_iter().map(|e| e * a).collect::<Vec<_>>())
    }

    pub fn try_add(&self, o: &DQVector) -> Result<Self> {
        if self.dim() != o.dim() {
            return Err(dim_mismatch(self.dim(), o.dim()));
        }
        Ok(Self {
            std: self.std.iter().zip(&o.std).map(|(a, b)| *a + *b).collect(),
            inf: self.inf.iter().zip(&o.inf).map(|(a, b)| *a + *b).collect(),
        })
    }

    pub fn try_sub(&self, o: &DQVector) -> Result<Self> {
        self.try_add(&o.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            std: self.std.iter().map(|q| q.scale(s)).collect(),
            inf: self.inf.iter().map(|q| q.scale(s)).collect(),
        }
    }

    /// Largest absolute component in each part.
    pub fn max_abs_parts(&self) -> (f64, f64) {
        let m = |v: &[Quaternion]| v.iter().map(|q| q.norm()).fold(0.0, f64::max);
        (m(&self.std), m(&self.inf))
    }

    /// This vector as an `n × 1` matrix.
    pub fn to_matrix(&self) -> DQMatrix {
        DQMatrix {
            std: QMatrix::column_vector(&self.std),
            inf: QMatrix::column_vector(&self.inf),
        }
    }
}

impl fmt::Display for DQVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Which of the equivalent nonsingularity conditions produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonsingularCriterion {
    /// `A_st` invertible (elimination succeeds), giving `A⁻¹` in closed form.
    StandardPartInvertible,
    /// `Ax = 0` only for `x = 0`, i.e. `rank(A_st) = m`.
    TrivialNullSpace,
    /// The quaternion adjoint `χ_A` is nonsingular.
    AdjointNonsingular,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct NonsingularityReport {
    pub nonsingular: bool,
    pub criterion: NonsingularCriterion,
    /// Rank of `A_st` (or of `χ_A` for the adjoint criterion).
    pub rank: usize,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Structure {
    pub hermitian: bool,
    pub unitary: bool,
    pub appreciable: bool,
    pub normal: bool,
}

/// Frobenius norm together with a flag raised when `A_st ≠ O` but its
/// squared norm underflowed, so the infinitesimal branch was used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormReport {
    pub value: DualNumber,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DQMatrix {
    std: QMatrix,
    inf: QMatrix,
}

impl DQMatrix {
    pub fn new(std: QMatrix, inf: QMatrix) -> Result<Self> {
        if std.shape() != inf.shape() {
            return Err(dim_mismatch(
                format!("{}x{}", std.rows(), std.cols()),
                format!("{}x{}", inf.rows(), inf.cols()),
            ));
        }
        Ok(Self { std, inf })
    }

    pub fn from_std(std: QMatrix) -> Self {
        let inf = QMatrix::zeros(std.rows(), std.cols());
        Self { std, inf }
    }

    /// A purely infinitesimal matrix `B·ε`.
    pub fn from_inf(inf: QMatrix) -> Self {
        let std = QMatrix::zeros(inf.rows(), inf.cols());
        Self { std, inf }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_std(QMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_std(QMatrix::identity(n))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> DualQuaternion) -> Self {
        let mut std = QMatrix::zeros(rows, cols);
        let mut inf = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                std[(i, j)] = v.std;
                inf[(i, j)] = v.inf;
            }
        }
        Self { std, inf }
    }

    /// Real diagonal `rows × cols` matrix with dual-number entries.
    pub fn diag_dual(rows: usize, cols: usize, d: &[DualNumber]) -> Self {
        let s: Vec<f64> = d.iter().map(|x| x.std).collect();
        let i: Vec<f64> = d.iter().map(|x| x.inf).collect();
        Self {
            std: QMatrix::diag_real(rows, cols, &s),
            inf: QMatrix::diag_real(rows, cols, &i),
        }
    }

    pub fn from_columns(cols: &[DQVector]) -> Result<Self> {
        let m = cols.first().map_or(0, DQVector::dim);
        if let Some(bad) = cols.iter().find(|c| c.dim() != m) {
            return Err(dim_mismatch(m, bad.dim()));
        }
        let mut out = Self::zeros(m, cols.len());
        for (j, c) in cols.iter().enumerate() {
            out.set_column(j, c);
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.std.rows()
    }

    pub fn cols(&self) -> usize {
        self.std.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.std.shape()
    }

    pub fn is_square(&self) -> bool {
        self.std.is_square()
    }

    pub fn std(&self) -> &QMatrix {
        &self.std
    }

    pub fn inf(&self) -> &QMatrix {
        &self.inf
    }

    pub fn into_parts(self) -> (QMatrix, QMatrix) {
        (self.std, self.inf)
    }

    pub fn get(&self, i: usize, j: usize) -> DualQuaternion {
        DualQuaternion::new(self.std[(i, j)], self.inf[(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, v: DualQuaternion) {
        self.std[(i, j)] = v.std;
        self.inf[(i, j)] = v.inf;
    }

    pub fn column(&self, j: usize) -> DQVector {
        DQVector {
            std: self.std.column(j),
            inf: self.inf.column(j),
        }
    }

    pub fn columns(&self) -> Vec<DQVector> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &DQVector) {
        self.std.set_column(j, &v.std);
        self.inf.set_column(j, &v.inf);
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self {
            std: self.std.select_columns(idx),
            inf: self.inf.select_columns(idx),
        }
    }

    pub fn columns_range(&self, start: usize, end: usize) -> Self {
        Self {
            std: self.std.columns_range(start, end),
            inf: self.inf.columns_range(start, end),
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self {
            std: self.std.block(r0, c0, rows, cols),
            inf: self.inf.block(r0, c0, rows, cols),
        }
    }

    pub fn hstack(&self, other: &DQMatrix) -> Result<Self> {
        Ok(Self {
            std: self.std.hstack(&other.std)?,
            inf: self.inf.hstack(&other.inf)?,
        })
    }

    pub fn adjoint(&self) -> Self {
        Self {
            std: self.std.adjoint(),
            inf: self.inf.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            std: self.std.transpose(),
            inf: self.inf.transpose(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            std: self.std.conj(),
            inf: self.inf.conj(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            std: self.std.scale(s),
            inf: self.inf.scale(s),
        }
    }

    /// Multiplies column `j` by the real dual number `d[j]`.
    pub fn scale_columns(&self, d: &[DualNumber]) -> Self {
        let mut out = self.clone();
        for (j, dj) in d.iter().enumerate() {
            for i in 0..self.rows() {
                out.set(i, j, self.get(i, j).scale_dual(*dj));
            }
        }
        out
    }

    pub fn try_add(&self, o: &DQMatrix) -> Result<Self> {
        Ok(Self {
            std: self.std.try_add(&o.std)?,
            inf: self.inf.try_add(&o.inf)?,
        })
    }

    pub fn try_sub(&self, o: &DQMatrix) -> Result<Self> {
        Ok(Self {
            std: self.std.try_sub(&o.std)?,
            inf: self.inf.try_sub(&o.inf)?,
        })
    }

    /// `(AB)_st = A_st B_st`, `(AB)_I = A_st B_I + A_I B_st`.
    pub fn try_mul(&self, o: &DQMatrix) -> Result<Self> {
        let std = self.std.try_mul(&o.std)?;
        let inf = self.std.try_mul(&o.inf)?.try_add(&self.inf.try_mul(&o.std)?)?;
        Ok(Self { std, inf })
    }

    pub fn mul_vec(&self, x: &DQVector) -> Result<DQVector> {
        let std = self.std.mul_vec(&x.std)?;
        let a = self.std.mul_vec(&x.inf)?;
        let b = self.inf.mul_vec(&x.std)?;
        let inf = a.iter().zip(&b).map(|(p, q)| *p + *q).collect();
        Ok(DQVector { std, inf })
    }

    pub fn is_appreciable(&self) -> bool {
        self.std.max_abs() > crate::dual::APPRECIABLE_TOL
    }

    pub fn is_zero(&self) -> bool {
        self.std.is_zero() && self.inf.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.std.is_finite() && self.inf.is_finite()
    }

    /// Largest entry modulus in each part.
    pub fn max_abs_parts(&self) -> (f64, f64) {
        (self.std.max_abs(), self.inf.max_abs())
    }

    /// Frobenius norms of the two parts, `(‖A_st‖, ‖A_I‖)`.
    pub fn part_norms(&self) -> (f64, f64) {
        (self.std.norm(), self.inf.norm())
    }

    /// Dual-number Frobenius norm `√(Σ |a_ij|²)`.
    pub fn norm(&self) -> DualNumber {
        self.norm_report().value
    }

    pub fn norm_report(&self) -> NormReport {
        let mut sum = DualNumber::ZERO;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let m = self.get(i, j).magnitude();
                sum += m * m;
            }
        }
        if sum.std > 0.0 {
            let value = sum.sqrt().expect("positive standard part");
            return NormReport { value, degenerate: false };
        }
        NormReport {
            value: DualNumber::new(0.0, self.inf.norm()),
            degenerate: !self.std.is_zero(),
        }
    }

    /// The quaternion adjoint `χ_A = [[A_st, O], [A_I, A_st]]`.
    pub fn chi(&self) -> QMatrix {
        let (m, n) = self.shape();
        let mut c = QMatrix::zeros(2 * m, 2 * n);
        c.set_block(0, 0, &self.std);
        c.set_block(m, 0, &self.inf);
        c.set_block(m, n, &self.std);
        c
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(dim_mismatch("square matrix", format!("{}x{}", self.rows(), self.cols())));
        }
        Ok(())
    }

    /// `A⁻¹ = A_st⁻¹ - A_st⁻¹ A_I A_st⁻¹ ε`.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let m = self.rows();
        let rank = backend::rank_default(&self.std);
        if rank < m {
            return Err(Error::Singular { rank, dim: m });
        }
        let s = backend::inverse(&self.std)?;
        let inf = (&(&s * &self.inf) * &s).scale(-1.0);
        Ok(Self { std: s, inf })
    }

    /// Nonsingularity decided by `rank(A_st) = m`.
    pub fn nonsingularity(&self) -> NonsingularityReport {
        self.nonsingularity_by(NonsingularCriterion::TrivialNullSpace)
    }

    pub fn is_nonsingular(&self) -> bool {
        self.nonsingularity().nonsingular
    }

    /// Nonsingularity decided by one chosen criterion. All three agree; the
    /// choice only changes which computation runs.
    pub fn nonsingularity_by(&self, criterion: NonsingularCriterion) -> NonsingularityReport {
        let m = self.rows();
        if !self.is_square() {
            return NonsingularityReport { nonsingular: false, criterion, rank: 0, dim: m };
        }
        match criterion {
            NonsingularCriterion::StandardPartInvertible => {
                let (ok, rank) = match backend::inverse(&self.std) {
                    Ok(_) => (true, m),
                    Err(Error::Singular { rank, .. }) => (false, rank),
                    Err(_) => (false, 0),
                };
                NonsingularityReport { nonsingular: ok, criterion, rank, dim: m }
            }
            NonsingularCriterion::TrivialNullSpace => {
                let rank = backend::rank_default(&self.std);
                NonsingularityReport { nonsingular: rank == m, criterion, rank, dim: m }
            }
            NonsingularCriterion::AdjointNonsingular => {
                let rank = backend::rank_default(&self.chi());
                NonsingularityReport { nonsingular: rank == 2 * m, criterion, rank, dim: 2 * m }
            }
        }
    }

    /// Solves `Ax = b`: `x_st = A_st⁻¹ b_st`, `x_I = A_st⁻¹ (b_I - A_I x_st)`.
    pub fn solve(&self, b: &DQVector) -> Result<DQVector> {
        self.require_square()?;
        let m = self.rows();
        if b.dim() != m {
            return Err(dim_mismatch(m, b.dim()));
        }
        let rank = backend::rank_default(&self.std);
        if rank < m {
            return Err(Error::Singular { rank, dim: m });
        }
        let xs = backend::solve(&self.std, &QMatrix::column_vector(&b.std))?.column(0);
        let ax = self.inf.mul_vec(&xs)?;
        let rhs: Vec<Quaternion> = b.inf.iter().zip(&ax).map(|(p, q)| *p - *q).collect();
        let xi = backend::solve(&self.std, &QMatrix::column_vector(&rhs))?.column(0);
        Ok(DQVector { std: xs, inf: xi })
    }

    /// Residual of `A* = A` in each part.
    pub fn hermitian_residuals(&self) -> (f64, f64) {
        (self.std.hermitian_residual(), self.inf.hermitian_residual())
    }

    /// Both parts Hermitian to a tolerance relative to the entry scale.
    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.std.is_hermitian() && self.inf.is_hermitian()
    }

    /// `A*A - I` split into parts, as max-abs residuals.
    pub fn unitary_residuals(&self) -> (f64, f64) {
        let g = &self.adjoint() * self;
        let n = self.cols();
        ((&g.std - &QMatrix::identity(n)).max_abs(), g.inf.max_abs())
    }

    pub fn has_orthonormal_columns(&self) -> bool {
        let (a, b) = self.unitary_residuals();
        a <= UNITARY_TOL && b <= UNITARY_TOL
    }

    pub fn structure(&self) -> Structure {
        let square = self.is_square();
        let (hs, hi) = self.hermitian_residuals();
        let hermitian = square && hs <= STRUCTURE_TOL && hi <= STRUCTURE_TOL;
        let unitary = square && {
            let (us, ui) = self.unitary_residuals();
            us <= STRUCTURE_TOL && ui <= STRUCTURE_TOL
        };
        let normal = square && {
            let a = self.adjoint();
            let d = &(self * &a) - &(&a * self);
            let (ds, di) = d.max_abs_parts();
            ds <= STRUCTURE_TOL && di <= STRUCTURE_TOL
        };
        Structure {
            hermitian,
            unitary,
            appreciable: self.is_appreciable(),
            normal,
        }
    }

    /// `(A + A*)/2` in both parts.
    pub fn hermitian_part(&self) -> Self {
        Self {
            std: self.std.hermitian_part(),
            inf: self.inf.hermitian_part(),
        }
    }
}

impl fmt::Display for DQMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            let row: Vec<String> = (0..self.cols()).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &DQMatrix {
    type Output = DQMatrix;
    fn add(self, o: &DQMatrix) -> DQMatrix {
        self.try_add(o).expect("shape mismatch in DQMatrix addition")
    }
}

impl Sub for &DQMatrix {
    type Output = DQMatrix;
    fn sub(self, o: &DQMatrix) -> DQMatrix {
        self.try_sub(o).expect("shape mismatch in DQMatrix subtraction")
    }
}

impl Mul for &DQMatrix {
    type Output = DQMatrix;
    fn mul(self, o: &DQMatrix) -> DQMatrix {
        self.try_mul(o).expect("shape mismatch in DQMatrix product")
    }
}

impl Neg for &DQMatrix {
    type Output = DQMatrix;
    fn neg(self) -> DQMatrix {
        self.scale(-1.0)
    }
}
