//! Generalized inverses of dual quaternion matrices.
//!
//! For appreciable `A` the candidate `X = A_st† - A_st† A_I A_st† ε` always
//! satisfies `XAX = X`. Whether it also satisfies `AXA = A`, `(AX)* = AX`
//! or `(XA)* = XA` is decided in closed form by the projectors
//! `P = I - A_st A_st†` and `Q = I - A_st† A_st`:
//!
//! * (1) holds iff `P A_I Q = O`;
//! * (3) holds iff `P A_I A_st†` is Hermitian;
//! * (4) holds iff `A_st† A_I Q` is Hermitian.

use serde::Serialize;

use crate::backend;
use crate::dqmatrix::DQMatrix;
use crate::dual::DualNumber;
use crate::error::{dim_mismatch, Error, Result};
use crate::qmatrix::QMatrix;

/// Relative tolerance of [`verify`].
pub const VERIFY_TOL: f64 = 1e-8;
/// Relative tolerance of [`closed_form_conditions`].
pub const CLOSED_FORM_TOL: f64 = 1e-9;

/// Outcome of checking the four Moore–Penrose conditions for a pair `(A, G)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Conditions {
    /// `holds[i]` is condition `i + 1`.
    pub holds: [bool; 4],
    /// Frobenius norms `(standard, infinitesimal)` of the four residuals
    /// `AGA - A`, `GAG - G`, `(AG)* - AG`, `(GA)* - GA`.
    pub residuals: [(f64, f64); 4],
    /// Tolerance the residual norms were compared against.
    pub tolerance: f64,
}

impl Conditions {
    /// The satisfied conditions as a sorted list drawn from `{1, 2, 3, 4}`.
    pub fn set(&self) -> Vec<u8> {
        (1..=4).filter(|&i| self.holds[i as usize - 1]).collect()
    }

    pub fn holds(&self, i: usize) -> bool {
        self.holds[i - 1]
    }

    pub fn all(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

/// Closed-form verdicts on conditions (1), (3), (4) for the candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub c1: bool,
    pub c3: bool,
    pub c4: bool,
}

/// Why the Moore–Penrose inverse does not exist.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum MpAbsence {
    /// `A_st = O`; then `AXA = O ≠ A` for every `X`.
    InfinitesimalMatrix,
    /// Some nonzero singular value is infinitesimal (`t > r`).
    InfinitesimalSingularValue { values: Vec<DualNumber> },
}

impl MpAbsence {
    pub fn describe(&self) -> &'static str {
        match self {
            Self::InfinitesimalMatrix => "infinitesimal matrix",
            Self::InfinitesimalSingularValue { .. } => "infinitesimal singular value",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GiReport {
    pub candidate: DQMatrix,
    /// Conditions verified directly for the candidate.
    pub candidate_conditions: Conditions,
    pub closed_form: ClosedForm,
    pub mp: std::result::Result<DQMatrix, MpAbsence>,
}

fn frob_parts(m: &DQMatrix) -> (f64, f64) {
    m.part_norms()
}

fn require_appreciable(a: &DQMatrix) -> Result<()> {
    if a.std().is_zero() {
        return Err(Error::InfinitesimalMatrix);
    }
    Ok(())
}

/// `X = A_st† - A_st† A_I A_st† ε`.
pub fn candidate(a: &DQMatrix) -> Result<DQMatrix> {
    require_appreciable(a)?;
    let p = backend::pinv(a.std());
    let inf = (&(&p * a.inf()) * &p).scale(-1.0);
    DQMatrix::new(p, inf)
}

/// Checks the four conditions for `G` against `A`. A condition holds when
/// both parts of its residual have Frobenius norm at most
/// `1e-8·(1 + a)(1 + g)(1 + max(a, g))`, with `a = ‖A_st‖ + ‖A_I‖` and `g`
/// likewise for `G`.
pub fn verify(a: &DQMatrix, g: &DQMatrix) -> Result<Conditions> {
    let (m, n) = a.shape();
    if g.shape() != (n, m) {
        return Err(dim_mismatch(format!("{n}x{m}"), format!("{}x{}", g.rows(), g.cols())));
    }
    let (as_, ai) = frob_parts(a);
    let (gs, gi) = frob_parts(g);
    let (na, ng) = (as_ + ai, gs + gi);
    let tolerance = VERIFY_TOL * (1.0 + na) * (1.0 + ng) * (1.0 + na.max(ng));

    let ag = a * g;
    let ga = g * a;
    let r1 = frob_parts(&(&(&ag * a) - a));
    let r2 = frob_parts(&(&(&ga * g) - g));
    let r3 = frob_parts(&(&ag.adjoint() - &ag));
    let r4 = frob_parts(&(&ga.adjoint() - &ga));
    let residuals = [r1, r2, r3, r4];
    let holds = residuals.map(|(s, i)| s <= tolerance && i <= tolerance);
    Ok(Conditions { holds, residuals, tolerance })
}

fn is_hermitian_within(m: &QMatrix, tol: f64) -> bool {
    (m - &m.adjoint()).norm() <= tol * (1.0 + m.norm())
}

pub fn closed_form_conditions(a: &DQMatrix) -> Result<ClosedForm> {
    require_appreciable(a)?;
    let (m, n) = a.shape();
    let p = backend::pinv(a.std());
    let left = &QMatrix::identity(m) - &(a.std() * &p);
    let right = &QMatrix::identity(n) - &(&p * a.std());
    let c1 = (&(&left * a.inf()) * &right).norm() <= CLOSED_FORM_TOL * (1.0 + a.inf().norm());
    let c3 = is_hermitian_within(&(&(&left * a.inf()) * &p), CLOSED_FORM_TOL);
    let c4 = is_hermitian_within(&(&(&p * a.inf()) * &right), CLOSED_FORM_TOL);
    Ok(ClosedForm { c1, c3, c4 })
}

/// Moore–Penrose inverse `V [[Σ_t⁻¹, O], [O, O]] U*`, present exactly when
/// `A_st ≠ O` and every nonzero singular value is appreciable.
pub fn moore_penrose(a: &DQMatrix) -> std::result::Result<DQMatrix, MpAbsence> {
    let (m, n) = a.shape();
    moore_penrose_with_tol(a, backend::default_rank_rel_tol(m, n))
}

pub fn moore_penrose_with_tol(a: &DQMatrix, rel_tol: f64) -> std::result::Result<DQMatrix, MpAbsence> {
    if a.std().is_zero() {
        return Err(MpAbsence::InfinitesimalMatrix);
    }
    let s = crate::spectral::svd_with_tol(a, rel_tol);
    if s.t > s.r {
        return Err(MpAbsence::InfinitesimalSingularValue {
            values: s.infinitesimal_singulars().to_vec(),
        });
    }
    let inv: Vec<DualNumber> = s.singulars.iter().map(|x| x.inverse().expect("appreciable")).collect();
    let (m, n) = a.shape();
    let sigma_inv = DQMatrix::diag_dual(n, m, &inv);
    Ok(&(&s.v * &sigma_inv) * &s.u.adjoint())
}

/// Candidate, its verified conditions, the closed-form verdicts and the
/// Moore–Penrose inverse (or why it is absent).
pub fn analyze(a: &DQMatrix) -> Result<GiReport> {
    analyze_with_tol(a, backend::default_rank_rel_tol(a.rows(), a.cols()))
}

pub fn analyze_with_tol(a: &DQMatrix, rel_tol: f64) -> Result<GiReport> {
    let candidate = candidate(a)?;
    let candidate_conditions = verify(a, &candidate)?;
    let closed_form = closed_form_conditions(a)?;
    let mp = moore_penrose_with_tol(a, rel_tol);
    Ok(GiReport {
        candidate,
        candidate_conditions,
        closed_form,
        mp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;

    fn split_rank() -> DQMatrix {
        DQMatrix::new(QMatrix::diag_real(2, 2, &[1.0, 0.0]), QMatrix::diag_real(2, 2, &[0.0, 1.0])).unwrap()
    }

    fn nilpotent_shift() -> QMatrix {
        QMatrix::from_rows(&[vec![Quaternion::ZERO, Quaternion::I], vec![Quaternion::J, Quaternion::real(2.0)]])
    }

    #[test]
    fn candidate_examples() {
        let a = DQMatrix::from_std(QMatrix::diag_real(2, 2, &[2.0, 0.0]));
        assert_eq!(candidate(&a).unwrap(), DQMatrix::from_std(QMatrix::diag_real(2, 2, &[0.5, 0.0])));

        let n = nilpotent_shift();
        let a = DQMatrix::new(QMatrix::identity(2), n.clone()).unwrap();
        let x = candidate(&a).unwrap();
        assert!((x.std() - &QMatrix::identity(2)).max_abs() < 1e-15);
        assert!((x.inf() + &n).max_abs() < 1e-15);

        let x = candidate(&split_rank()).unwrap();
        assert_eq!(x, DQMatrix::from_std(QMatrix::diag_real(2, 2, &[1.0, 0.0])));
        assert!(verify(&split_rank(), &x).unwrap().holds(2));

        assert_eq!(candidate(&DQMatrix::from_inf(QMatrix::identity(2))), Err(Error::InfinitesimalMatrix));
    }

    #[test]
    fn verify_examples() {
        let a = DQMatrix::new(QMatrix::identity(2).scale(3.0), nilpotent_shift()).unwrap();
        assert_eq!(verify(&a, &a.inverse().unwrap()).unwrap().set(), vec![1, 2, 3, 4]);

        let b = DQMatrix::from_inf(nilpotent_shift());
        let g = DQMatrix::from_std(QMatrix::identity(2));
        assert!(!verify(&b, &g).unwrap().holds(1));

        let x = candidate(&split_rank()).unwrap();
        assert_eq!(verify(&split_rank(), &x).unwrap().set(), vec![2, 3, 4]);
        assert!(verify(&split_rank(), &DQMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let full_col = DQMatrix::new(
            QMatrix::from_rows(&[vec![Quaternion::ONE], vec![Quaternion::ZERO]]),
            QMatrix::from_rows(&[vec![Quaternion::K], vec![Quaternion::real(2.0)]]),
        )
        .unwrap();
        let cf = closed_form_conditions(&full_col).unwrap();
        assert!(cf.c1 && cf.c4);
        assert!(!closed_form_conditions(&split_rank()).unwrap().c1);
        let herm = DQMatrix::new(QMatrix::diag_real(2, 2, &[2.0, -1.0]), nilpotent_shift()).unwrap();
        assert_eq!(closed_form_conditions(&herm).unwrap(), ClosedForm { c1: true, c3: true, c4: true });
    }

    #[test]
    fn moore_penrose_examples() {
        let a = DQMatrix::new(QMatrix::diag_real(2, 2, &[2.0, 1.0]), QMatrix::diag_real(2, 2, &[1.0, 0.0])).unwrap();
        let p = moore_penrose(&a).unwrap();
        let want = DQMatrix::new(QMatrix::diag_real(2, 2, &[0.5, 1.0]), QMatrix::diag_real(2, 2, &[-0.25, 0.0])).unwrap();
        let (ds, di) = (&p - &want).max_abs_parts();
        assert!(ds < 1e-14 && di < 1e-14);
        assert!(verify(&a, &p).unwrap().all());

        let b = DQMatrix::new(QMatrix::diag_real(2, 2, &[3.0, 0.0]), QMatrix::diag_real(2, 2, &[0.0, 1.0])).unwrap();
        match moore_penrose(&b) {
            Err(MpAbsence::InfinitesimalSingularValue { values }) => assert_eq!(values, vec![DualNumber::new(0.0, 1.0)]),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(moore_penrose(&DQMatrix::from_inf(QMatrix::identity(2))), Err(MpAbsence::InfinitesimalMatrix));
    }
}
