//! Dual quaternion matrices: products, the complex adjoint χ, inverse and solve.

use dq_linalg::dqmatrix::NonsingularCriterion;
use dq_linalg::sample::Sampler;
use dq_linalg::{DQMatrix, DQVector, QMatrix};

fn main() {
    let mut rng = Sampler::new(7);
    let a = rng.dq_matrix(3, 3);
    let b = rng.dq_matrix(3, 3);

    // χ is a ring homomorphism into 2n×2n complex-adjoint quaternion matrices.
    let gap = (&(&a * &b).chi() - &(&a.chi() * &b.chi())).norm();
    println!("‖χ(AB) - χ(A)χ(B)‖ = {gap:.2e}");

    for c in [
        NonsingularCriterion::StandardPartInvertible,
        NonsingularCriterion::TrivialNullSpace,
        NonsingularCriterion::AdjointNonsingular,
    ] {
        let r = a.nonsingularity_by(c);
        println!("{c:?}: nonsingular = {} (rank {} of {})", r.nonsingular, r.rank, r.dim);
    }

    let inv = a.inverse().expect("random matrices are nonsingular");
    let (s, i) = (&a * &inv).try_sub(&DQMatrix::identity(3)).unwrap().part_norms();
    println!("‖A·A⁻¹ - I‖ = ({s:.2e}, {i:.2e}) for (standard, infinitesimal)");

    let rhs = rng.dq_vector(3);
    let x = a.solve(&rhs).unwrap();
    let (rs, ri) = a.mul_vec(&x).unwrap().try_sub(&rhs).unwrap().max_abs_parts();
    println!("solve: max |Ax - b| = ({rs:.2e}, {ri:.2e})");

    // A singular standard part makes the whole matrix singular.
    let s = DQMatrix::new(QMatrix::diag_real(2, 2, &[1.0, 0.0]), QMatrix::identity(2)).unwrap();
    println!("diag(1, 0) + Iε nonsingular? {}", s.is_nonsingular());
    println!("‖(ε, ε)‖ = {}", DQVector::from_inf(vec![dq_linalg::Quaternion::ONE; 2]).norm());
}
