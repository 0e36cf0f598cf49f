mod common;

use common::*;
use dq_linalg::dqmatrix::NonsingularCriterion;
use dq_linalg::sample::Sampler;
use dq_linalg::{DQMatrix, DQVector, DualNumber, DualQuaternion, QMatrix, Quaternion};
use proptest::prelude::*;

fn identity_gap(p: &DQMatrix) -> (f64, f64) {
    dqdiff(p, &DQMatrix::identity(p.rows()))
}

/// Right inverse built one column at a time from `A x = e_j`.
fn right_inverse_by_solves(a: &DQMatrix) -> DQMatrix {
    let m = a.rows();
    let cols: Vec<DQVector> = (0..m).map(|j| a.solve(&DQVector::basis(m, j)).unwrap()).collect();
    DQMatrix::from_columns(&cols).unwrap()
}

/// `v - u_st·α` with `α` chosen so that `⟨u_st, v_st⟩ = 0`.
fn orthogonalize_std(u: &DQVector, v: &DQVector) -> DQVector {
    let us = DQVector::from_std(u.std().to_vec());
    let vs = DQVector::from_std(v.std().to_vec());
    let ip = us.inner(&vs).unwrap().std;
    let nn = us.norm().std.powi(2);
    let alpha = ip.conj().scale(1.0 / nn);
    v.try_sub(&us.mul_right(DualQuaternion::from_std(alpha))).unwrap()
}

fn cauchy_schwarz_gap(u: &DQVector, v: &DQVector) -> DualNumber {
    u.norm() * v.norm() - u.inner(v).unwrap().magnitude()
}

fn dq_vec(n: usize) -> impl Strategy<Value = DQVector> {
    (prop::collection::vec(quaternion(), n), prop::collection::vec(quaternion(), n)).prop_map(|(s, i)| DQVector::new(s, i).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn one_sided_inverse_is_two_sided(a in square_dq(5)) {
        prop_assume!(a.is_nonsingular());
        let b = right_inverse_by_solves(&a);
        let (rs, ri) = identity_gap(&(&a * &b));
        let (ls, li) = identity_gap(&(&b * &a));
        let scale = 1.0 + b.part_norms().0.powi(2) * (1.0 + a.part_norms().1);
        prop_assert!(rs.max(ri) <= 1e-9 * scale, "AB - I = ({rs:e}, {ri:e})");
        prop_assert!(ls.max(li) <= 1e-9 * scale, "BA - I = ({ls:e}, {li:e})");
    }

    #[test]
    fn inverse_matches_real_representation(a in square_dq(4)) {
        prop_assume!(a.is_nonsingular());
        let inv = a.inverse().unwrap();
        let oracle = oracle_dq_inverse(&a).unwrap();
        let (ds, di) = dqdiff(&inv, &oracle);
        let scale = 1.0 + inv.part_norms().0.powi(2) * (1.0 + a.part_norms().1);
        prop_assert!(ds.max(di) <= 1e-9 * scale, "({ds:e}, {di:e})");
    }

    #[test]
    fn chi_is_a_homomorphism(n in 1usize..=5, seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let (a, b) = (rng.dq_matrix(n, n), rng.dq_matrix(n, n));
        let scale = 1.0 + a.norm_report().value.std * b.norm_report().value.std;
        prop_assert!(qdiff(&(&a * &b).chi(), &(&a.chi() * &b.chi())) <= 1e-12 * scale);
        prop_assert!(qdiff(&(&a + &b).chi(), &(&a.chi() + &b.chi())) <= 1e-12 * scale);
        if a.is_nonsingular() {
            let lhs = a.inverse().unwrap().chi();
            let rhs = oracle_dq_inverse(&a).unwrap().chi();
            let scale = 1.0 + lhs.norm().powi(2) * (1.0 + a.norm_report().value.std);
            prop_assert!(qdiff(&lhs, &rhs) <= 1e-10 * scale);
            prop_assert!(qdiff(&(&lhs * &a.chi()), &QMatrix::identity(2 * n)) <= 1e-10 * scale);
        }
    }

    #[test]
    fn nonsingularity_criteria_agree(n in 1usize..=5, r in 0usize..=5, seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let a = rng.dq_with_std_rank(n, n, r.min(n));
        let verdicts: Vec<bool> = [
            NonsingularCriterion::StandardPartInvertible,
            NonsingularCriterion::TrivialNullSpace,
            NonsingularCriterion::AdjointNonsingular,
        ]
        .into_iter()
        .map(|c| a.nonsingularity_by(c).nonsingular)
        .collect();
        prop_assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{verdicts:?}");
        prop_assert_eq!(verdicts[0], oracle_strictly_independent(&a));
        prop_assert_eq!(verdicts[0], r >= n);
    }

    #[test]
    fn solve_satisfies_the_system(a in square_dq(5), b in (1usize..=5).prop_flat_map(dq_vec)) {
        prop_assume!(a.is_nonsingular() && a.rows() == b.dim());
        let x = a.solve(&b).unwrap();
        let r = a.mul_vec(&x).unwrap().try_sub(&b).unwrap();
        let (rs, ri) = r.max_abs_parts();
        let inv = a.inverse().unwrap();
        let scale = (1.0 + inv.part_norms().0.powi(2)) * (1.0 + a.part_norms().0 + a.part_norms().1) * (1.0 + b.norm().std.abs() + b.norm().inf.abs());
        prop_assert!(rs.max(ri) <= 1e-10 * scale, "({rs:e}, {ri:e})");
    }

    #[test]
    fn unitary_columns_form_a_basis(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let u = rng.dq_unitary(n);
        prop_assert!(u.has_orthonormal_columns());
        let x = rng.dq_vector(n);
        let mut acc = DQVector::zeros(n);
        for ui in u.columns() {
            let alpha = x.inner(&ui).unwrap();
            acc = acc.try_add(&ui.mul_right(alpha)).unwrap();
        }
        let (rs, ri) = acc.try_sub(&x).unwrap().max_abs_parts();
        prop_assert!(rs.max(ri) <= 1e-10, "({rs:e}, {ri:e})");
    }
}

/// Cauchy–Schwarz over the case families of its proof.
#[test]
fn cauchy_schwarz_case_families() {
    let mut rng = Sampler::new(47);
    let mut worst = (f64::INFINITY, f64::INFINITY);
    for family in 0..5 {
        for _ in 0..1000 {
            let n = 1 + rng.index(5);
            let mut u = rng.dq_vector(n);
            let mut v = rng.dq_vector(n);
            match family {
                0 => {
                    u = DQVector::from_inf(u.inf().to_vec());
                    v = DQVector::from_inf(v.inf().to_vec());
                }
                1 => u = DQVector::from_inf(u.inf().to_vec()),
                2 => v = DQVector::from_inf(v.inf().to_vec()),
                3 => v = orthogonalize_std(&u, &v),
                _ => {}
            }
            let g = cauchy_schwarz_gap(&u, &v);
            worst = (worst.0.min(g.std), worst.1.min(g.inf));
            assert!(g.ge_with_slack(DualNumber::ZERO, 1e-10), "family {family}: gap {g} for u = {u:?}, v = {v:?}");
        }
    }
    assert!(worst.0 > -1e-10);
}

#[test]
fn parallel_vectors_attain_equality() {
    let u = DQVector::new(vec![Quaternion::ONE, Quaternion::I], vec![Quaternion::J, Quaternion::ZERO]).unwrap();
    let v = u.mul_right(DualQuaternion::new(Quaternion::new(2.0, 0.0, 1.0, 0.0), Quaternion::K));
    let g = cauchy_schwarz_gap(&u, &v);
    assert!(g.std.abs() < 1e-14 && g.inf.abs() < 1e-14, "{g}");
}

#[test]
fn norm_of_dual_vector_matches_definition() {
    // ‖x‖² = Σ|x_i|² in dual arithmetic
    let mut rng = Sampler::new(5);
    for _ in 0..200 {
        let n = 1 + rng.index(6);
        let x = rng.dq_vector(n);
        let sq: DualNumber = x.entries().iter().map(|e| e.magnitude() * e.magnitude()).fold(DualNumber::ZERO, |a, b| a + b);
        let n = x.norm();
        assert!(dual_close(n * n, sq, 1e-12 * (1.0 + sq.std + sq.inf.abs())), "{} vs {}", n * n, sq);
    }
}
