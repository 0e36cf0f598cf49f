mod common;

use std::cmp::Ordering;

use common::*;
use dq_linalg::{DualNumber, DualQuaternion, Quaternion};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn product_of_nonnegatives_is_nonnegative(p in dual_number(), q in dual_number()) {
        let (p, q) = (p.abs(), q.abs());
        prop_assert!((p * q).is_nonnegative(), "{p} * {q}");
    }

    #[test]
    fn abs_fixes_nonnegatives_and_exceeds_negatives(p in dual_number()) {
        if p.is_nonnegative() {
            prop_assert_eq!(p.abs(), p);
        } else {
            prop_assert_eq!(p.abs().compare(p), Ordering::Greater);
        }
    }

    #[test]
    fn abs_is_root_of_square(a in dyadic(), c in dyadic()) {
        prop_assume!(a != 0.0);
        let p = DualNumber::new(a, c);
        let root = (p * p).sqrt().unwrap();
        prop_assert_eq!(root.compare(p.abs()), Ordering::Equal, "{} vs {}", root, p.abs());
    }

    #[test]
    fn root_of_product(p in exact_square(), q in exact_square()) {
        let lhs = (p * q).sqrt().unwrap();
        let rhs = p.sqrt().unwrap() * q.sqrt().unwrap();
        prop_assert_eq!(lhs.compare(rhs), Ordering::Equal, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn root_is_monotone(p in exact_square(), q in exact_square()) {
        let (p, q) = if p.compare(q) == Ordering::Less { (q, p) } else { (p, q) };
        let d = p.sqrt().unwrap() - q.sqrt().unwrap();
        prop_assert!(d.is_nonnegative(), "sqrt({p}) - sqrt({q}) = {d}");
    }

    #[test]
    fn generic_roots_agree_to_rounding(s in 0.01..50.0f64, i in -50.0..50.0f64, t in 0.01..50.0f64, j in -50.0..50.0f64) {
        let (p, q) = (DualNumber::new(s, i), DualNumber::new(t, j));
        let lhs = (p * q).sqrt().unwrap();
        let rhs = p.sqrt().unwrap() * q.sqrt().unwrap();
        prop_assert!(dual_close(lhs, rhs, 1e-12 * (1.0 + lhs.std.abs() + lhs.inf.abs())));
    }

    #[test]
    fn order_is_total_and_transitive(a in dual_number(), b in dual_number(), c in dual_number()) {
        prop_assert_eq!(a.compare(b), b.compare(a).reverse());
        prop_assert_eq!(a.compare(a), Ordering::Equal);
        if a.compare(b) != Ordering::Greater && b.compare(c) != Ordering::Greater {
            prop_assert_ne!(a.compare(c), Ordering::Greater);
        }
    }

    #[test]
    fn dual_inverse_round_trip(s in prop_oneof![-1e3..-1e-3f64, 1e-3..1e3f64], i in -1e3..1e3f64) {
        let a = DualNumber::new(s, i);
        let r = a * a.inverse().unwrap() - DualNumber::ONE;
        let scale = 1.0 + (i / s).abs();
        prop_assert!(r.std.abs() <= 1e-12 && r.inf.abs() <= 1e-12 * scale, "residual {r}");
    }

    #[test]
    fn dq_inverse_is_two_sided(q in dual_quaternion()) {
        prop_assume!(q.std.norm() > 0.05);
        let inv = q.inverse().unwrap();
        let scale = 1.0 + q.inf.norm() / q.std.norm();
        for r in [q * inv - DualQuaternion::ONE, inv * q - DualQuaternion::ONE] {
            prop_assert!(r.std.norm() <= 1e-12 && r.inf.norm() <= 1e-12 * scale, "{r}");
        }
    }

    #[test]
    fn real_part_bounded_by_magnitude(q in dual_quaternion(), case in 0usize..3) {
        let q = match case {
            0 => DualQuaternion::from_inf(q.inf),
            1 => q,
            _ => DualQuaternion::new(q.std.im(), q.inf),
        };
        prop_assume!(case == 0 || q.std.norm() > 1e-9);
        let m = q.magnitude();
        let re = q.re().abs();
        prop_assert!(m.ge_with_slack(re, 1e-10), "|Re q| = {re} > |q| = {m}");
    }

    #[test]
    fn magnitude_reduces_on_subalgebras(a in -3.0..3.0f64, b in -3.0..3.0f64, q in quaternion()) {
        let d = DualNumber::new(a, b);
        prop_assume!(a.abs() > 1e-9 || a == 0.0);
        let m = DualQuaternion::from_dual(d).magnitude();
        prop_assert!(dual_close(m, d.abs(), 1e-14), "{m} vs {}", d.abs());
        let m = DualQuaternion::from_std(q).magnitude();
        prop_assert!(dual_close(m, DualNumber::real(q.norm()), 1e-14));
    }

    #[test]
    fn quaternion_product_is_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert!(((a * b) * c - a * (b * c)).norm() < 1e-12);
        prop_assert!(((a * b).conj() - b.conj() * a.conj()).norm() < 1e-12);
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-12);
    }
}

#[test]
fn hamilton_table() {
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    let one = Quaternion::ONE;
    assert_eq!(i * j, k);
    assert_eq!(j * k, i);
    assert_eq!(k * i, j);
    assert_eq!(j * i, -k);
    assert_eq!(k * j, -i);
    assert_eq!(i * k, -j);
    for u in [i, j, k] {
        assert_eq!(u * u, -one);
    }
    assert_eq!(i * j * k, -one);
}

#[test]
fn real_part_cases_hit_boundaries() {
    // q_st real: equality holds
    let q = DualQuaternion::new(Quaternion::new(-2.0, 0.0, 0.0, 0.0), Quaternion::new(3.0, 1.0, 0.0, 0.0));
    assert_eq!(q.magnitude().compare(q.re().abs()), Ordering::Equal);
    // q_st pure imaginary: strict
    let q = DualQuaternion::new(Quaternion::J, Quaternion::new(5.0, 0.0, 0.0, 0.0));
    assert_eq!(q.magnitude().compare(q.re().abs()), Ordering::Greater);
    // infinitesimal
    let q = DualQuaternion::from_inf(Quaternion::new(-3.0, 4.0, 0.0, 0.0));
    assert_eq!(q.magnitude(), DualNumber::new(0.0, 5.0));
    assert_eq!(q.re().abs(), DualNumber::new(0.0, 3.0));
}
