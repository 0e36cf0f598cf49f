//! Dual quaternions: the Hamilton product, conjugate, magnitude and inverse.

use dq_linalg::{DualQuaternion, Quaternion};

fn main() {
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    println!("ij = {}, jk = {}, ki = {}, ijk = {}", i * j, j * k, k * i, i * j * k);
    println!("ji = {} (non-commutative)", j * i);

    // A unit rotation about z by 90 degrees, translated by t = (1, 2, 0).
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let r = Quaternion::new(h, 0.0, 0.0, h);
    let t = Quaternion::new(0.0, 1.0, 2.0, 0.0);
    let q = DualQuaternion::new(r, (t * r).scale(0.5));
    println!("q = {q}");
    println!("|q| = {} (unit dual quaternion)", q.magnitude());
    println!("q·q* = {}", q * q.conj());

    let p = DualQuaternion::new(Quaternion::new(1.0, 2.0, -1.0, 0.5), Quaternion::new(0.0, 3.0, 1.0, -2.0));
    let inv = p.inverse().expect("appreciable");
    println!("p⁻¹ = {inv}");
    println!("p·p⁻¹ = {}", p * inv);
    println!("Re p = {}, |p| = {}", p.re(), p.magnitude());

    let pure_eps = DualQuaternion::from_inf(Quaternion::ONE);
    println!("ε has an inverse? {}", pure_eps.inverse().is_ok());
}
