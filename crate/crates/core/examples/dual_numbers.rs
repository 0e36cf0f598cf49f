//! Dual numbers: exact ε-arithmetic, the total order, `|·|`, `√` and inverse.

use std::cmp::Ordering;

use dq_linalg::DualNumber;

fn main() {
    let a = DualNumber::new(2.0, 3.0);
    let b = DualNumber::new(-1.0, 0.5);
    let eps = DualNumber::EPSILON;

    println!("a = {a}, b = {b}");
    println!("a + b = {}", a + b);
    println!("a · b = {}", a * b);
    println!("ε · ε = {}", eps * eps);

    // Order is lexicographic: standard part first, infinitesimal part breaks ties.
    let ordered = [DualNumber::new(1.0, -100.0), DualNumber::new(1.0, 2.0), DualNumber::new(1.5, -1e9)];
    for w in ordered.windows(2) {
        assert_eq!(w[0].compare(w[1]), Ordering::Less);
        println!("{} < {}", w[0], w[1]);
    }
    println!("ε > 0: {}", eps.is_positive());

    println!("|b| = {}", b.abs());
    println!("|-ε| = {}", (-eps).abs());

    let sq = a * a;
    println!("√(a²) = {}", sq.sqrt().expect("appreciable and positive"));
    println!("√(ε²) fails? {}", (eps * eps).sqrt().is_ok());

    let inv = a.inverse().expect("appreciable");
    println!("a⁻¹ = {inv}, a·a⁻¹ = {}", a * inv);
    println!("ε⁻¹ exists? {}", eps.inverse().is_ok());
}
