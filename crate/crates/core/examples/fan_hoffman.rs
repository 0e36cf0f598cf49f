//! Singular values dominate the eigenvalues of the Hermitian part:
//! `σᵢ(A) ≥ λᵢ((A + A*)/2)` in the dual order.

use dq_linalg::sample::Sampler;
use dq_linalg::spectral::fan_hoffman_gap;

fn main() {
    let mut rng = Sampler::new(5);
    for n in 2..=5 {
        let a = if n % 2 == 0 { rng.dq_matrix(n, n) } else { rng.dq_with_std_rank(n, n, n / 2) };
        let gaps = fan_hoffman_gap(&a).unwrap();
        println!("{n}×{n}: σᵢ - λᵢ = {}", gaps.iter().map(|g| format!("{g:.4}")).collect::<Vec<_>>().join(", "));
    }
}
