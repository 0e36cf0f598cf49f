//! Hermitian eigendecomposition `A = U Σ U*` with dual eigenvalues.

use dq_linalg::sample::Sampler;
use dq_linalg::spectral::{hermitian_eig, rayleigh_quotient};
use dq_linalg::{DQMatrix, QMatrix};

fn main() {
    // A repeated standard eigenvalue split by the infinitesimal part.
    let a = DQMatrix::new(QMatrix::identity(2), QMatrix::diag_real(2, 2, &[-1.0, 3.0])).unwrap();
    let e = hermitian_eig(&a).unwrap();
    println!("I + diag(-1, 3)ε:");
    for (k, l) in e.eigenvalues.iter().enumerate() {
        println!("  λ{} = {l}", k + 1);
    }
    for c in &e.clusters {
        println!("  cluster at {} with multiplicity {}", c.value, c.multiplicity);
    }

    let mut rng = Sampler::new(3);
    let h = rng.dq_hermitian_with_spectrum(&[2.0, 2.0, -1.0, 0.5]);
    let e = hermitian_eig(&h).unwrap();
    let (rs, ri) = e.residuals(&h);
    let (us, ui) = e.u.unitary_residuals();
    println!("random 4×4 with standard spectrum (2, 2, -1, 0.5):");
    println!("  eigenvalues: {}", e.eigenvalues.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", "));
    println!("  ‖AU - UΣ‖ = ({rs:.1e}, {ri:.1e}), ‖U*U - I‖ = ({us:.1e}, {ui:.1e})");
    for k in 0..4 {
        let rq = rayleigh_quotient(&h, &e.eigenvector(k)).unwrap();
        println!("  Rayleigh quotient of u{} = {rq}", k + 1);
    }
}
