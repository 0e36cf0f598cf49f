//! Dual singular value decomposition with appreciable and infinitesimal
//! singular values, the polar form, and the augmented-matrix cross-check.

use dq_linalg::sample::Sampler;
use dq_linalg::spectral::{augmented_singular_values, svd};
use dq_linalg::{DQMatrix, DualNumber};

fn show(label: &str, v: &[DualNumber]) {
    println!("{label}: {}", v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "));
}

fn main() {
    let a = DQMatrix::diag_dual(2, 2, &[DualNumber::real(3.0), DualNumber::new(0.0, 1.0)]);
    let d = svd(&a);
    show("diag(3, ε) singular values", &d.singulars);
    println!("  r = {} appreciable, t = {} nonzero", d.r, d.t);
    show("  infinitesimal ones", d.infinitesimal_singulars());

    let mut rng = Sampler::new(21);
    let b = rng.dq_with_std_rank(5, 4, 2);
    let d = svd(&b);
    let (rs, ri) = d.reconstruct().try_sub(&b).unwrap().part_norms();
    show("5×4 with rank(A_st) = 2", &d.singulars);
    println!("  r = {}, t = {}, ‖UΣV* - A‖ = ({rs:.1e}, {ri:.1e})", d.r, d.t);
    show("  augmented route", &augmented_singular_values(&b).unwrap());

    let c = rng.dq_matrix(3, 3);
    let (p, h) = svd(&c).polar().expect("square");
    let (ps, pi) = p.unitary_residuals();
    let (hs, hi) = h.hermitian_residuals();
    println!("polar A = PH: P unitary to ({ps:.1e}, {pi:.1e}), H Hermitian to ({hs:.1e}, {hi:.1e})");
}
