//! Courant–Fischer for dual Hermitian matrices: eigenvalues as attained
//! extrema of the Rayleigh quotient over null spaces, and sampled bounds.

use dq_linalg::sample::Sampler;
use dq_linalg::spectral::{hermitian_eig, minimax_attainment, sampled_minimax};

fn main() {
    let a = Sampler::new(11).dq_hermitian(4);
    let e = hermitian_eig(&a).unwrap();

    for at in minimax_attainment(&a).unwrap() {
        let (es, ei) = at.error();
        println!(
            "{:?} with k = {}: attained {} for λ{} = {} (error {es:.1e}, {ei:.1e})",
            at.sense, at.k, at.attained, at.index, at.expected
        );
    }

    // Any other choice of B gives a maximum no smaller than λk.
    for k in 1..=4 {
        let vals = sampled_minimax(&a, k, 200, 5).unwrap();
        let least = vals.into_iter().reduce(|x, y| x.min(y)).unwrap();
        println!("k = {k}: smallest sampled max = {least} ≥ λ{k} = {}", e.eigenvalues[k - 1]);
    }
}
