//! Right linear independence in its strict, appreciable and weak forms, with
//! rank and weak rank.

use dq_linalg::independence::{check_columns, check_independence, rank, weak_rank, Mode};
use dq_linalg::{DQMatrix, DQVector, QMatrix, Quaternion};

fn main() {
    // The infinitesimal unit vectors εe₁ and εe₂.
    let u1 = DQVector::from_inf(vec![Quaternion::ONE, Quaternion::ZERO]);
    let u2 = DQVector::from_inf(vec![Quaternion::ZERO, Quaternion::ONE]);
    for mode in [Mode::Strict, Mode::Appreciable, Mode::Weak] {
        let r = check_independence(&[u1.clone(), u2.clone()], mode).unwrap();
        match r.witness {
            Some(w) => println!("{mode:?}: dependent, witness {w}"),
            None => println!("{mode:?}: independent"),
        }
    }

    // Standard part of rank one, infinitesimal part filling the other direction.
    let a = DQMatrix::new(QMatrix::diag_real(2, 2, &[1.0, 0.0]), QMatrix::diag_real(2, 2, &[0.0, 1.0])).unwrap();
    println!("A = diag(1, ε)");
    println!("strict: {}", check_columns(&a, Mode::Strict).independent);
    println!("weak:   {}", check_columns(&a, Mode::Weak).independent);
    let w = weak_rank(&a).unwrap();
    println!(
        "rank = {}, weak rank = {} (exact: {}), nonzero singular values = {}",
        rank(&a),
        w.value,
        w.exact,
        w.nonzero_singular_values
    );
}
