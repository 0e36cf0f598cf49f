//! Generalized inverses: which Penrose conditions the natural candidate
//! satisfies, and the Moore–Penrose inverse when it exists.

use dq_linalg::ginverse::{analyze, moore_penrose, verify};
use dq_linalg::sample::Sampler;
use dq_linalg::{DQMatrix, DualNumber, QMatrix};

fn report(label: &str, a: &DQMatrix) {
    let r = analyze(a).unwrap();
    let cf = r.closed_form;
    println!("{label}");
    println!("  candidate satisfies {:?}", r.candidate_conditions.set());
    println!("  closed form: (1) {}, (3) {}, (4) {}", cf.c1, cf.c3, cf.c4);
    match r.mp {
        Ok(p) if a.rows() <= 2 => println!("  Moore-Penrose inverse:\n{p}"),
        Ok(p) => println!("  Moore-Penrose inverse exists and satisfies {:?}", verify(a, &p).unwrap().set()),
        Err(why) => println!("  no Moore-Penrose inverse: {}", why.describe()),
    }
}

fn main() {
    report("diag(2 + ε, 1)", &DQMatrix::diag_dual(2, 2, &[DualNumber::new(2.0, 1.0), DualNumber::real(1.0)]));
    report(
        "diag(1, 0) + diag(0, 1)ε",
        &DQMatrix::new(QMatrix::diag_real(2, 2, &[1.0, 0.0]), QMatrix::diag_real(2, 2, &[0.0, 1.0])).unwrap(),
    );
    report("random 4×3, full column rank", &Sampler::new(9).dq_matrix(4, 3));

    let z = DQMatrix::from_inf(QMatrix::identity(2));
    println!("Iε: {:?}", moore_penrose(&z).unwrap_err());
}
