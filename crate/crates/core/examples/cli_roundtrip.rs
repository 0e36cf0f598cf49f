//! The `dqla` command in-process: write a matrix file, run `eig` on it and
//! read the JSON result back.

use dq_linalg::cli::format::{digest, MatrixFile};
use dq_linalg::cli::run_command;
use dq_linalg::sample::Sampler;

fn main() {
    let a = Sampler::new(1).dq_hermitian(3);
    let file = MatrixFile::from_matrix("H", &a);
    let text = file.to_json();
    println!("input digest: {}", digest(text.as_bytes()));

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(["dqla", "eig", "-"], &mut text.as_bytes(), &mut out, &mut err);
    println!("exit code {code}");

    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    println!("command: {}", doc["command"]);
    println!("eigenvalues: {}", doc["payload"]["eigenvalues"]);

    // Back through the file format.
    let back = MatrixFile::parse(&text).unwrap().to_matrix().unwrap();
    println!("round trip exact: {}", back == a);

    let code = run_command(["dqla", "inv", "-"], &mut "not json".as_bytes(), &mut out, &mut err);
    println!("bad input gives exit code {code}: {}", String::from_utf8_lossy(&err).lines().last().unwrap_or(""));
}
