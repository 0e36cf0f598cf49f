//! Golden-file cases for the command-line front end.
//!
//! Each case stores stdout, stderr and the exit code in
//! `tests/golden/<name>.txt`. Set `DQLA_BLESS=1` to rewrite the files.

use std::path::PathBuf;

use dq_linalg::cli::run_command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, stdin: None, exit }
}

pub const CASES: &[Case] = &[
    case("eig_diag", &["eig", "tests/data/diag_eig.json"], 0),
    case("eig_hermitian3_seeded", &["eig", "tests/data/hermitian3.json", "--seed", "7", "--samples", "5"], 0),
    case("eig_table", &["--format", "table", "eig", "tests/data/diag_eig.json"], 0),
    case("eig_not_hermitian", &["eig", "tests/data/not_hermitian.json"], 2),
    case("svd_mixed", &["svd", "tests/data/mixed.json"], 0),
    case("svd_infinitesimal_singular", &["svd", "tests/data/diag3eps.json"], 0),
    case("pinv_absent", &["pinv", "tests/data/diag3eps.json"], 0),
    case("pinv_nonsingular", &["pinv", "tests/data/nonsingular.json"], 0),
    case("gi_check_candidate", &["gi-check", "tests/data/split_rank.json"], 0),
    case("gi_check_given", &["gi-check", "tests/data/nonsingular.json", "--g", "tests/data/nonsingular_inv.json"], 0),
    case("gi_check_shape_mismatch", &["gi-check", "tests/data/nonsingular.json", "--g", "tests/data/mixed.json"], 2),
    case("rank_split", &["rank", "tests/data/split_rank.json"], 0),
    case("rank_mixed_tol", &["--tol", "1e-6", "rank", "tests/data/mixed.json"], 0),
    case("weak_rank_split", &["weak-rank", "tests/data/split_rank.json"], 0),
    case("weak_rank_example", &["weak-rank", "tests/data/example34.json"], 0),
    case("inv_nonsingular", &["inv", "tests/data/nonsingular.json"], 0),
    case("inv_singular", &["inv", "tests/data/split_rank.json"], 2),
    case("solve", &["solve", "tests/data/nonsingular.json", "--rhs", "tests/data/rhs.json"], 0),
    case("check_li_weak", &["check-li", "--mode", "weak", "tests/data/example34.json"], 0),
    case("check_li_strict", &["check-li", "tests/data/example34.json"], 0),
    case("check_li_appreciable", &["check-li", "--mode", "appreciable", "tests/data/split_rank.json"], 0),
    case("chi_scalar", &["chi", "tests/data/scalar.json"], 0),
    case("chi_table", &["--format", "table", "chi", "tests/data/scalar.json"], 0),
    case("norm_mixed", &["norm", "tests/data/mixed.json"], 0),
    case("norm_infinitesimal", &["norm", "tests/data/example34.json"], 0),
    case("bad_dims", &["rank", "tests/data/bad_dims.json"], 1),
    case("missing_file", &["rank", "tests/data/does_not_exist.json"], 1),
    case("bad_tol", &["--tol", "0", "rank", "tests/data/mixed.json"], 1),
    case("unknown_command", &["transpose", "tests/data/mixed.json"], 1),
    Case {
        name: "rank_stdin",
        args: &["rank", "-"],
        stdin: Some(r#"{"name": "piped", "rows": 1, "cols": 2, "entries": [[1,0,0,0, 0,0,0,0], [0,0,0,0, 1,0,0,0]]}"#),
        exit: 0,
    },
];

pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn render(&self) -> String {
        format!("--- exit {} ---\n--- stdout ---\n{}--- stderr ---\n{}", self.exit, self.stdout, self.stderr)
    }
}

pub fn run(args: &[&str], stdin: Option<&str>) -> Outcome {
    let mut argv = vec!["dqla"];
    argv.extend_from_slice(args);
    let mut input = stdin.unwrap_or("").as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let exit = run_command(argv, &mut input, &mut out, &mut err);
    Outcome {
        exit,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// Runs a case and compares it with its golden file. Returns a description
/// of the mismatch, if any.
pub fn check(case: &Case) -> Result<Outcome, String> {
    let got = run(case.args, case.stdin);
    if got.exit != case.exit {
        return Err(format!("{}: exit {} (expected {}), stderr: {}", case.name, got.exit, case.exit, got.stderr));
    }
    let path = golden_path(case.name);
    let text = got.render();
    if std::env::var_os("DQLA_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &text).unwrap();
        return Ok(got);
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != text {
        return Err(format!("{}: output differs from {}\n{text}", case.name, path.display()));
    }
    Ok(got)
}
