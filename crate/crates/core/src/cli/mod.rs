//! Command dispatch behind the `dqla` binary.
//!
//! [`run_command`] parses arguments, reads matrix files, runs one library
//! operation and writes a [`ResultDocument`]. Exit codes: `0` success, `1`
//! I/O, argument or parse failure, `2` a violated precondition.

pub mod format;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::backend;
use crate::dqmatrix::{DQMatrix, DQVector};
use crate::error::Error;
use crate::ginverse::{self, MpAbsence};
use crate::independence::{self, Mode};
use crate::spectral::{self, CLUSTER_REL_TOL};

pub use format::{digest, parse_matrix_str, FormatError, InputInfo, MatrixFile, ResultDocument, Tolerances};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "dqla", version, about = "Dual quaternion linear algebra on JSON matrix files")]
pub struct Cli {
    /// Relative tolerance for ranks and nonzero singular values.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for randomized checks (eig runs sampled minimax bounds with it).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigendecomposition of a Hermitian matrix.
    Eig {
        input: PathBuf,
        /// Random subspaces per k for the sampled minimax bound (needs --seed).
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Singular value decomposition.
    Svd { input: PathBuf },
    /// Moore–Penrose inverse, or the reason it does not exist.
    Pinv { input: PathBuf },
    /// Generalized-inverse conditions for the candidate, or for a given G.
    GiCheck {
        input: PathBuf,
        #[arg(long)]
        g: Option<PathBuf>,
    },
    /// Rank (largest independent column subset).
    Rank { input: PathBuf },
    /// Weak rank by exhaustive column-subset search.
    WeakRank { input: PathBuf },
    /// Inverse of a nonsingular square matrix.
    Inv { input: PathBuf },
    /// Solves A x = b; b is an m x 1 matrix file.
    Solve {
        input: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
    },
    /// Linear independence of the columns.
    CheckLi {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// The quaternion adjoint [[A_st, O], [A_I, A_st]].
    Chi { input: PathBuf },
    /// Dual-number Frobenius norm.
    Norm { input: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eig { .. } => "eig",
            Command::Svd { .. } => "svd",
            Command::Pinv { .. } => "pinv",
            Command::GiCheck { .. } => "gi-check",
            Command::Rank { .. } => "rank",
            Command::WeakRank { .. } => "weak-rank",
            Command::Inv { .. } => "inv",
            Command::Solve { .. } => "solve",
            Command::CheckLi { .. } => "check-li",
            Command::Chi { .. } => "chi",
            Command::Norm { .. } => "norm",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => EXIT_PRECONDITION,
            _ => EXIT_INPUT,
        }
    }
}

/// Names the violated condition for a library error.
fn precondition(e: Error) -> CliError {
    let msg = match &e {
        Error::NotHermitian { residual } => format!("matrix must be Hermitian, A* = A in both parts (residual {residual:.3e})"),
        Error::Singular { rank, dim } => format!("standard part must be nonsingular, rank(A_st) = {rank} < {dim}"),
        Error::InfinitesimalMatrix => "standard part must be nonzero, A is infinitesimal".into(),
        Error::RankDeficientStandardPart { rank, expected } => {
            format!("standard part must have full column rank, rank {rank} < {expected}")
        }
        _ => e.to_string(),
    };
    CliError::Precondition(msg)
}

struct Loaded {
    matrix: DQMatrix,
    info: InputInfo,
}

fn load(path: &Path, stdin: &mut dyn Read) -> Result<Loaded, CliError> {
    let shown = path.display().to_string();
    let mut bytes = Vec::new();
    let io = |source| CliError::Io { path: shown.clone(), source };
    if path.as_os_str() == "-" {
        stdin.read_to_end(&mut bytes).map_err(io)?;
    } else {
        bytes = std::fs::read(path).map_err(io)?;
    }
    let text = String::from_utf8(bytes.clone()).map_err(|e| CliError::Format {
        path: shown.clone(),
        source: FormatError::Parse {
            location: format!("byte {}", e.utf8_error().valid_up_to()),
            message: "input is not UTF-8".into(),
        },
    })?;
    let file = MatrixFile::parse(&text).map_err(|source| CliError::Format { path: shown.clone(), source })?;
    let matrix = file.to_matrix().expect("validated");
    Ok(Loaded {
        info: InputInfo {
            name: file.name,
            rows: file.rows,
            cols: file.cols,
            digest: digest(&bytes),
        },
        matrix,
    })
}

fn mat(name: &str, a: &DQMatrix) -> Value {
    serde_json::to_value(MatrixFile::from_matrix(name, a)).expect("serializable")
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn pair((s, i): (f64, f64)) -> Value {
    json!([s, i])
}

fn vector_matrix(x: &DQVector) -> DQMatrix {
    x.to_matrix()
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `stdout`, diagnostics to `stderr`. Returns the exit code.
pub fn run_command<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(doc) => {
            let text = match cli.format {
                OutputFormat::Json => doc.to_json_line(),
                OutputFormat::Table => doc.to_table(),
            };
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "dqla {}: {e}", cli.command.name());
            e.exit_code()
        }
    }
}

/// Runs the parsed command and builds its result document.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<ResultDocument, CliError> {
    let rank_tol_override = match cli.tol {
        Some(t) if !(t.is_finite() && t > 0.0) => return Err(CliError::Argument(format!("--tol must be positive and finite, got {t}"))),
        other => other,
    };
    let mut diagnostics = Vec::new();
    let mut seed_used = None;
    let input_path = match &cli.command {
        Command::Eig { input, .. }
        | Command::Svd { input }
        | Command::Pinv { input }
        | Command::GiCheck { input, .. }
        | Command::Rank { input }
        | Command::WeakRank { input }
        | Command::Inv { input }
        | Command::Solve { input, .. }
        | Command::CheckLi { input, .. }
        | Command::Chi { input }
        | Command::Norm { input } => input,
    };
    let main = load(input_path, stdin)?;
    let a = &main.matrix;
    let (m, n) = a.shape();
    let tol = rank_tol_override.unwrap_or_else(|| backend::default_rank_rel_tol(m, n));
    let mut inputs = vec![main.info.clone()];

    let payload = match &cli.command {
        Command::Eig { samples, .. } => {
            let e = spectral::hermitian_eig(a).map_err(precondition)?;
            let mut p = json!({
                "eigenvalues": to_value(&e.eigenvalues),
                "clusters": to_value(&e.clusters),
                "u": mat("U", &e.u),
                "residual": pair(e.residuals(&a.hermitian_part())),
                "unitary_residual": pair(e.u.unitary_residuals()),
            });
            if let Some(seed) = cli.seed {
                seed_used = Some(seed);
                let attain = spectral::minimax_attainment(a).map_err(precondition)?;
                let mut per_k = Vec::new();
                for k in 2..=m {
                    let maxima = spectral::sampled_minimax(a, k, *samples, seed.wrapping_add(k as u64)).map_err(precondition)?;
                    let lam = e.eigenvalues[k - 1];
                    let lowest = maxima.iter().copied().reduce(|x, y| x.min(y));
                    let holds = maxima.iter().all(|v| v.ge_with_slack(lam, 1e-8));
                    per_k.push(json!({
                        "k": k,
                        "eigenvalue": to_value(&lam),
                        "smallest_sampled_max": to_value(&lowest),
                        "bound_holds": holds,
                    }));
                }
                p["minimax"] = json!({
                    "samples_per_k": samples,
                    "attainment": to_value(&attain),
                    "sampled": per_k,
                });
            }
            p
        }
        Command::Svd { .. } => {
            let s = spectral::svd_with_tol(a, tol);
            json!({
                "singulars": to_value(&s.singulars),
                "r": s.r,
                "t": s.t,
                "threshold": s.threshold,
                "u": mat("U", &s.u),
                "v": mat("V", &s.v),
                "residual": pair((&s.reconstruct() - a).max_abs_parts()),
            })
        }
        Command::Pinv { .. } => {
            let mut p = json!({});
            match ginverse::candidate(a) {
                Ok(x) => {
                    let c = ginverse::verify(a, &x).map_err(precondition)?;
                    p["candidate"] = mat("X", &x);
                    p["candidate_conditions"] = json!(c.set());
                }
                Err(_) => p["candidate"] = Value::Null,
            }
            match ginverse::moore_penrose_with_tol(a, tol) {
                Ok(g) => {
                    let c = ginverse::verify(a, &g).map_err(precondition)?;
                    p["mp_exists"] = json!(true);
                    p["mp"] = mat("A+", &g);
                    p["mp_conditions"] = json!(c.set());
                }
                Err(why) => {
                    p["mp_exists"] = json!(false);
                    p["reason"] = json!(why.describe());
                    if let MpAbsence::InfinitesimalSingularValue { values } = &why {
                        p["infinitesimal_singulars"] = to_value(values);
                    }
                }
            }
            p
        }
        Command::GiCheck { g, .. } => match g {
            Some(path) => {
                let gl = load(path, stdin)?;
                inputs.push(gl.info.clone());
                let c = ginverse::verify(a, &gl.matrix).map_err(precondition)?;
                json!({
                    "holds": c.set(),
                    "residuals": c.residuals.map(pair).to_vec(),
                    "tolerance": c.tolerance,
                })
            }
            None => {
                let rep = ginverse::analyze_with_tol(a, tol).map_err(precondition)?;
                let c = rep.candidate_conditions;
                let cf = rep.closed_form;
                let agree = cf.c1 == c.holds(1) && cf.c3 == c.holds(3) && cf.c4 == c.holds(4);
                if !agree {
                    diagnostics.push("closed-form criteria disagree with the direct residual check".into());
                }
                json!({
                    "candidate": mat("X", &rep.candidate),
                    "holds": c.set(),
                    "residuals": c.residuals.map(pair).to_vec(),
                    "tolerance": c.tolerance,
                    "criteria": to_value(&cf),
                    "criteria_agree": agree,
                    "mp_exists": rep.mp.is_ok(),
                })
            }
        },
        Command::Rank { .. } => {
            let s = backend::svd(a.std());
            json!({
                "rank": s.rank_with(tol),
                "standard_singular_values": s.sigma,
            })
        }
        Command::WeakRank { .. } => {
            let w = independence::weak_rank_or_estimate(a, tol);
            if !w.exact {
                diagnostics.push(format!(
                    "{n} columns exceed the exhaustive search limit of {}; weak_rank is the nonzero singular value count",
                    independence::WEAK_RANK_SUBSET_LIMIT
                ));
            } else if w.value != w.nonzero_singular_values {
                diagnostics.push("weak rank differs from the nonzero singular value count".into());
            }
            json!({
                "weak_rank": w.value,
                "exact": w.exact,
                "nonzero_singular_values": w.nonzero_singular_values,
                "rank": w.appreciable_singular_values,
            })
        }
        Command::Inv { .. } => {
            if !a.is_square() {
                return Err(CliError::Precondition(format!("matrix must be square, got {m}x{n}")));
            }
            let inv = a.inverse().map_err(precondition)?;
            let r = (&(a * &inv) - &DQMatrix::identity(m)).max_abs_parts();
            json!({ "inverse": mat("inv", &inv), "residual": pair(r) })
        }
        Command::Solve { rhs, .. } => {
            let bl = load(rhs, stdin)?;
            inputs.push(bl.info.clone());
            if bl.matrix.cols() != 1 {
                return Err(CliError::Precondition(format!("right-hand side must be a column, got {}x{}", bl.info.rows, bl.info.cols)));
            }
            if !a.is_square() {
                return Err(CliError::Precondition(format!("matrix must be square, got {m}x{n}")));
            }
            let b = bl.matrix.column(0);
            let x = a.solve(&b).map_err(precondition)?;
            let r = a.mul_vec(&x).and_then(|ax| ax.try_sub(&b)).map_err(precondition)?.max_abs_parts();
            json!({ "x": mat("x", &vector_matrix(&x)), "residual": pair(r) })
        }
        Command::CheckLi { mode, .. } => {
            let rep = independence::check_columns_with_tol(a, *mode, tol);
            let mut p = json!({ "mode": to_value(mode), "independent": rep.independent });
            match &rep.witness {
                Some(w) => {
                    p["witness"] = mat("alpha", &vector_matrix(w));
                    p["witness_image"] = pair(a.mul_vec(w).map_err(precondition)?.max_abs_parts());
                }
                None => p["witness"] = Value::Null,
            }
            p
        }
        Command::Chi { .. } => json!({ "chi": serde_json::to_value(MatrixFile::from_quaternion_matrix("chi", &a.chi())).expect("serializable") }),
        Command::Norm { .. } => {
            let r = a.norm_report();
            if r.degenerate {
                diagnostics.push("standard part underflowed; the infinitesimal branch was used".into());
            }
            json!({ "norm": to_value(&r.value), "degenerate": r.degenerate })
        }
    };

    Ok(ResultDocument {
        command: cli.command.name().into(),
        inputs,
        tolerances: Tolerances {
            rank_rel_tol: tol,
            overridden: rank_tol_override.is_some(),
            appreciable: crate::dual::APPRECIABLE_TOL,
            cluster_rel: CLUSTER_REL_TOL,
            verify_rel: ginverse::VERIFY_TOL,
        },
        seed: seed_used,
        payload,
        diagnostics,
    })
}
