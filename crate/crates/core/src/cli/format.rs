//! Matrix file layout, result documents and their text rendering.
//!
//! A matrix file is one JSON document:
//!
//! ```json
//! {"name": "A", "rows": 1, "cols": 1, "entries": [[0, 1, 0, 0, 0, 0, 1, 0]]}
//! ```
//!
//! `entries` is row-major; each entry lists `w, x, y, z` of the standard
//! part followed by `w, x, y, z` of the infinitesimal part. The example is
//! the scalar `i + jε`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::dqmatrix::DQMatrix;
use crate::qmatrix::QMatrix;
use crate::quaternion::Quaternion;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 8]>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("dimension mismatch: rows*cols = {expected} but {found} entries")]
    DimMismatch { expected: usize, found: usize },
}

impl MatrixFile {
    pub fn from_matrix(name: impl Into<String>, a: &DQMatrix) -> Self {
        let (rows, cols) = a.shape();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = a.get(i, j);
                let (s, t) = (e.std, e.inf);
                entries.push([s.w, s.x, s.y, s.z, t.w, t.x, t.y, t.z]);
            }
        }
        Self {
            name: name.into(),
            rows,
            cols,
            entries,
        }
    }

    /// A quaternion matrix, written with a zero infinitesimal part.
    pub fn from_quaternion_matrix(name: impl Into<String>, q: &QMatrix) -> Self {
        Self::from_matrix(name, &DQMatrix::from_std(q.clone()))
    }

    /// Parses and validates a document.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: MatrixFile = serde_json::from_str(text).map_err(|e| FormatError::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), FormatError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(FormatError::Parse {
                location: if self.rows == 0 { "rows" } else { "cols" }.into(),
                message: "dimensions must be positive".into(),
            });
        }
        let expected = self.rows * self.cols;
        if self.entries.len() != expected {
            return Err(FormatError::DimMismatch {
                expected,
                found: self.entries.len(),
            });
        }
        for (k, e) in self.entries.iter().enumerate() {
            if let Some(f) = e.iter().position(|v| !v.is_finite()) {
                return Err(FormatError::Parse {
                    location: format!("entries[{k}][{f}]"),
                    message: "number is not finite".into(),
                });
            }
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> Result<DQMatrix, FormatError> {
        self.validate()?;
        let q = |e: &[f64]| Quaternion::new(e[0], e[1], e[2], e[3]);
        let std = self.entries.iter().map(|e| q(&e[..4])).collect();
        let inf = self.entries.iter().map(|e| q(&e[4..])).collect();
        let s = QMatrix::from_vec(self.rows, self.cols, std).expect("validated");
        let i = QMatrix::from_vec(self.rows, self.cols, inf).expect("validated");
        Ok(DQMatrix::new(s, i).expect("equal shapes"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finite numbers serialize")
    }
}

/// Parses a matrix document straight to a [`DQMatrix`].
pub fn parse_matrix_str(text: &str) -> Result<DQMatrix, FormatError> {
    MatrixFile::parse(text)?.to_matrix()
}

/// `sha256:<hex>` of the raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputInfo {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative rank and singular-value tolerance.
    pub rank_rel_tol: f64,
    /// Whether `rank_rel_tol` came from `--tol`.
    pub overridden: bool,
    pub appreciable: f64,
    pub cluster_rel: f64,
    pub verify_rel: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub command: String,
    pub inputs: Vec<InputInfo>,
    pub tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl ResultDocument {
    /// One line of JSON.
    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command      {}", self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "input        {} ({}x{}) {}", i.name, i.rows, i.cols, i.digest);
        }
        let _ = writeln!(out, "rank tol     {:e}", self.tolerances.rank_rel_tol);
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed         {s}");
        }
        render(&mut out, &self.payload, 0, None);
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        out
    }
}

fn pad(out: &mut String, depth: usize) {
    out.push_str(&"  ".repeat(depth));
}

fn render(out: &mut String, v: &Value, depth: usize, key: Option<&str>) {
    let label = |out: &mut String| {
        pad(out, depth);
        if let Some(k) = key {
            let _ = write!(out, "{k}: ");
        }
    };
    match v {
        Value::Object(map) if is_dual(map) => {
            label(out);
            let _ = writeln!(out, "{}", fmt_dual(map));
        }
        Value::Object(map) if map.contains_key("entries") => {
            label(out);
            let _ = writeln!(out, "{} x {}", map["rows"], map["cols"]);
            let cols = map["cols"].as_u64().unwrap_or(1) as usize;
            if let Some(Value::Array(e)) = map.get("entries") {
                for row in e.chunks(cols.max(1)) {
                    pad(out, depth + 1);
                    let cells: Vec<String> = row.iter().map(fmt_entry).collect();
                    let _ = writeln!(out, "[{}]", cells.join("  "));
                }
            }
        }
        Value::Object(map) => {
            if key.is_some() {
                label(out);
                end_label(out);
            }
            let d = if key.is_some() { depth + 1 } else { depth };
            for (k, x) in map {
                render(out, x, d, Some(k));
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            label(out);
            let cells: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "[{}]", cells.join(", "));
        }
        Value::Array(items) if items.iter().all(|x| x.as_object().is_some_and(is_dual)) => {
            label(out);
            let cells: Vec<String> = items.iter().map(|x| fmt_dual(x.as_object().expect("object"))).collect();
            let _ = writeln!(out, "[{}]", cells.join(", "));
        }
        Value::Array(items) => {
            label(out);
            end_label(out);
            for x in items {
                render(out, x, depth + 1, Some("-"));
            }
        }
        other => {
            label(out);
            let _ = writeln!(out, "{other}");
        }
    }
}

fn end_label(out: &mut String) {
    if out.ends_with(' ') {
        out.pop();
    }
    out.push('\n');
}

fn is_dual(map: &serde_json::Map<String, Value>) -> bool {
    map.len() == 2 && map.contains_key("std") && map.contains_key("inf")
}

fn fmt_dual(map: &serde_json::Map<String, Value>) -> String {
    let s = map["std"].as_f64().unwrap_or(f64::NAN);
    let i = map["inf"].as_f64().unwrap_or(f64::NAN);
    crate::dual::DualNumber::new(s, i).to_string()
}

fn fmt_entry(v: &Value) -> String {
    let n: Vec<f64> = v.as_array().map(|a| a.iter().filter_map(Value::as_f64).collect()).unwrap_or_default();
    if n.len() != 8 {
        return v.to_string();
    }
    let q = |o: usize| Quaternion::new(n[o], n[o + 1], n[o + 2], n[o + 3]);
    crate::dq::DualQuaternion::new(q(0), q(4)).to_string()
}
