use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: &str = "1";

/// Machine-readable output. Keys are emitted in sorted order so that
/// parsing and re-printing a report reproduces it byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub format_version: String,
    pub command: Vec<String>,
    pub input: Input,
    pub passed: bool,
    pub results: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: &Path, bytes: &[u8]) -> Self {
        Input {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value prints")
    }
}

pub struct Report {
    pub document: OutputDocument,
    pub table: String,
    pub passed: bool,
}

pub fn money(v: f64) -> String {
    // avoid printing "-0.00"
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

pub fn interval(lower: f64, upper: f64) -> String {
    format!("[{}, {}]", money(lower), money(upper))
}

pub fn value_set(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Left-aligned label/value rows.
pub fn rows(out: &mut String, rows: &[(&str, String)]) {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
}
