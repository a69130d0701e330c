//! Report types and writers (JSON, CSV, JSON lines, text).

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use serde::Serialize;
use skewcode_core::quantum::PolyCheck;
use skewcode_core::DualContainCertificate;

use crate::config::CodeConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Where a report goes: stdout, or a file when `--out` is given.
#[derive(Debug, Clone)]
pub struct Sink {
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Sink {
    pub fn write(&self, body: &str) -> io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, body),
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(body.as_bytes())?;
                stdout.flush()
            }
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn to_jsonl<T: Serialize>(rows: &[T]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("report types serialize") + "\n")
        .collect()
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub passed: bool,
    pub cofactor: Option<String>,
    pub product: String,
    pub quotient: Option<String>,
}

impl From<&PolyCheck> for Witness {
    fn from(c: &PolyCheck) -> Self {
        Witness {
            passed: c.passed,
            cofactor: c.cofactor.as_ref().map(|p| p.to_ascending()),
            product: c.product.to_ascending(),
            quotient: c.quotient.as_ref().map(|p| p.to_ascending()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    pub f: Witness,
    pub g1: Witness,
    pub g2: Witness,
}

impl From<&DualContainCertificate> for Witnesses {
    fn from(c: &DualContainCertificate) -> Self {
        Witnesses {
            f: (&c.f_check).into(),
            g1: (&c.g1_check).into(),
            g2: (&c.g2_check).into(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Classical {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeReport {
    pub config: CodeConfig,
    pub warnings: Vec<String>,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
    pub block_dimensions: [usize; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuantumReport {
    pub config: CodeConfig,
    pub warnings: Vec<String>,
    pub n: usize,
    pub k: Option<usize>,
    pub d: usize,
    pub q: u32,
    pub dual_containing: bool,
    pub explicit_dual_containing: bool,
    pub route: String,
    pub classical: Classical,
    pub singleton_defect: Option<usize>,
    pub witnesses: Witnesses,
}

/// One line of a search report.
#[derive(Debug, Clone, Serialize)]
pub struct SearchRow {
    pub q: u32,
    pub alpha: usize,
    pub beta: usize,
    pub f: String,
    pub g1: String,
    pub g2: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub qn: usize,
    pub qk: usize,
    pub qd: usize,
    pub dual_containing: bool,
    pub seconds: f64,
    pub error: String,
}

/// Structured error written to stderr.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}
