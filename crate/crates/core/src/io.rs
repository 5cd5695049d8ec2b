//! Plain matrix files and JSON verdict reports.
//!
//! A matrix file is a header line with the row and column counts followed
//! by the entries in row-major order, whitespace-separated. Bases are
//! written one move per row.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intcore::{IntMat, Move};
use crate::paperlab::Verdict;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub fn parse_matrix(text: &str) -> Result<IntMat> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(Error::Parse(format!("header must hold two counts, got {header:?}")));
    }
    let parse_dim = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad count {s:?} in header")))
    };
    let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
    let mut entries = Vec::new();
    for tok in lines.flat_map(str::split_whitespace) {
        let x: i64 = tok.parse().map_err(|e: std::num::ParseIntError| {
            match e.kind() {
                std::num::IntErrorKind::PosOverflow | std::num::IntErrorKind::NegOverflow => {
                    Error::Overflow("matrix entry")
                }
                _ => Error::Parse(format!("not an integer: {tok:?}")),
            }
        })?;
        entries.push(x);
    }
    let expected = rows.checked_mul(cols).ok_or(Error::Overflow("matrix size"))?;
    if entries.len() != expected {
        return Err(Error::Parse(format!(
            "{rows}×{cols} header but {} entries",
            entries.len()
        )));
    }
    IntMat::new(rows, cols, entries)
}

pub fn format_matrix(m: &IntMat) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<IntMat> {
    parse_matrix(&fs::read_to_string(path)?)
}

pub fn write_matrix(path: impl AsRef<Path>, m: &IntMat) -> Result<()> {
    fs::write(path, format_matrix(m))?;
    Ok(())
}

/// Moves stacked as rows; an empty set has shape `0×dim`.
pub fn moves_to_matrix(moves: &[Move], dim: usize) -> Result<IntMat> {
    let entries: Vec<i64> = moves.iter().flat_map(|m| m.as_slice().iter().copied()).collect();
    IntMat::new(moves.len(), dim, entries)
}

pub fn matrix_to_moves(m: &IntMat) -> Vec<Move> {
    (0..m.rows()).map(|i| Move::from(m.row(i).to_vec())).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema_version: u32,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub wall_time_secs: f64,
}

impl VerdictReport {
    pub fn new(verdict: Verdict, wall_time_secs: f64) -> Self {
        VerdictReport {
            schema_version: REPORT_SCHEMA_VERSION,
            verdict,
            wall_time_secs,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paperlab::remark_matrices;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_matrix("2 2\n1 0\n0 1").unwrap(), IntMat::identity(2));
        let a5 = parse_matrix("1 4\n1 5 20 24").unwrap();
        assert_eq!(a5.row(0), &[1, 5, 20, 24]);
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse(_))));
        assert!(matches!(parse_matrix("2\n1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_matrix("1 3\n1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_matrix("1 2\n1 x"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_matrix("1 1\n99999999999999999999"),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn remark_matrix_roundtrip() {
        for m in remark_matrices() {
            let text = format_matrix(&m);
            assert!(text.starts_with("6 4\n"));
            assert_eq!(parse_matrix(&text).unwrap(), m);
        }
    }

    #[test]
    fn moves_roundtrip() {
        let moves = vec![Move::from(vec![1, -1, 0]), Move::from(vec![0, 2, -1])];
        let m = moves_to_matrix(&moves, 3).unwrap();
        assert_eq!(matrix_to_moves(&parse_matrix(&format_matrix(&m)).unwrap()), moves);
        assert_eq!(moves_to_matrix(&[], 3).unwrap().rows(), 0);
    }
}
