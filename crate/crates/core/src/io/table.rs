//! CSV knot tables.
//!
//! Columns are looked up by header name: `name` and `seifert_matrix` are
//! required, `alexander_polynomial` (ascending coefficients, comma list) and
//! `amphichiral` (`true`/`false`) are optional. Empty optional cells are
//! treated as absent.

use std::collections::HashSet;

use num_bigint::BigInt;

use super::seifert::{parse_coefficients, parse_seifert_text};
use crate::error::{Error, Result};
use crate::linalg::{determinant, IntMatrix};
use crate::obstruction::determinant_from_alexander;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrixRecord {
    pub label: String,
    pub matrix: IntMatrix,
    pub alexander_coeffs: Option<Vec<BigInt>>,
    pub amphichiral: Option<bool>,
}

impl SeifertMatrixRecord {
    pub fn validate(&self) -> Result<()> {
        if self.label.trim().is_empty() {
            return Err(Error::InvalidRecord("empty knot label".into()));
        }
        self.matrix.ensure_square()?;
        if let Some(coeffs) = &self.alexander_coeffs {
            let seifert = determinant(&self.matrix.symmetrized()?)?.magnitude().clone();
            let alexander = determinant_from_alexander(coeffs)?;
            if seifert != alexander {
                return Err(Error::InconsistentKnotData { label: self.label.clone(), seifert, alexander });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotTable {
    records: Vec<SeifertMatrixRecord>,
}

impl KnotTable {
    /// Fails on a duplicate label.
    pub fn new(records: Vec<SeifertMatrixRecord>) -> Result<Self> {
        let mut seen = HashSet::new();
        for r in &records {
            if !seen.insert(r.label.as_str()) {
                return Err(Error::DuplicateLabel(r.label.clone()));
            }
        }
        Ok(Self { records })
    }

    pub fn records(&self) -> &[SeifertMatrixRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, label: &str) -> Result<&SeifertMatrixRecord> {
        self.records.iter().find(|r| r.label == label).ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// Records flagged amphichiral in the table metadata.
    pub fn amphichiral(&self) -> impl Iterator<Item = &SeifertMatrixRecord> {
        self.records.iter().filter(|r| r.amphichiral == Some(true))
    }
}

/// Result of a lenient parse: the table plus the rows that were skipped.
#[derive(Debug, Default)]
pub struct ParsedTable {
    pub table: KnotTable,
    pub skipped: Vec<Error>,
}

struct Columns {
    name: usize,
    matrix: usize,
    alexander: Option<usize>,
    amphichiral: Option<usize>,
}

fn header_error(message: String) -> Error {
    Error::TableRow { row: 1, message }
}

fn columns(headers: &csv::StringRecord) -> Result<Columns> {
    let find = |name: &str| headers.iter().position(|h| h.trim().eq_ignore_ascii_case(name));
    Ok(Columns {
        name: find("name").ok_or_else(|| header_error("missing column \"name\"".into()))?,
        matrix: find("seifert_matrix").ok_or_else(|| header_error("missing column \"seifert_matrix\"".into()))?,
        alexander: find("alexander_polynomial"),
        amphichiral: find("amphichiral"),
    })
}

fn optional(record: &csv::StringRecord, col: Option<usize>) -> Option<&str> {
    col.and_then(|c| record.get(c)).map(str::trim).filter(|s| !s.is_empty())
}

fn parse_row(record: &csv::StringRecord, cols: &Columns) -> std::result::Result<SeifertMatrixRecord, String> {
    let label = record.get(cols.name).map(str::trim).unwrap_or_default();
    if label.is_empty() {
        return Err("empty name".into());
    }
    let matrix_text = record.get(cols.matrix).ok_or("missing seifert_matrix cell")?;
    let matrix = parse_seifert_text(matrix_text).map_err(|e| format!("{label}: seifert_matrix: {e}"))?;
    let alexander_coeffs = optional(record, cols.alexander)
        .map(parse_coefficients)
        .transpose()
        .map_err(|e| format!("{label}: alexander_polynomial: {e}"))?;
    let amphichiral = match optional(record, cols.amphichiral).map(str::to_ascii_lowercase).as_deref() {
        None => None,
        Some("true") => Some(true),
        Some("false") => Some(false),
        Some(other) => return Err(format!("{label}: amphichiral must be true or false, got {other:?}")),
    };
    let rec = SeifertMatrixRecord { label: label.to_string(), matrix, alexander_coeffs, amphichiral };
    rec.validate().map_err(|e| e.to_string())?;
    Ok(rec)
}

/// Parses a knot table. Malformed rows abort the parse in `strict` mode and
/// are skipped (and logged) otherwise. Duplicate labels always fail.
pub fn parse_table_csv(input: &str, strict: bool) -> Result<ParsedTable> {
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(input.as_bytes());
    let headers = reader.headers().map_err(|e| header_error(e.to_string()))?.clone();
    if headers.is_empty() {
        return Ok(ParsedTable::default());
    }
    let cols = columns(&headers)?;

    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for result in reader.records() {
        let (row, parsed) = match result {
            Ok(record) => {
                let row = record.position().map_or(0, csv::Position::line);
                (row, parse_row(&record, &cols))
            }
            Err(e) => (e.position().map_or(0, csv::Position::line), Err(e.to_string())),
        };
        match parsed {
            Ok(rec) => records.push(rec),
            Err(message) => {
                let err = Error::TableRow { row, message };
                if strict {
                    return Err(err);
                }
                log::warn!("skipping {err}");
                skipped.push(err);
            }
        }
    }
    Ok(ParsedTable { table: KnotTable::new(records)?, skipped })
}

/// Table of small knots shipped with the crate, including amphichiral knots
/// used as a soundness check.
pub fn bundled_table() -> KnotTable {
    parse_table_csv(include_str!("../../data/knots.csv"), true).expect("bundled table is valid").table
}
