//! Knot input parsing, report serialization and batch scanning.

mod report;
mod scan;
mod seifert;
mod table;

pub use report::{emit_report, emit_reports, parse_report_json, Format};
pub use scan::{explain, report_record, scan_table};
pub use seifert::{parse_coefficients, parse_seifert_text, render_seifert_text};
pub use table::{bundled_table, parse_table_csv, KnotTable, ParsedTable, SeifertMatrixRecord};
