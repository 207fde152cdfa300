use std::fmt::Write;

use rayon::prelude::*;

use super::report::{emit_report, Format};
use super::table::{KnotTable, SeifertMatrixRecord};
use crate::error::Result;
use crate::linking::{find_self_negation_isometry, linking_form_from_seifert};
use crate::obstruction::{Analyzer, ChiralityReport};

pub fn report_record(analyzer: &Analyzer, record: &SeifertMatrixRecord) -> Result<ChiralityReport> {
    analyzer.report(&record.label, &record.matrix, record.alexander_coeffs.as_deref())
}

/// Reports for every record, in table order. `jobs == 0` uses rayon's
/// default thread count.
pub fn scan_table(table: &KnotTable, jobs: usize) -> Vec<Result<ChiralityReport>> {
    let analyzer = Analyzer::default();
    let run = || table.records().par_iter().map(|r| report_record(&analyzer, r)).collect();
    if jobs == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(e) => {
            log::warn!("could not build a {jobs}-thread pool ({e}), using the global pool");
            run()
        }
    }
}

/// Verbose per-prime explanation for one knot: the report, the linking form,
/// and for every cyclic primary part the linking unit and the outcome of the
/// exhaustive isometry search with its witness.
pub fn explain(record: &SeifertMatrixRecord) -> Result<String> {
    let analyzer = Analyzer::default();
    let report = report_record(&analyzer, record)?;
    let form = linking_form_from_seifert(&record.matrix)?;

    let mut out = emit_report(&report, Format::Text);
    let _ = writeln!(out, "  Seifert matrix: {}", record.matrix);
    let _ = writeln!(out, "  presentation A + A^T: {}", record.matrix.symmetrized()?);
    if let Some(amph) = record.amphichiral {
        let _ = writeln!(out, "  table metadata: amphichiral = {amph}");
    }
    let _ = writeln!(out, "  linking form {form}");
    for e in &report.per_prime {
        let part = form.restrict_to_primary(e.prime)?;
        let _ = writeln!(out, "  restriction to the {}-primary part: {}", e.prime, part.gram());
        if part.rank() != 1 {
            let _ = writeln!(out, "    not cyclic, no isometry test needed");
            continue;
        }
        let cyclic = part.cyclic_parameter()?;
        let _ = writeln!(out, "    λ_p(1, 1) = {cyclic}");
        match find_self_negation_isometry(&cyclic, analyzer.oracle_bound) {
            Ok(Some(r)) => {
                let _ =
                    writeln!(out, "    oracle: r = {r} satisfies -k ≡ k·r^2 mod {}, so λ_p ≅ -λ_p", cyclic.modulus());
            }
            Ok(None) => {
                let _ = writeln!(
                    out,
                    "    oracle: no unit r mod {} has -k ≡ k·r^2, so λ_p is not isometric to -λ_p",
                    cyclic.modulus()
                );
            }
            Err(err) => {
                let _ = writeln!(out, "    oracle skipped: {err}");
            }
        }
        let _ = writeln!(
            out,
            "    criterion: -1 is {} square mod {} since {} ≡ {} mod 4",
            if e.mod4 == 1 { "a" } else { "not a" },
            e.prime,
            e.prime,
            e.mod4
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::table::bundled_table;
    use crate::obstruction::Verdict;

    #[test]
    fn scan_preserves_order() {
        let table = bundled_table();
        let reports = scan_table(&table, 3);
        assert_eq!(reports.len(), table.len());
        let analyzer = Analyzer::default();
        for (record, report) in table.records().iter().zip(&reports) {
            assert_eq!(report.as_ref().unwrap(), &report_record(&analyzer, record).unwrap());
        }
    }

    #[test]
    fn explain_stevedore() {
        let table = bundled_table();
        let text = explain(table.get("6_1").unwrap()).unwrap();
        assert!(text.contains("no unit r mod 9"));
        assert!(text.contains("not a square mod 3"));

        let text = explain(table.get("4_1").unwrap()).unwrap();
        assert!(text.contains("r = 2 satisfies"));

        let text = explain(table.get("3_1#m3_1").unwrap()).unwrap();
        assert!(text.contains("not cyclic"));
    }

    #[test]
    fn bundled_verdicts() {
        let table = bundled_table();
        let verdict = |label: &str| {
            scan_table(&KnotTable::new(vec![table.get(label).unwrap().clone()]).unwrap(), 1).remove(0).unwrap().verdict
        };
        assert_eq!(verdict("3_1"), Verdict::Obstructed);
        assert_eq!(verdict("5_1"), Verdict::Inconclusive);
        assert_eq!(verdict("3_1#3_1"), Verdict::Inconclusive);
        assert_eq!(verdict("3_1#6_1"), Verdict::Obstructed);
    }
}
