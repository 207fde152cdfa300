//! Report serialization.
//!
//! JSON schema (all numbers are decimal strings):
//!
//! ```text
//! {
//!   "label": "6_1",
//!   "determinant": "9",
//!   "group": { "invariant_factors": ["9"] },
//!   "primes": [
//!     { "p": "3", "mod4": "3", "valuation": "2", "exponents": ["2"],
//!       "theorem1": true, "goeritz": false, "goeritz_strong": false,
//!       "negation_isometric": false }
//!   ],
//!   "verdict": "OBSTRUCTED",
//!   "obstructing_primes": ["3"]
//! }
//! ```
//!
//! `theorem1` is the cyclic primary-part criterion. `negation_isometric` is
//! the brute-force search for `λ_p ≅ -λ_p` on a cyclic part, `null` when not
//! applicable.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::obstruction::{ChiralityReport, PrimeEvidence, Verdict};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format {other:?}, expected json or text")),
        }
    }
}

pub fn emit_report(r: &ChiralityReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes"),
        Format::Text => render_text(r),
    }
}

/// Batch output: a JSON array, or text blocks separated by blank lines.
pub fn emit_reports(reports: &[ChiralityReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
        Format::Text => reports.iter().map(render_text).collect::<Vec<_>>().join("\n"),
    }
}

pub fn parse_report_json(input: &str) -> Result<ChiralityReport> {
    let r: ChiralityReport = serde_json::from_str(input).map_err(|e| Error::Report(e.to_string()))?;
    r.group.validate()?;
    r.validate()?;
    Ok(r)
}

fn fires(b: bool) -> &'static str {
    if b {
        "fires"
    } else {
        "does not fire"
    }
}

fn primary_part(e: &PrimeEvidence) -> String {
    if e.primary_exponents.is_empty() {
        return "0".into();
    }
    e.primary_exponents
        .iter()
        .map(|&k| if k == 1 { format!("Z/{}", e.prime) } else { format!("Z/{}^{k}", e.prime) })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn render_prime(out: &mut String, e: &PrimeEvidence) {
    let _ = writeln!(
        out,
        "  p = {} (≡ {} mod 4), valuation {}, primary part {}",
        e.prime,
        e.mod4,
        e.valuation,
        primary_part(e)
    );
    let _ = writeln!(out, "    cyclic primary-part criterion: {}", fires(e.cyclic_fires));
    let _ = writeln!(out, "    Goeritz criterion (p | det, p^2 ∤ det): {}", fires(e.goeritz_fires));
    let _ = writeln!(out, "    Goeritz even-power criterion: {}", fires(e.goeritz_strong_fires));
    match e.negation_isometric {
        Some(true) => {
            let _ = writeln!(out, "    brute force: found an isometry λ_p ≅ -λ_p");
        }
        Some(false) => {
            let _ = writeln!(out, "    brute force: no isometry λ_p ≅ -λ_p exists");
        }
        None => {}
    }
}

fn render_text(r: &ChiralityReport) -> String {
    let mut out = String::new();
    let verdict = match r.verdict {
        Verdict::Obstructed => "OBSTRUCTED (provably not amphichiral)",
        Verdict::Inconclusive => "INCONCLUSIVE (no obstruction found)",
    };
    let _ = writeln!(out, "{}: {verdict}", r.knot_label);
    let _ = writeln!(out, "  determinant: {}", r.determinant);
    let _ = writeln!(out, "  H_1 of the 2-fold branched cover: {}", r.group);
    for e in &r.per_prime {
        render_prime(&mut out, e);
    }
    for e in r.per_prime.iter().filter(|e| e.fires()) {
        let mut by = Vec::new();
        if e.cyclic_fires {
            by.push(format!("the {}-primary part is nonzero and cyclic with p ≡ 3 mod 4", e.prime));
        }
        if e.goeritz_fires {
            by.push(format!("Goeritz: {} divides the determinant exactly once", e.prime));
        }
        if e.goeritz_strong_fires && !e.goeritz_fires {
            by.push(format!("Goeritz: {} divides the determinant to an odd power", e.prime));
        }
        let _ = writeln!(out, "  chiral by p = {}: {}", e.prime, by.join("; "));
    }
    out
}
