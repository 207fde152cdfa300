use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chiral_core::io::{
    bundled_table, emit_report, emit_reports, explain, parse_coefficients, parse_seifert_text, parse_table_csv,
    scan_table, Format, KnotTable,
};
use chiral_core::{cyclic_isometric, find_self_negation_isometry, Analyzer, CyclicLinkingForm, DEFAULT_ORACLE_BOUND};
use clap::{Parser, Subcommand};

/// Prove knots chiral from a Seifert matrix via the linking form of the
/// 2-fold branched cover.
#[derive(Parser)]
#[command(name = "chiral", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single knot.
    Check {
        /// File holding the Seifert matrix, or the matrix itself
        /// (`[[1,0],[1,-2]]`, or rows separated by `;`).
        #[arg(long)]
        seifert: String,
        /// Alexander polynomial coefficients in ascending degree, e.g. `2,-5,2`.
        #[arg(long, allow_hyphen_values = true)]
        alexander: Option<String>,
        #[arg(long, default_value = "knot")]
        label: String,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Analyze every knot in a CSV table.
    Scan {
        /// CSV with columns name, seifert_matrix and optionally
        /// alexander_polynomial, amphichiral. Defaults to the bundled table.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Fail on the first malformed or unanalyzable record instead of
        /// skipping it.
        #[arg(long)]
        strict: bool,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Per-prime evidence for one knot of a table, with oracle confirmation.
    Explain {
        label: String,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Search for isometries λ ≅ -λ of cyclic linking forms on ℤ/pⁿ.
    Oracle {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        exponent: u32,
        /// Largest modulus pⁿ to enumerate.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: u64,
        /// Only test the form k·a·b/pⁿ for this k. Defaults to every unit.
        #[arg(long, allow_hyphen_values = true)]
        unit: Option<i64>,
    },
}

fn read_seifert(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    Ok(if arg.trim_start().starts_with('[') { arg.to_string() } else { arg.replace(';', "\n") })
}

fn load_table(path: Option<&Path>, strict: bool) -> Result<KnotTable> {
    let Some(path) = path else {
        return Ok(bundled_table());
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = parse_table_csv(&text, strict).with_context(|| format!("parsing {}", path.display()))?;
    if !parsed.skipped.is_empty() {
        eprintln!("skipped {} malformed row(s) of {}", parsed.skipped.len(), path.display());
    }
    Ok(parsed.table)
}

fn check(seifert: &str, alexander: Option<&str>, label: &str, format: Format) -> Result<()> {
    let matrix = parse_seifert_text(&read_seifert(seifert)?).context("parsing the Seifert matrix")?;
    let coeffs = alexander.map(parse_coefficients).transpose().context("parsing the Alexander polynomial")?;
    let report = Analyzer::default().report(label, &matrix, coeffs.as_deref())?;
    print!("{}", emit_report(&report, format));
    if format == Format::Json {
        println!();
    }
    Ok(())
}

fn scan(table: Option<&Path>, format: Format, strict: bool, jobs: usize) -> Result<()> {
    let table = load_table(table, strict)?;
    let mut reports = Vec::with_capacity(table.len());
    for (record, result) in table.records().iter().zip(scan_table(&table, jobs)) {
        match result {
            Ok(r) => reports.push(r),
            Err(e) if strict => bail!("{}: {e}", record.label),
            Err(e) => eprintln!("skipping {}: {e}", record.label),
        }
    }
    print!("{}", emit_reports(&reports, format));
    if format == Format::Json {
        println!();
    }
    Ok(())
}

fn oracle(prime: u64, exponent: u32, bound: u64, unit: Option<i64>) -> Result<()> {
    let forms: Vec<CyclicLinkingForm> = match unit {
        Some(k) => vec![CyclicLinkingForm::new(prime, exponent, k)?],
        None => {
            let q = prime
                .checked_pow(exponent)
                .filter(|&q| q <= bound)
                .with_context(|| format!("{prime}^{exponent} exceeds the search bound {bound}"))?;
            (1..q)
                .filter(|k| k % prime != 0)
                .map(|k| CyclicLinkingForm::new(prime, exponent, k))
                .collect::<Result<_, _>>()?
        }
    };
    let mut disagreements = 0;
    for f in &forms {
        let found = find_self_negation_isometry(f, bound)?;
        let criterion = cyclic_isometric(f, &f.negate());
        if found.is_some() != criterion {
            disagreements += 1;
        }
        match found {
            Some(r) => println!("{f}: r = {r} gives λ ≅ -λ"),
            None => println!("{f}: no unit r gives λ ≅ -λ"),
        }
    }
    let isometric = forms.first().is_some_and(|f| cyclic_isometric(f, &f.negate()));
    println!(
        "criterion: -1 is {}a square unit mod {prime}^{exponent}; brute force {} on {} form(s)",
        if isometric { "" } else { "not " },
        if disagreements == 0 { "agrees" } else { "DISAGREES" },
        forms.len()
    );
    if disagreements > 0 {
        bail!("oracle disagreed with the criterion on {disagreements} form(s)");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Check { seifert, alexander, label, format } => check(&seifert, alexander.as_deref(), &label, format),
        Command::Scan { table, format, strict, jobs } => scan(table.as_deref(), format, strict, jobs),
        Command::Explain { label, table } => {
            let table = load_table(table.as_deref(), false)?;
            print!("{}", explain(table.get(&label)?)?);
            Ok(())
        }
        Command::Oracle { prime, exponent, bound, unit } => oracle(prime, exponent, bound, unit),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
