//! Amphichirality obstructions from the branched double cover.
//!
//! Three tests are run for every prime `p` dividing the determinant:
//!
//! * cyclic primary part: if `K` is amphichiral then `λ_p ≅ -λ_p`. On a
//!   nonzero cyclic `p`-part this forces `-1` to be a square mod `p`, so the
//!   test fires when `p ≡ 3 (mod 4)`.
//! * Goeritz: `p | det(K)` but `p² ∤ det(K)`.
//! * Goeritz, strong form: the `p`-adic valuation of `det(K)` is odd.
//!
//! Any firing test proves `K` is not amphichiral. Nothing here ever claims a
//! knot *is* amphichiral.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::linalg::{determinant, IntMatrix};
use crate::linking::{
    brute_force_self_negation_isometric, linking_form_from_presentation, TorsionLinkingForm, DEFAULT_ORACLE_BOUND,
};
use crate::number_theory::{ensure_prime, valuation, Factorizer, TrialDivision};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    /// Provably not amphichiral.
    Obstructed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEvidence {
    #[serde(rename = "p")]
    #[serde_as(as = "DisplayFromStr")]
    pub prime: u64,
    #[serde_as(as = "DisplayFromStr")]
    pub mod4: u8,
    #[serde_as(as = "DisplayFromStr")]
    pub valuation: u32,
    #[serde(rename = "exponents")]
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub primary_exponents: Vec<u32>,
    #[serde(rename = "theorem1")]
    pub cyclic_fires: bool,
    #[serde(rename = "goeritz")]
    pub goeritz_fires: bool,
    #[serde(rename = "goeritz_strong")]
    pub goeritz_strong_fires: bool,
    /// Outcome of the exhaustive search for an isometry `λ_p ≅ -λ_p` on a
    /// nonzero cyclic part. `None` when the part is not cyclic or the search
    /// was beyond the enumeration bound.
    pub negation_isometric: Option<bool>,
}

impl PrimeEvidence {
    pub fn fires(&self) -> bool {
        self.cyclic_fires || self.goeritz_fires || self.goeritz_strong_fires
    }
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralityReport {
    #[serde(rename = "label")]
    pub knot_label: String,
    #[serde_as(as = "DisplayFromStr")]
    pub determinant: BigUint,
    pub group: AbelianGroup,
    #[serde(rename = "primes")]
    pub per_prime: Vec<PrimeEvidence>,
    pub verdict: Verdict,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub obstructing_primes: Vec<u64>,
}

impl ChiralityReport {
    /// Checks the report's internal invariants.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Report(m.to_string()));
        if self.group.order() != self.determinant {
            return bad("determinant differs from the group order");
        }
        if (self.verdict == Verdict::Obstructed) == self.obstructing_primes.is_empty() {
            return bad("verdict disagrees with the obstructing primes");
        }
        let firing: Vec<u64> = self.per_prime.iter().filter(|e| e.fires()).map(|e| e.prime).collect();
        if firing != self.obstructing_primes {
            return bad("obstructing primes disagree with the per-prime evidence");
        }
        for e in &self.per_prime {
            if e.cyclic_fires && (e.mod4 != 3 || e.primary_exponents.len() != 1) {
                return bad("cyclic criterion fired outside its hypotheses");
            }
            if e.goeritz_fires && !e.cyclic_fires {
                return bad("Goeritz fired without the cyclic criterion");
            }
        }
        Ok(())
    }
}

/// Fires iff `p ≡ 3 (mod 4)` and the `p`-primary part of `g` is nonzero and cyclic.
pub fn cyclic_primary_check(g: &AbelianGroup, p: u64) -> Result<bool> {
    let part = g.primary_part(p)?;
    Ok(p % 4 == 3 && !part.is_zero() && part.is_cyclic())
}

fn knot_determinant_prime(d: &BigUint, p: u64) -> Result<()> {
    ensure_prime(p)?;
    if d.is_even() {
        return Err(Error::NotKnotDeterminant(d.clone()));
    }
    Ok(())
}

/// Fires iff `p ≡ 3 (mod 4)`, `p | d` and `p² ∤ d`.
pub fn goeritz_check(d: &BigUint, p: u64) -> Result<bool> {
    knot_determinant_prime(d, p)?;
    Ok(p % 4 == 3 && valuation(d, p) == 1)
}

/// Fires iff `p ≡ 3 (mod 4)` and the `p`-adic valuation of `d` is odd.
pub fn goeritz_strong_check(d: &BigUint, p: u64) -> Result<bool> {
    knot_determinant_prime(d, p)?;
    Ok(p % 4 == 3 && valuation(d, p) % 2 == 1)
}

/// `|Δ(-1)|` for Alexander polynomial coefficients in ascending degree.
pub fn determinant_from_alexander(coeffs: &[BigInt]) -> Result<BigUint> {
    let value: BigInt = coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c }).sum();
    if value.is_zero() {
        return Err(Error::NotAlexanderPolynomial);
    }
    Ok(value.magnitude().clone())
}

/// Runs the whole pipeline from a Seifert matrix or a linking form.
pub struct Analyzer<F = TrialDivision> {
    pub factorizer: F,
    /// Largest modulus `pⁿ` the brute-force isometry search will enumerate.
    pub oracle_bound: u64,
}

impl Default for Analyzer {
    fn default() -> Self {
        Self { factorizer: TrialDivision, oracle_bound: DEFAULT_ORACLE_BOUND }
    }
}

impl<F: Factorizer> Analyzer<F> {
    pub fn report(&self, label: &str, seifert: &IntMatrix, alexander: Option<&[BigInt]>) -> Result<ChiralityReport> {
        let presentation = seifert.symmetrized()?;
        let det = determinant(&presentation)?;
        if det.is_zero() {
            return Err(Error::SingularPresentation);
        }
        let det = det.magnitude().clone();
        if det.is_even() {
            return Err(Error::NotKnotDeterminant(det));
        }
        if let Some(coeffs) = alexander {
            let alexander = determinant_from_alexander(coeffs)?;
            if alexander != det {
                return Err(Error::InconsistentKnotData { label: label.to_string(), seifert: det, alexander });
            }
        }
        let form = linking_form_from_presentation(&presentation)?;
        debug_assert_eq!(form.group().order(), det);
        self.report_from_form(label, &form)
    }

    /// Builds the report from an already computed linking form. The verdict
    /// does not depend on the global sign of `form`.
    pub fn report_from_form(&self, label: &str, form: &TorsionLinkingForm) -> Result<ChiralityReport> {
        let group = form.group();
        let determinant = group.order();
        if determinant.is_even() {
            return Err(Error::NotKnotDeterminant(determinant));
        }
        let factorization = self.factorizer.factorize(&determinant)?;

        let mut per_prime = Vec::with_capacity(factorization.pairs().len());
        for &(p, valuation) in factorization.pairs() {
            let part = group.primary_part(p)?;
            let cyclic_fires = cyclic_primary_check(group, p)?;
            let negation_isometric = if !part.is_zero() && part.is_cyclic() {
                let cyclic = form.restrict_to_primary(p)?.cyclic_parameter()?;
                match brute_force_self_negation_isometric(&cyclic, self.oracle_bound) {
                    Ok(found) => {
                        if found != (p % 4 == 1) {
                            return Err(Error::OracleDisagreement(p));
                        }
                        Some(found)
                    }
                    Err(Error::OracleBoundExceeded { .. }) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            per_prime.push(PrimeEvidence {
                prime: p,
                mod4: (p % 4) as u8,
                valuation,
                primary_exponents: part.exponents,
                cyclic_fires,
                goeritz_fires: goeritz_check(&determinant, p)?,
                goeritz_strong_fires: goeritz_strong_check(&determinant, p)?,
                negation_isometric,
            });
        }

        let obstructing_primes: Vec<u64> = per_prime.iter().filter(|e| e.fires()).map(|e| e.prime).collect();
        let verdict = if obstructing_primes.is_empty() { Verdict::Inconclusive } else { Verdict::Obstructed };
        let report = ChiralityReport {
            knot_label: label.to_string(),
            determinant,
            group: group.clone(),
            per_prime,
            verdict,
            obstructing_primes,
        };
        debug_assert!(report.validate().is_ok());
        Ok(report)
    }
}

/// Full chirality analysis of a knot given by a Seifert matrix, optionally
/// cross-checking the determinant against an Alexander polynomial.
pub fn full_report(label: &str, seifert: &IntMatrix, alexander: Option<&[BigInt]>) -> Result<ChiralityReport> {
    Analyzer::default().report(label, seifert, alexander)
}
