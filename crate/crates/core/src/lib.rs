//! Chirality obstructions for knots from the 2-fold branched cover.
//!
//! Given a Seifert matrix `A`, the homology `H = H₁(Σ(K))` is presented by
//! `A + Aᵀ`. Its linking form, restricted to the `p`-primary parts, proves a
//! knot chiral whenever some `p ≡ 3 (mod 4)` has a nonzero cyclic `p`-part,
//! and Goeritz's determinant conditions give coarser versions of the same test.
//!
//! ```
//! use chiral_core::{full_report, IntMatrix, Verdict};
//!
//! let stevedore = IntMatrix::from_rows([[1, 0], [1, -2]]).unwrap();
//! let report = full_report("6_1", &stevedore, None).unwrap();
//! assert_eq!(report.verdict, Verdict::Obstructed);
//! assert_eq!(report.obstructing_primes, [3]);
//! ```

pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod linking;
pub mod number_theory;
pub mod obstruction;

pub use error::{Error, Result};
pub use group::{group_from_presentation, AbelianGroup, PrimaryPart};
pub use linalg::{determinant, rational_inverse, smith_normal_form, IntMatrix, RatMatrix, SmithDecomposition};
pub use linking::{
    brute_force_self_negation_isometric, cyclic_isometric, find_self_negation_isometry, linking_form_from_presentation,
    linking_form_from_seifert, CyclicLinkingForm, TorsionLinkingForm, DEFAULT_ORACLE_BOUND,
};
pub use number_theory::{factorize, is_quadratic_residue, mod4_class, Factorization, Factorizer, TrialDivision};
pub use obstruction::{
    cyclic_primary_check, determinant_from_alexander, full_report, goeritz_check, goeritz_strong_check, Analyzer,
    ChiralityReport, PrimeEvidence, Verdict,
};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
