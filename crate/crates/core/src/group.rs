//! Finite abelian groups in invariant-factor form.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::number_theory::{ensure_prime, factorize, valuation, Factorization};

/// `ℤ_{f₁} ⊕ … ⊕ ℤ_{f_r}` with `2 ≤ f₁ | f₂ | … | f_r`. The trivial group has
/// no factors.
#[serde_as]
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    invariant_factors: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Validates an invariant-factor list.
    pub fn new(invariant_factors: Vec<BigUint>) -> Result<Self> {
        let group = Self { invariant_factors };
        group.validate()?;
        Ok(group)
    }

    /// Normalizes an arbitrary direct sum of cyclic groups `⊕ ℤ_{n_i}`.
    /// Zero orders are rejected since they would give an infinite group.
    pub fn from_cyclic_orders<I: IntoIterator<Item = u64>>(orders: I) -> Result<Self> {
        let orders: Vec<u64> = orders.into_iter().collect();
        let n = orders.len();
        let diag = IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(orders[i]) } else { BigInt::zero() });
        group_from_presentation(&diag)
    }

    pub fn validate(&self) -> Result<()> {
        let two = BigUint::from(2u32);
        if let Some(f) = self.invariant_factors.iter().find(|f| **f < two) {
            return Err(Error::InvalidGroup(format!("invariant factor {f} is smaller than 2")));
        }
        if let Some(w) = self.invariant_factors.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidGroup(format!("invariant factor {} does not divide {}", w[0], w[1])));
        }
        Ok(())
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    pub fn order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    pub fn order_factorization(&self) -> Result<Factorization> {
        factorize(&self.order())
    }

    pub fn primary_part(&self, p: u64) -> Result<PrimaryPart> {
        ensure_prime(p)?;
        let exponents = self.invariant_factors.iter().map(|f| valuation(f, p)).filter(|&e| e > 0).collect();
        Ok(PrimaryPart { prime: p, exponents })
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("0");
        }
        for (i, n) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// `⊕ ℤ_{p^{e_i}}` with `1 ≤ e₁ ≤ e₂ ≤ …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimaryPart {
    pub prime: u64,
    pub exponents: Vec<u32>,
}

impl PrimaryPart {
    pub fn is_zero(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponents.len() <= 1
    }

    /// Total exponent, i.e. `log_p` of the order.
    pub fn length(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.length())
    }

    pub fn to_group(&self) -> AbelianGroup {
        let p = BigUint::from(self.prime);
        AbelianGroup { invariant_factors: self.exponents.iter().map(|&e| p.pow(e)).collect() }
    }
}

/// The group presented by a square integer matrix, `ℤⁿ / M·ℤⁿ`.
pub fn group_from_presentation(m: &IntMatrix) -> Result<AbelianGroup> {
    m.ensure_square()?;
    let diagonal = smith_normal_form(m).diagonal();
    if diagonal.iter().any(Zero::is_zero) {
        return Err(Error::InfiniteHomology);
    }
    let invariant_factors = diagonal
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_biguint().expect("smith diagonal is non-negative"))
        .collect();
    Ok(AbelianGroup { invariant_factors })
}
