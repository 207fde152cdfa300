//! Primality, factorization and quadratic residues.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime factorization `∏ pʳ`, primes strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn multiplicity(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, r)| r)
    }

    pub fn product(&self) -> BigUint {
        self.0.iter().map(|&(p, r)| BigUint::from(p).pow(r)).product()
    }

    /// Merges two factorizations multiplicatively.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out: Vec<(u64, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(&&(p, r)), Some(&&(q, s))) if p == q => {
                    a.next();
                    b.next();
                    (p, r + s)
                }
                (Some(&&x), Some(&&y)) => {
                    if x.0 < y.0 {
                        a.next();
                        x
                    } else {
                        b.next();
                        y
                    }
                }
                (Some(&&x), None) => {
                    a.next();
                    x
                }
                (None, Some(&&y)) => {
                    b.next();
                    y
                }
                (None, None) => break,
            };
            out.push(next);
        }
        Self(out)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, r)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if r == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{r}")?;
            }
        }
        Ok(())
    }
}

/// Integer factorization backend. Knot determinants are small, so the default
/// is trial division; a faster method can be slotted in here.
pub trait Factorizer: Sync {
    fn factorize(&self, n: &BigUint) -> Result<Factorization>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TrialDivision;

impl Factorizer for TrialDivision {
    fn factorize(&self, n: &BigUint) -> Result<Factorization> {
        if n.is_zero() {
            return Err(Error::FactorizeZero);
        }
        let mut rest = n.clone();
        let mut out = Vec::new();
        let mut d: u64 = 2;
        while BigUint::from(d) * d <= rest {
            let (mut q, mut r) = rest.div_rem(&BigUint::from(d));
            if r.is_zero() {
                let mut mult = 0;
                while r.is_zero() {
                    rest = q;
                    mult += 1;
                    (q, r) = rest.div_rem(&BigUint::from(d));
                }
                out.push((d, mult));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if !rest.is_one() {
            let p = rest.to_u64().ok_or_else(|| Error::FactorTooLarge(rest.clone()))?;
            out.push((p, 1));
        }
        Ok(Factorization(out))
    }
}

pub fn factorize(n: &BigUint) -> Result<Factorization> {
    TrialDivision.factorize(n)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn ensure_odd_prime(p: u64) -> Result<()> {
    if p != 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Largest `e` with `pᵉ | n`. `n` must be nonzero.
pub fn valuation(n: &BigUint, p: u64) -> u32 {
    debug_assert!(!n.is_zero() && p >= 2);
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        n = q;
        e += 1;
    }
}

/// Residue class of an odd prime mod 4.
pub fn mod4_class(p: u64) -> Result<u8> {
    ensure_odd_prime(p)?;
    Ok((p % 4) as u8)
}

/// Euler's criterion: `a` is a square mod `p` iff `a^((p-1)/2) ≡ 1 (mod p)`.
pub fn is_quadratic_residue(a: &BigInt, p: u64) -> Result<bool> {
    ensure_odd_prime(p)?;
    let modulus = BigInt::from(p);
    let a = a.mod_floor(&modulus);
    if a.is_zero() {
        return Err(Error::NotAUnit { value: a, prime: p });
    }
    Ok(a.modpow(&BigInt::from((p - 1) / 2), &modulus).is_one())
}

/// Whether the unit `u` is a square in `(ℤ/pⁿ)ˣ`.
///
/// For odd `p` a unit lifts from a square mod `p` by Hensel's lemma, so
/// Euler's criterion mod `p` decides it. For `p = 2` the squares are the
/// units `≡ 1 (mod 8)` once `n ≥ 3`.
pub fn is_unit_square_mod_prime_power(u: &BigInt, p: u64, n: u32) -> Result<bool> {
    ensure_prime(p)?;
    if u.is_multiple_of(&BigInt::from(p)) {
        return Err(Error::NotAUnit { value: u.clone(), prime: p });
    }
    if p != 2 {
        return is_quadratic_residue(u, p);
    }
    let r8 = u.mod_floor(&BigInt::from(8));
    Ok(match n {
        0 | 1 => true,
        2 => r8 == BigInt::from(1) || r8 == BigInt::from(5),
        _ => r8 == BigInt::from(1),
    })
}
