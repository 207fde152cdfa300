//! Torsion linking forms on finite abelian groups.
//!
//! A form is stored as its Gram matrix on the invariant-factor generators of
//! the group, with every entry an exact fraction reduced into `[0, 1)`.
//!
//! For a Seifert matrix `A`, the branched double cover has homology presented
//! by `M = A + Aᵀ`, and its linking form is `λ(x, y) = xᵀ M⁻¹ y mod 1`. The
//! global sign of this presentation is a convention; nothing downstream
//! depends on it since chirality compares `λ` against `-λ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{group_from_presentation, AbelianGroup};
use crate::linalg::{rational_inverse, smith_normal_form, IntMatrix, RatMatrix};
use crate::number_theory::{factorize, is_unit_square_mod_prime_power, valuation};

/// Enumeration bound used by the brute-force isometry oracle.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

/// Reduces a rational into `[0, 1)`.
pub fn mod_one(q: &BigRational) -> BigRational {
    q - q.floor()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionLinkingForm {
    group: AbelianGroup,
    gram: RatMatrix,
}

impl TorsionLinkingForm {
    /// Builds a form from a Gram matrix on the group's generators. Entries are
    /// reduced mod 1; symmetry and order compatibility are checked.
    pub fn new(group: AbelianGroup, gram: RatMatrix) -> Result<Self> {
        let n = group.invariant_factors().len();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "gram is {}x{} but the group has {n} generators",
                gram.rows(),
                gram.cols()
            )));
        }
        let gram = gram.map(mod_one);
        for i in 0..n {
            let order = BigRational::from_integer(group.invariant_factors()[i].clone().into());
            for j in 0..n {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(Error::InvalidForm(format!("gram is not symmetric at ({i}, {j})")));
                }
                if !(&order * &gram[(i, j)]).is_integer() {
                    return Err(Error::InvalidForm(format!(
                        "gram entry ({i}, {j}) = {} is incompatible with generator order {order}",
                        gram[(i, j)]
                    )));
                }
            }
        }
        Ok(Self { group, gram })
    }

    pub fn trivial() -> Self {
        Self { group: AbelianGroup::trivial(), gram: RatMatrix::zeros(0, 0) }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// `λ(a, b)` for elements given by coefficient vectors in the generators.
    pub fn value(&self, a: &[BigInt], b: &[BigInt]) -> BigRational {
        assert_eq!(a.len(), self.rank());
        assert_eq!(b.len(), self.rank());
        let mut acc = BigRational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                acc += &self.gram[(i, j)] * BigRational::from_integer(ai * bj);
            }
        }
        mod_one(&acc)
    }

    /// `(-λ)(a, b) = -λ(a, b)`.
    pub fn negate(&self) -> Self {
        Self { group: self.group.clone(), gram: self.gram.map(|q| mod_one(&-q)) }
    }

    /// Whether the adjoint `H → Hom(H, ℚ/ℤ)` is an isomorphism.
    ///
    /// In coordinates the adjoint sends `a` to `(λ(a, g_j))_j`, and
    /// `λ(a, g_j) · f_j` is an integer, so it is the integer map
    /// `⊕ ℤ_{f_i} → ⊕ ℤ_{f_j}` with matrix `B_{ji} = f_j · gram_{ij}`.
    /// Both sides have the same order, so it is an isomorphism iff surjective,
    /// i.e. iff `[B | diag(f)]` presents the trivial group.
    pub fn is_nonsingular(&self) -> bool {
        let n = self.rank();
        let f: Vec<BigInt> = self.group.invariant_factors().iter().map(|x| BigInt::from(x.clone())).collect();
        let block = IntMatrix::from_fn(n, 2 * n, |j, c| {
            if c < n {
                let v = &self.gram[(c, j)] * BigRational::from_integer(f[j].clone());
                v.to_integer()
            } else if c - n == j {
                f[j].clone()
            } else {
                BigInt::zero()
            }
        });
        smith_normal_form(&block).diagonal().iter().all(One::is_one)
    }

    /// Restriction to the `p`-primary part. A generator of order `pᵉ·m` with
    /// `gcd(m, p) = 1` contributes the element `m·g` of order `pᵉ`.
    pub fn restrict_to_primary(&self, p: u64) -> Result<Self> {
        let part = self.group.primary_part(p)?;
        let kept: Vec<(usize, BigInt)> = self
            .group
            .invariant_factors()
            .iter()
            .enumerate()
            .filter_map(|(i, f)| {
                let e = valuation(f, p);
                (e > 0).then(|| (i, BigInt::from(f / BigUint::from(p).pow(e))))
            })
            .collect();
        let gram = RatMatrix::from_fn(kept.len(), kept.len(), |a, b| {
            let (i, mi) = &kept[a];
            let (j, mj) = &kept[b];
            mod_one(&(&self.gram[(*i, *j)] * BigRational::from_integer(mi * mj)))
        });
        Ok(Self { group: part.to_group(), gram })
    }

    /// Reads off `(p, n, k)` with `λ(1, 1) = k/pⁿ` on a cyclic `p`-primary group.
    pub fn cyclic_parameter(&self) -> Result<CyclicLinkingForm> {
        let [order] = self.group.invariant_factors() else {
            return Err(Error::NotCyclicPrimary(self.group.to_string()));
        };
        let fac = factorize(order)?;
        let &[(p, n)] = fac.pairs() else {
            return Err(Error::NotCyclicPrimary(self.group.to_string()));
        };
        let k = (&self.gram[(0, 0)] * BigRational::from_integer(order.clone().into())).to_integer();
        CyclicLinkingForm::new(p, n, k)
    }
}

impl fmt::Display for TorsionLinkingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on {}: {}", self.group, self.gram)
    }
}

/// The form `λ(a, b) = k·a·b / pⁿ` on `ℤ_{pⁿ}`, `k` a unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicLinkingForm {
    prime: u64,
    exponent: u32,
    unit: BigUint,
}

impl CyclicLinkingForm {
    /// `k` is reduced into `[0, pⁿ)`. Fails with [`Error::SingularForm`] when
    /// `p | k`, since then `p^{n-1}·ℤ_{pⁿ}` lies in the kernel of the adjoint.
    pub fn new(prime: u64, exponent: u32, k: impl Into<BigInt>) -> Result<Self> {
        crate::number_theory::ensure_prime(prime)?;
        if exponent == 0 {
            return Err(Error::NotCyclicPrimary("the trivial group".into()));
        }
        let modulus = BigInt::from(prime).pow(exponent);
        let k = k.into().mod_floor(&modulus);
        if k.is_multiple_of(&BigInt::from(prime)) {
            return Err(Error::SingularForm(prime));
        }
        Ok(Self { prime, exponent, unit: k.to_biguint().expect("reduced") })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn unit(&self) -> &BigUint {
        &self.unit
    }

    pub fn modulus(&self) -> BigUint {
        BigUint::from(self.prime).pow(self.exponent)
    }

    pub fn negate(&self) -> Self {
        let unit = self.modulus() - &self.unit;
        Self { unit, ..self.clone() }
    }

    pub fn to_form(&self) -> TorsionLinkingForm {
        let m = self.modulus();
        let gram =
            RatMatrix::from_vec(1, 1, vec![BigRational::new(self.unit.clone().into(), m.clone().into())]).expect("1x1");
        TorsionLinkingForm { group: AbelianGroup::new(vec![m]).expect("prime power"), gram }
    }
}

impl fmt::Display for CyclicLinkingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}^{}", self.unit, self.prime, self.exponent)
    }
}

/// Two cyclic forms on `ℤ_{pⁿ}` are isometric iff `k' ≡ k·r²` for a unit `r`,
/// i.e. iff `k'/k` is a square unit. Forms on different groups never are.
pub fn cyclic_isometric(f: &CyclicLinkingForm, g: &CyclicLinkingForm) -> bool {
    if (f.prime, f.exponent) != (g.prime, g.exponent) {
        return false;
    }
    let m = BigInt::from(f.modulus());
    let k = BigInt::from(f.unit.clone());
    let inv = k.extended_gcd(&m).x.mod_floor(&m);
    let ratio = (BigInt::from(g.unit.clone()) * inv).mod_floor(&m);
    is_unit_square_mod_prime_power(&ratio, f.prime, f.exponent).expect("ratio of units is a unit")
}

/// Exhaustively searches for a unit `r` mod `pⁿ` with `-k ≡ k·r²`, i.e. an
/// isometry `λ ≅ -λ` given by multiplication by `r`. Returns the smallest
/// such `r`.
pub fn find_self_negation_isometry(f: &CyclicLinkingForm, bound: u64) -> Result<Option<u64>> {
    let modulus = f.modulus();
    let q = match modulus.to_u64() {
        Some(q) if q <= bound && q <= u32::MAX as u64 => q,
        _ => return Err(Error::OracleBoundExceeded { modulus, bound }),
    };
    let p = f.prime;
    let k = f.unit.to_u64().expect("unit < modulus");
    let neg_k = (q - k) % q;
    Ok((1..q).filter(|r| r % p != 0).find(|&r| k * (r * r % q) % q == neg_k))
}

pub fn brute_force_self_negation_isometric(f: &CyclicLinkingForm, bound: u64) -> Result<bool> {
    find_self_negation_isometry(f, bound).map(|r| r.is_some())
}

/// Linking form of a rational homology sphere presented by a symmetric
/// nonsingular integer matrix `M`, on the invariant-factor generators coming
/// from the Smith normal form `U·M·V = D`.
///
/// `H = ℤⁿ / M·ℤⁿ`, and `x ↦ U·x` identifies it with `ℤⁿ / D·ℤⁿ`, so the
/// generator `e_i` of the latter pulls back to column `i` of `U⁻¹`.
pub fn linking_form_from_presentation(m: &IntMatrix) -> Result<TorsionLinkingForm> {
    m.ensure_square()?;
    if m.transpose() != *m {
        return Err(Error::DimensionMismatch("presentation matrix must be symmetric".into()));
    }
    let group = group_from_presentation(m).map_err(|e| match e {
        Error::InfiniteHomology => Error::SingularPresentation,
        e => e,
    })?;
    let snf = smith_normal_form(m);
    let m_inv = rational_inverse(m)?;
    let u_inv = rational_inverse(&snf.u)?;
    let full = u_inv.transpose().mul(&m_inv)?.mul(&u_inv)?;

    let survivors: Vec<usize> =
        snf.diagonal().iter().enumerate().filter(|(_, d)| !d.is_one()).map(|(i, _)| i).collect();
    let gram = RatMatrix::from_fn(survivors.len(), survivors.len(), |a, b| full[(survivors[a], survivors[b])].clone());
    TorsionLinkingForm::new(group, gram)
}

/// Linking form of the 2-fold branched cover of the knot with Seifert matrix `A`.
pub fn linking_form_from_seifert(a: &IntMatrix) -> Result<TorsionLinkingForm> {
    linking_form_from_presentation(&a.symmetrized()?)
}
