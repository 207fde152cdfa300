//! Test-only generators and brute-force oracles. Nothing here calls into the
//! algorithms it is used to check, except to build the object under test.
#![allow(dead_code)]

use chiral_core::{BigInt, BigRational, IntMatrix, TorsionLinkingForm};
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub fn int_matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_vec(rows, cols, entries.iter().map(|&e| BigInt::from(e)).collect()).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, max: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-max..=max)))
}

/// A random Seifert matrix of genus `g`: symmetric noise plus the standard
/// symplectic part, so `A - Aᵀ` is unimodular and `det(A + Aᵀ)` is odd.
pub fn random_seifert<R: Rng>(rng: &mut R, genus: usize, max: i64) -> IntMatrix {
    let n = 2 * genus;
    let mut sym = vec![0i64; n * n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-max..=max);
            sym[i * n + j] = v;
            sym[j * n + i] = v;
        }
    }
    IntMatrix::from_fn(n, n, |i, j| {
        let symplectic = if i % 2 == 0 && j == i + 1 { 1 } else { 0 };
        BigInt::from(sym[i * n + j] + symplectic)
    })
}

/// Random unimodular matrix built from elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    if n < 2 {
        return int_matrix(n, n, &m);
    }
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let q = rng.gen_range(-2i64..=2);
        for j in 0..n {
            m[a * n + j] += q * m[b * n + j];
        }
        if rng.gen_bool(0.3) {
            for j in 0..n {
                m.swap(a * n + j, b * n + j);
            }
        }
    }
    int_matrix(n, n, &m)
}

/// Orders of the generators of a form's group, as machine integers.
pub fn orders(form: &TorsionLinkingForm) -> Vec<u64> {
    form.group().invariant_factors().iter().map(|f| f.to_u64().unwrap()).collect()
}

/// Every element of `⊕ ℤ_{f_i}` as a coefficient vector.
pub fn elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &f in orders {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..f).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `pᵏ·x = 0` for `k` large enough; `k = ∑ v_p(f_i)` always suffices.
pub fn in_primary_part(x: &[u64], orders: &[u64], p: u64) -> bool {
    let mut pk = 1u64;
    for &f in orders {
        let mut f = f;
        while f % p == 0 {
            pk *= p;
            f /= p;
        }
    }
    x.iter().zip(orders).all(|(&c, &f)| (c as u128 * pk as u128).is_multiple_of(f as u128))
}

/// Element order by repeated addition.
pub fn element_order(x: &[u64], orders: &[u64]) -> u64 {
    let mut m = 1u64;
    loop {
        if x.iter().zip(orders).all(|(&c, &f)| (c * m).is_multiple_of(f)) {
            return m;
        }
        m += 1;
    }
}

/// `λ(x, y)` straight from the Gram matrix by bilinear expansion.
pub fn pairing(form: &TorsionLinkingForm, x: &[u64], y: &[u64]) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            acc += &form.gram()[(i, j)] * BigRational::from_integer(BigInt::from(a * b));
        }
    }
    &acc - acc.floor()
}

/// The adjoint has trivial kernel: every nonzero element pairs nontrivially
/// with some generator.
pub fn adjoint_injective_brute_force(form: &TorsionLinkingForm) -> bool {
    let orders = orders(form);
    let n = orders.len();
    let generators: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    elements(&orders)
        .iter()
        .filter(|x| x.iter().any(|&c| c != 0))
        .all(|x| generators.iter().any(|g| !pairing(form, x, g).is_zero()))
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize + 1];
    let mut out = Vec::new();
    for i in 2..=n as usize {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Whether some unit `r` mod `m` has `r² ≡ a`.
pub fn is_unit_square_brute_force(a: u64, m: u64, p: u64) -> bool {
    (1..m).filter(|r| r % p != 0).any(|r| r * r % m == a % m)
}

/// The Gram matrix scaled to integers: `λ(e_i, e_j) = c_ij / e` with `e` the
/// exponent of the group. Lets brute-force pairings run in machine integers.
pub fn integer_gram(form: &TorsionLinkingForm) -> (Vec<Vec<u64>>, u64) {
    let e = orders(form).last().copied().unwrap_or(1);
    let n = form.rank();
    let scaled = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &form.gram()[(i, j)] * BigRational::from_integer(BigInt::from(e));
                    assert!(v.is_integer(), "denominator does not divide the exponent");
                    v.to_integer().to_u64().unwrap()
                })
                .collect()
        })
        .collect();
    (scaled, e)
}

pub fn pairing_is_zero(gram: &[Vec<u64>], e: u64, x: &[u64], y: &[u64]) -> bool {
    let mut acc: u128 = 0;
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            acc = (acc + a as u128 * b as u128 * gram[i][j] as u128) % e as u128;
        }
    }
    acc == 0
}
