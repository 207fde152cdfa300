use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// Exact signed determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    a.ensure_square()?;
    let n = a.rows();
    let mut m = a.clone();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                // Exact by Sylvester's identity.
                m[(i, j)] = num / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    Ok(if sign_flip { -det } else { det })
}

/// Exact inverse over the rationals by Gauss-Jordan elimination.
pub fn rational_inverse(a: &IntMatrix) -> Result<RatMatrix> {
    a.ensure_square()?;
    let n = a.rows();
    let mut m = a.to_rational();
    let mut inv = RatMatrix::identity(n);
    for k in 0..n {
        let p = (k..n).find(|&i| !m[(i, k)].is_zero()).ok_or(Error::SingularPresentation)?;
        m.swap_rows(k, p);
        inv.swap_rows(k, p);
        let pivot = m[(k, k)].clone();
        for j in 0..n {
            m[(k, j)] = &m[(k, j)] / &pivot;
            inv[(k, j)] = &inv[(k, j)] / &pivot;
        }
        for i in 0..n {
            if i == k || m[(i, k)].is_zero() {
                continue;
            }
            let f: BigRational = m[(i, k)].clone();
            for j in 0..n {
                let dm = &f * &m[(k, j)];
                m[(i, j)] -= dm;
                let di = &f * &inv[(k, j)];
                inv[(i, j)] -= di;
            }
        }
    }
    Ok(inv)
}
