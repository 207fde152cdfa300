//! Inputs shared by the benchmarks.

use chiral_core::{BigInt, IntMatrix};

/// Seifert matrix of the `(2, n)` torus knot, `n` odd.
pub fn torus_2n(n: usize) -> IntMatrix {
    let k = n - 1;
    IntMatrix::from_fn(k, k, |i, j| {
        if i == j {
            BigInt::from(-1)
        } else if j == i + 1 {
            BigInt::from(1)
        } else {
            BigInt::from(0)
        }
    })
}

/// Deterministic dense test matrix with entries in `[-9, 9]`.
pub fn pseudo_random(n: usize, seed: u64) -> IntMatrix {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    IntMatrix::from_fn(n, n, |_, _| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        BigInt::from(((state >> 33) % 19) as i64 - 9)
    })
}
