//! Smith normal form over the integers.
//!
//! For any integer matrix `A` we compute unimodular `U`, `V` with `U·A·V = D`,
//! where `D` is diagonal, its entries are non-negative and `d_i | d_{i+1}`.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value in the
//! remaining submatrix, ties broken by lowest `(row, col)`. The output is
//! therefore a deterministic function of the input.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Row transform, `rows × rows`.
    pub u: IntMatrix,
    /// Diagonal form, `rows × cols`.
    pub d: IntMatrix,
    /// Column transform, `cols × cols`.
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let e = &self.a[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if self.a[b].magnitude() <= e.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let s = &m[(src, j)] * q;
                m[(dst, j)] -= s;
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for i in 0..m.rows() {
                let s = &m[(i, src)] * q;
                m[(i, dst)] -= s;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for m in [&mut self.a, &mut self.u] {
            for j in 0..m.cols() {
                let e = -std::mem::take(&mut m[(r, j)]);
                m[(r, j)] = e;
            }
        }
    }

    /// Clears row and column `t` except the pivot. Returns false if some
    /// remainder was left behind, i.e. a smaller pivot now exists.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = &self.a[(i, t)] / &self.a[(t, t)];
            self.row_axpy(i, t, &q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = &self.a[(t, j)] / &self.a[(t, t)];
            self.col_axpy(j, t, &q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    /// First row below `t` holding an entry not divisible by the pivot.
    fn indivisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows()).find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(p)))
    }

    fn run(&mut self) {
        let steps = self.a.rows().min(self.a.cols());
        for t in 0..steps {
            loop {
                let Some((pi, pj)) = self.smallest_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if !self.clear_cross(t) {
                    continue;
                }
                match self.indivisible_row(t) {
                    // Pull the offending row into row t; the next pass leaves a
                    // remainder strictly smaller than the current pivot.
                    Some(i) => self.row_axpy(t, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.a[(t, t)].sign() == Sign::Minus {
                self.negate_row(t);
            }
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut r = Reducer { a: a.clone(), u: IntMatrix::identity(a.rows()), v: IntMatrix::identity(a.cols()) };
    r.run();
    SmithDecomposition { u: r.u, d: r.a, v: r.v }
}
