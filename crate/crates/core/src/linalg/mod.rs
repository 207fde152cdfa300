//! Exact integer and rational matrix algebra.

mod exact;
mod matrix;
mod smith;

pub use exact::{determinant, rational_inverse};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};
