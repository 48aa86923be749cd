//! Exact scalars, dense matrices, polynomials and Plücker minors.

mod matrix;
mod minors;
mod poly;
mod ratfunc;
mod scalar;

pub use matrix::{canonical_reduce, in_span, is_canonical, is_invertible, rank, same_flag, FlagMatrix, Matrix};
pub use minors::{all_minor_vectors, leading_direction, minor_vector, normalize, projectively_equal, row_subsets};
pub use poly::Poly;
pub use ratfunc::{poly_gcd, RatFunc};
pub use scalar::{parse_q, q, q_to_f64, qf, Field, Fp, Ring, Q};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is identically zero")]
    ZeroVector,
}
