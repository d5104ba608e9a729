//! Exact dense linear algebra and strict feasibility over the rationals.

mod feasibility;
mod matrix;

pub use feasibility::strict_positive_functional;
pub use matrix::{solve_in_span, Matrix, Rref};
