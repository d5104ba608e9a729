//! Exact multivariate polynomials over a field, graded by blocks of variables.

mod bivariate;
mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod span;
mod univariate;

pub use bivariate::homogeneous_bivariate_gcd;
pub use matrix::PolyMatrix;
pub use monomial::{compositions, count_monomials, monomials_of_multidegree, Monomial, MultiDegree, VariableLayout};
pub use parse::{infer_layout, parse_poly, parse_poly_in};
pub use polynomial::Polynomial;
pub use span::{Reduction, SparseEchelon, SparseVec};
