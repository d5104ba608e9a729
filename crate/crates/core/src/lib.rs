//! Exact computational invariant theory: classical polarization of
//! invariants, graded comparison of polarization algebras with full
//! invariant algebras, and Hilbert–Mumford nullcone tests.
//!
//! Linear algebra ([`kernel::Matrix`]) and polynomials
//! ([`poly::Polynomial`]) are generic over an exact [`Field`]; the rest of
//! the crate works over arbitrary-precision rationals through the aliases
//! below.

pub mod error;
pub mod groups;
pub mod kernel;
pub mod liealg;
pub mod nullcone;
pub mod polarization;
pub mod poly;
pub mod random;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{int, parse_rational, rat, Field, Rational};

/// Dense matrix over [`Rational`].
pub type QMatrix = kernel::Matrix<Rational>;
/// Vector over [`Rational`].
pub type QVector = Vec<Rational>;
/// Polynomial with [`Rational`] coefficients.
pub type Poly = poly::Polynomial<Rational>;

/// Resource caps; exceeding one is an error naming the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    pub group_order: usize,
    pub span_products: usize,
    pub monomials: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: groups::DEFAULT_GROUP_ORDER_CAP,
            span_products: polarization::DEFAULT_SPAN_PRODUCT_CAP,
            monomials: groups::DEFAULT_MONOMIAL_CAP,
        }
    }
}
