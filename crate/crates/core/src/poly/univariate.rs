//! Dense univariate polynomials, used for the bivariate gcd.

use crate::scalar::Field;

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly<F>(Vec<F>);

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            Some(lc) => {
                let inv = lc.inverse();
                UniPoly(self.0.iter().map(|c| c.clone() * inv.clone()).collect())
            }
            None => self.clone(),
        }
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.0[d].inverse();
        let mut r = self.0.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let q = r[top].clone() * lc_inv.clone();
            if !q.is_zero() {
                let shift = top - d;
                for (i, c) in divisor.0.iter().enumerate() {
                    r[shift + i] = r[shift + i].clone() - q.clone() * c.clone();
                }
            }
            r.pop();
            while r.last().is_some_and(F::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }
}
