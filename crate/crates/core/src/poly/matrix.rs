//! Square matrices with polynomial entries, for symbolic characteristic
//! polynomials and trace invariants.

use crate::error::{Error, Result};
use crate::kernel::Matrix;
use crate::poly::monomial::VariableLayout;
use crate::poly::polynomial::Polynomial;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    size: usize,
    layout: VariableLayout,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(size: usize, layout: VariableLayout) -> Self {
        PolyMatrix {
            size,
            layout,
            entries: vec![Polynomial::zero(layout); size * size],
        }
    }

    pub fn from_entries(size: usize, entries: Vec<Polynomial<F>>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch {
                expected: size * size,
                found: entries.len(),
            });
        }
        let Some(first) = entries.first() else {
            return Err(Error::InvalidInput("empty polynomial matrix".into()));
        };
        let layout = *first.layout();
        if entries.iter().any(|e| e.layout() != &layout) {
            return Err(Error::LayoutMismatch("matrix entries use different layouts".into()));
        }
        Ok(PolyMatrix { size, layout, entries })
    }

    /// Lifts a square scalar matrix to constant polynomials in `layout`.
    pub fn from_scalar(m: &Matrix<F>, layout: VariableLayout) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Ok(PolyMatrix {
            size: m.rows(),
            layout,
            entries: m.entries().iter().map(|c| Polynomial::constant(layout, c.clone())).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn layout(&self) -> VariableLayout {
        self.layout
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        assert_eq!(p.layout(), &self.layout, "entry outside the matrix layout");
        self.entries[i * self.size + j] = p;
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::DimensionMismatch {
                expected: self.size,
                found: other.size,
            });
        }
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch("matrix layouts differ".into()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.size;
        let mut out = Self::zeros(n, self.layout);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Polynomial::zero(self.layout);
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PolyMatrix {
            size: self.size,
            layout: self.layout,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(PolyMatrix {
            size: self.size,
            layout: self.layout,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        PolyMatrix {
            size: self.size,
            layout: self.layout,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn trace(&self) -> Polynomial<F> {
        (0..self.size).fold(Polynomial::zero(self.layout), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// Determinant of the submatrix on `rows × cols`, by expansion over
    /// column subsets (no division, so it works over the polynomial ring).
    fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        let k = rows.len();
        assert!(k <= 20, "minor too large for subset expansion");
        // det[mask] = determinant of rows[0..popcount(mask)] × cols in mask
        let mut det = vec![Polynomial::zero(self.layout); 1 << k];
        det[0] = Polynomial::one(self.layout);
        for mask in 0usize..(1 << k) {
            if det[mask].is_zero() {
                continue;
            }
            let r = mask.count_ones() as usize;
            if r == k {
                continue;
            }
            for c in 0..k {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let entry = self.get(rows[r], cols[c]);
                if entry.is_zero() {
                    continue;
                }
                let above = (mask >> (c + 1)).count_ones();
                let term = &det[mask] * entry;
                let term = if above % 2 == 1 { -&term } else { term };
                det[mask | (1 << c)] = &det[mask | (1 << c)] + &term;
            }
        }
        det.pop().unwrap()
    }

    pub fn determinant(&self) -> Polynomial<F> {
        let all: Vec<usize> = (0..self.size).collect();
        self.minor(&all, &all)
    }

    /// `E_1, …, E_n` where `E_k` is the sum of all principal `k×k` minors;
    /// `det(tI − A) = Σ_k (−1)^k E_k t^{n−k}`.
    pub fn principal_minor_sums(&self) -> Vec<Polynomial<F>> {
        let n = self.size;
        let mut sums = vec![Polynomial::zero(self.layout); n];
        for subset in 1usize..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| subset & (1 << i) != 0).collect();
            let k = idx.len();
            sums[k - 1] = &sums[k - 1] + &self.minor(&idx, &idx);
        }
        sums
    }

    /// Nilpotent over every specialization of the variables: all
    /// non-leading characteristic coefficients vanish identically.
    pub fn is_nilpotent(&self) -> bool {
        self.principal_minor_sums().iter().all(Polynomial::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_in;
    use crate::scalar::{int, Rational};
    use crate::{Poly, QMatrix};
    use proptest::prelude::*;

    fn lay() -> VariableLayout {
        VariableLayout::single(2)
    }

    fn pm(rows: &[&[&str]]) -> PolyMatrix<Rational> {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|t| parse_poly_in(t, lay()).unwrap()))
            .collect();
        PolyMatrix::from_entries(n, entries).unwrap()
    }

    #[test]
    fn symbolic_determinant() {
        let m = pm(&[&["x1", "x2"], &["x2", "x1"]]);
        assert_eq!(m.determinant(), parse_poly_in("x1^2 - x2^2", lay()).unwrap());
    }

    #[test]
    fn characteristic_coefficients() {
        // diag(1, 2, 3): E1 = 6, E2 = 11, E3 = 6
        let m = PolyMatrix::from_scalar(&QMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]), lay()).unwrap();
        let sums: Vec<Rational> = m.principal_minor_sums().iter().map(Poly::constant_term).collect();
        assert_eq!(sums, vec![int(6), int(11), int(6)]);
    }

    #[test]
    fn nilpotency_examples() {
        let diag = PolyMatrix::from_scalar(&QMatrix::from_ints(&[&[1, 0], &[0, -1]]), lay()).unwrap();
        assert!(!diag.is_nilpotent());
        let upper = pm(&[&["0", "x1", "x2"], &["0", "0", "x1*x2"], &["0", "0", "0"]]);
        assert!(upper.is_nilpotent());
    }

    fn matrix_power_is_zero(m: &QMatrix) -> bool {
        let mut p = QMatrix::identity(m.rows());
        for _ in 0..m.rows() {
            p = p.mul(m).unwrap();
        }
        p.is_zero()
    }

    proptest! {
        #[test]
        fn nilpotency_matches_matrix_power(
            n in 1usize..4,
            raw in proptest::collection::vec(-2i64..=2, 9),
            strict_upper in proptest::bool::ANY,
        ) {
            let mut m = QMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    if !strict_upper || j > i {
                        m[(i, j)] = int(raw[i * 3 + j]);
                    }
                }
            }
            let symbolic = PolyMatrix::from_scalar(&m, lay()).unwrap();
            prop_assert_eq!(symbolic.is_nilpotent(), matrix_power_is_zero(&m));
        }
    }
}
