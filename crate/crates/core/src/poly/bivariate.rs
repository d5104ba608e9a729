//! Gcd of homogeneous binary forms.

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::Polynomial;
use crate::poly::univariate::UniPoly;
use crate::scalar::Field;

/// Monic gcd of homogeneous polynomials in exactly two variables `x > y`.
///
/// The largest common power of `y` is split off first, the rest is
/// dehomogenized at `y = 1`, reduced by the univariate Euclidean algorithm
/// and rehomogenized. Zero inputs are ignored; all-zero input is an error.
///
/// The gcd of forms with rational coefficients is the same over any
/// extension field, so the result is valid over the algebraic closure.
pub fn homogeneous_bivariate_gcd<F: Field>(forms: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let nonzero: Vec<&Polynomial<F>> = forms.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(Error::InvalidInput("gcd of zero forms".into()));
    };
    let layout = *first.layout();
    if layout.num_vars() != 2 {
        return Err(Error::InvalidInput(format!(
            "binary forms need exactly two variables, layout has {}",
            layout.num_vars()
        )));
    }
    let mut common_y = u32::MAX;
    let mut g = UniPoly::new(Vec::new());
    for p in &nonzero {
        if p.layout() != &layout {
            return Err(Error::LayoutMismatch("binary forms in different layouts".into()));
        }
        if !p.is_homogeneous() {
            return Err(Error::InvalidInput(format!("{p} is not homogeneous")));
        }
        let min_y = p.terms().keys().map(|m| m.exponents()[1]).min().unwrap();
        common_y = common_y.min(min_y);
        // p / y^min_y at y = 1, indexed by the power of x
        let deg = p.degree().unwrap() as usize;
        let mut coeffs = vec![F::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[0] as usize] = c.clone();
        }
        g = g.gcd(&UniPoly::new(coeffs));
    }
    let k = g.degree().expect("gcd of nonzero polynomials") as u32;
    let terms = g.coeffs().iter().enumerate().map(|(i, c)| {
        let i = i as u32;
        (Monomial::from_exponents(vec![i, k - i + common_y]), c.clone())
    });
    Ok(Polynomial::from_terms(layout, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial::VariableLayout;
    use crate::poly::parse::parse_poly_in;
    use crate::Poly;
    use proptest::prelude::*;

    fn p(t: &str) -> Poly {
        parse_poly_in(t, VariableLayout::single(2)).unwrap()
    }

    fn gcd(ts: &[&str]) -> Poly {
        homogeneous_bivariate_gcd(&ts.iter().map(|t| p(t)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(gcd(&["x1^2*x2", "x1*x2^2"]), p("x1*x2"));
        assert_eq!(gcd(&["x1^2 - x2^2", "x1^2 - 2*x1*x2 + x2^2"]), p("x1 - x2"));
        assert_eq!(gcd(&["x1^3", "x2^3"]), p("1"));
    }

    #[test]
    fn root_at_infinity() {
        assert_eq!(gcd(&["x2^3", "x1*x2^2"]), p("x2^2"));
        assert_eq!(gcd(&["3*x2^2*x1 + x2^3", "x2^2"]), p("x2^2"));
    }

    #[test]
    fn zero_inputs() {
        assert_eq!(gcd(&["0", "2*x1^2 + 2*x1*x2"]), p("x1^2 + x1*x2"));
        assert!(homogeneous_bivariate_gcd(&[p("0")]).is_err());
        assert!(homogeneous_bivariate_gcd(&[p("x1 + x2^2")]).is_err());
    }

    fn linear() -> impl Strategy<Value = Poly> {
        (-3i64..=3, -3i64..=3)
            .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
            .prop_map(|(a, b)| p(&format!("{a}*x1 + {b}*x2")))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_is_maximal(
            common in proptest::collection::vec(linear(), 0..3),
            a in proptest::collection::vec(linear(), 0..3),
            b in proptest::collection::vec(linear(), 0..3),
        ) {
            let prod = |ls: &[Poly]| ls.iter().fold(p("1"), |acc, l| &acc * l);
            let c = prod(&common);
            let f = &c * &prod(&a);
            let g = &c * &prod(&b);
            let d = homogeneous_bivariate_gcd(&[f.clone(), g.clone()]).unwrap();
            prop_assert!(f.div_exact(&d).unwrap().is_some());
            prop_assert!(g.div_exact(&d).unwrap().is_some());
            prop_assert!(d.div_exact(&c).unwrap().is_some());
            prop_assert_eq!(d.leading_term().unwrap().1, &crate::scalar::int(1));
        }
    }
}
