use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_len, Error, Result};
use crate::poly::monomial::{Monomial, MultiDegree, VariableLayout};
use crate::scalar::Field;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a map ordered graded-lexicographically and never store
/// a zero coefficient, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    layout: VariableLayout,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(layout: VariableLayout) -> Self {
        Polynomial {
            layout,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(layout: VariableLayout, c: F) -> Self {
        Self::monomial(layout, Monomial::one(layout.num_vars()), c)
    }

    pub fn one(layout: VariableLayout) -> Self {
        Self::constant(layout, F::one())
    }

    pub fn var(layout: VariableLayout, var: usize) -> Self {
        Self::monomial(layout, Monomial::var(layout.num_vars(), var), F::one())
    }

    /// Variable in slot `slot` of block `block` (both zero-based).
    pub fn block_var(layout: VariableLayout, block: usize, slot: usize) -> Self {
        Self::var(layout, layout.index(block, slot))
    }

    pub fn monomial(layout: VariableLayout, mono: Monomial, c: F) -> Self {
        assert_eq!(mono.num_vars(), layout.num_vars(), "monomial does not fit layout");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial { layout, terms }
    }

    pub fn from_terms(layout: VariableLayout, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(layout);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), layout.num_vars(), "monomial does not fit layout");
            p.add_term(m, c);
        }
        p
    }

    pub fn layout(&self) -> &VariableLayout {
        &self.layout
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, F> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, F> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> F {
        self.terms.get(mono).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coefficient(&Monomial::one(self.layout.num_vars()))
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The common multidegree when every term shares it.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut degs = self.terms.keys().map(|m| m.multidegree(&self.layout));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, mono: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_layout(&self, other: &Self) -> Result<()> {
        if self.layout == other.layout {
            Ok(())
        } else {
            Err(Error::LayoutMismatch(format!(
                "{}x{} vs {}x{}",
                self.layout.blocks(),
                self.layout.vars_per_block(),
                other.layout.blocks(),
                other.layout.vars_per_block()
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_layout(other)?;
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1.clone() * c2.clone();
                acc.entry(m1.mul(m2))
                    .and_modify(|v| *v = v.clone() + c.clone())
                    .or_insert(c);
            }
        }
        Ok(Polynomial {
            layout: self.layout,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.layout);
        }
        Polynomial {
            layout: self.layout,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * s.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.layout);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inverse()),
            None => self.clone(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.layout);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exponents_mut()[var] = e - 1;
            out.add_term(d, c.clone() * F::from_int(e as i64));
        }
        out
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        check_len(self.layout.num_vars(), point.len())?;
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = term * num_traits::pow(x.clone(), e as usize);
                }
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Substitutes `images[v]` for each mapped variable `v`.
    ///
    /// The result lives in the layout shared by the images. Unmapped
    /// variables keep their index in that layout.
    pub fn substitute(&self, images: &BTreeMap<usize, Polynomial<F>>) -> Result<Self> {
        let target = match images.values().next() {
            Some(p) => p.layout,
            None => return Ok(self.clone()),
        };
        for img in images.values() {
            if img.layout != target {
                return Err(Error::LayoutMismatch("substitution images disagree on layout".into()));
            }
        }
        let n = self.layout.num_vars();
        let image_of = |v: usize| -> Result<Polynomial<F>> {
            match images.get(&v) {
                Some(p) => Ok(p.clone()),
                None if v < target.num_vars() => Ok(Self::var(target, v)),
                None => Err(Error::LayoutMismatch(format!(
                    "unmapped variable {v} does not exist in the target layout"
                ))),
            }
        };
        // powers[v][e] = image_v^e, grown on demand
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); n];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if powers[v].is_empty() {
                    powers[v].push(Self::one(target));
                    powers[v].push(image_of(v)?);
                }
                while powers[v].len() <= e as usize {
                    let next = &powers[v][powers[v].len() - 1] * &powers[v][1];
                    powers[v].push(next);
                }
                term = &term * &powers[v][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Moves every variable into `target` via `map[var]`.
    pub fn relabel(&self, target: VariableLayout, map: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.num_vars()];
            for (v, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    e[map(v)] += k;
                }
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// Splits by total degree in each block; the pieces sum back to `self`.
    pub fn multidegree_components(&self) -> BTreeMap<MultiDegree, Polynomial<F>> {
        let mut out: BTreeMap<MultiDegree, Polynomial<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree(&self.layout))
                .or_insert_with(|| Self::zero(self.layout))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_layout(divisor)?;
        let Some((lm, lc)) = divisor.leading_term() else {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        };
        let (lm, lc_inv) = (lm.clone(), lc.inverse());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.layout);
        while let Some((m, c)) = rem.leading_term() {
            let Some(q) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = c.clone() * lc_inv.clone();
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&q), -(qc.clone() * dc.clone()));
            }
            quot.add_term(q, qc);
        }
        Ok(Some(quot))
    }

    pub fn map_coefficients(&self, f: impl Fn(&F) -> F) -> Self {
        Self::from_terms(self.layout, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    /// Panics on layout mismatch; use [`Polynomial::checked_add`] to handle it.
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("polynomial layouts differ")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("polynomial layouts differ")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("polynomial layouts differ")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Terms in decreasing graded-lex order, e.g. `3/2*x1^2*y1 - x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.layout.var_name(v)),
                    _ => factors.push(format!("{}^{e}", self.layout.var_name(v))),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
