use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variables of `V^{⊕n}`: `blocks` copies of `vars_per_block` coordinates.
///
/// Block `a`, slot `j` (both zero-based) is variable `a·vars_per_block + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableLayout {
    blocks: usize,
    vars_per_block: usize,
}

impl VariableLayout {
    pub fn new(blocks: usize, vars_per_block: usize) -> Result<Self> {
        if blocks == 0 || vars_per_block == 0 {
            return Err(Error::InvalidInput(format!(
                "layout needs at least one block and one variable, got {blocks}x{vars_per_block}"
            )));
        }
        Ok(VariableLayout { blocks, vars_per_block })
    }

    /// A single block of `vars` variables.
    pub fn single(vars: usize) -> Self {
        Self::new(1, vars).expect("single block layout needs a variable")
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn vars_per_block(&self) -> usize {
        self.vars_per_block
    }

    pub fn num_vars(&self) -> usize {
        self.blocks * self.vars_per_block
    }

    pub fn index(&self, block: usize, slot: usize) -> usize {
        debug_assert!(block < self.blocks && slot < self.vars_per_block);
        block * self.vars_per_block + slot
    }

    pub fn block_of(&self, var: usize) -> usize {
        var / self.vars_per_block
    }

    pub fn slot_of(&self, var: usize) -> usize {
        var % self.vars_per_block
    }

    /// Same slots, a different number of copies.
    pub fn with_blocks(&self, blocks: usize) -> Result<Self> {
        Self::new(blocks, self.vars_per_block)
    }

    /// Human-readable name: `x3`/`y3` aliases for at most two blocks, `x{a}_{j}` otherwise.
    pub fn var_name(&self, var: usize) -> String {
        let (a, j) = (self.block_of(var) + 1, self.slot_of(var) + 1);
        match (self.blocks, a) {
            (1 | 2, 1) => format!("x{j}"),
            (2, 2) => format!("y{j}"),
            _ => format!("x{a}_{j}"),
        }
    }
}

/// Exponent vector; ordered graded-lexicographically with `x_0 > x_1 > …`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, var: usize) -> Self {
        let mut m = Self::one(num_vars);
        m.0[var] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn multidegree(&self, layout: &VariableLayout) -> MultiDegree {
        MultiDegree(
            self.0
                .chunks(layout.vars_per_block())
                .map(|c| c.iter().sum())
                .collect(),
        )
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Total degree in each block, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn zero(blocks: usize) -> Self {
        MultiDegree(vec![0; blocks])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn blocks(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// `self - other` if componentwise non-negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All multidegrees with `blocks` entries and total degree at most `max_total`,
    /// in increasing graded-lex order.
    pub fn all_up_to(blocks: usize, max_total: u32) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        for total in 0..=max_total {
            let mut same = compositions(total, blocks);
            same.sort();
            out.extend(same.into_iter().map(MultiDegree));
        }
        out
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Weak compositions of `total` into `parts` non-negative pieces.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Number of monomials of the given multidegree, saturating.
pub fn count_monomials(layout: &VariableLayout, deg: &MultiDegree) -> usize {
    let m = layout.vars_per_block() as u64;
    deg.0.iter().fold(1usize, |acc, &d| {
        // C(d + m - 1, m - 1)
        let mut c: u128 = 1;
        for i in 0..(m - 1) as u128 {
            c = c * (d as u128 + 1 + i) / (i + 1);
        }
        acc.saturating_mul(usize::try_from(c).unwrap_or(usize::MAX))
    })
}

/// All monomials of the given multidegree in decreasing graded-lex order.
pub fn monomials_of_multidegree(layout: &VariableLayout, deg: &MultiDegree) -> Vec<Monomial> {
    let per_block: Vec<Vec<Vec<u32>>> = deg
        .0
        .iter()
        .map(|&d| compositions(d, layout.vars_per_block()))
        .collect();
    let mut out = vec![Vec::with_capacity(layout.num_vars())];
    for block in &per_block {
        let mut next = Vec::with_capacity(out.len() * block.len());
        for prefix in &out {
            for c in block {
                let mut e = prefix.clone();
                e.extend_from_slice(c);
                next.push(e);
            }
        }
        out = next;
    }
    let mut monos: Vec<Monomial> = out.into_iter().map(Monomial).collect();
    monos.sort_by(|a, b| b.cmp(a));
    monos
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let m = |v: &[u32]| Monomial::from_exponents(v.to_vec());
        assert!(m(&[0, 2]) > m(&[1, 0]));
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 0).len(), 1);
    }

    #[test]
    fn monomial_counts_match_enumeration() {
        let layout = VariableLayout::new(2, 4).unwrap();
        for deg in MultiDegree::all_up_to(2, 5) {
            assert_eq!(
                count_monomials(&layout, &deg),
                monomials_of_multidegree(&layout, &deg).len()
            );
        }
        let d = MultiDegree(vec![4, 4]);
        assert_eq!(count_monomials(&layout, &d), 35 * 35);
    }

    #[test]
    fn variable_names() {
        let two = VariableLayout::new(2, 3).unwrap();
        assert_eq!(two.var_name(1), "x2");
        assert_eq!(two.var_name(3), "y1");
        let three = VariableLayout::new(3, 2).unwrap();
        assert_eq!(three.var_name(5), "x3_2");
    }

    #[test]
    fn multidegrees_enumerate_in_order() {
        let all = MultiDegree::all_up_to(2, 2);
        let shown: Vec<String> = all.iter().map(|d| d.to_string()).collect();
        assert_eq!(shown, ["(0,0)", "(0,1)", "(1,0)", "(0,2)", "(1,1)", "(2,0)"]);
    }
}
