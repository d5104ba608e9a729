//! Incremental sparse row echelon form.
//!
//! Rows are sparse vectors keyed by any ordered type (monomials, tagged
//! monomials); each stored row has a distinct pivot equal to its largest key,
//! normalized to one. Rows can optionally remember how they were built from
//! the inserted vectors, which is how membership certificates are produced.

use std::collections::BTreeMap;

use crate::scalar::Field;

pub type SparseVec<K, F> = BTreeMap<K, F>;

#[derive(Clone, Debug)]
struct Row<K, F> {
    entries: SparseVec<K, F>,
    /// Combination of inserted vectors equal to `entries`.
    origin: BTreeMap<usize, F>,
}

#[derive(Clone, Debug)]
pub struct SparseEchelon<K, F> {
    rows: BTreeMap<K, Row<K, F>>,
    track: bool,
    inserted: usize,
}

/// Outcome of reducing a vector against the current rows.
#[derive(Clone, Debug)]
pub struct Reduction<K, F> {
    pub remainder: SparseVec<K, F>,
    /// `input - remainder = Σ combination[i] · inserted_i` (only when tracking).
    pub combination: BTreeMap<usize, F>,
}

fn axpy<K: Ord + Clone, F: Field>(target: &mut SparseVec<K, F>, scale: &F, source: &SparseVec<K, F>) {
    for (k, v) in source {
        let delta = scale.clone() * v.clone();
        match target.get_mut(k) {
            Some(t) => {
                let sum = t.clone() + delta;
                if sum.is_zero() {
                    target.remove(k);
                } else {
                    *t = sum;
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(k.clone(), delta);
                }
            }
        }
    }
}

impl<K: Ord + Clone, F: Field> SparseEchelon<K, F> {
    pub fn new() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
            track: false,
            inserted: 0,
        }
    }

    /// Like [`new`](Self::new) but records the origin of every row.
    pub fn tracking() -> Self {
        SparseEchelon {
            track: true,
            ..Self::new()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors passed to [`insert`](Self::insert) so far.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn reduce(&self, v: &SparseVec<K, F>) -> Reduction<K, F> {
        let mut rem = v.clone();
        let mut combination = BTreeMap::new();
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => rem.keys().next_back(),
                Some(b) => rem.range(..b.clone()).next_back().map(|(k, _)| k),
            }
            .cloned();
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let c = rem[&key].clone();
                axpy(&mut rem, &-c.clone(), &row.entries);
                if self.track {
                    axpy(&mut combination, &c, &row.origin);
                }
            }
            bound = Some(key);
        }
        Reduction {
            remainder: rem,
            combination,
        }
    }

    /// Adds a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<K, F>) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let Reduction {
            remainder,
            combination,
        } = self.reduce(v);
        let Some((pivot, lead)) = remainder.iter().next_back() else {
            return false;
        };
        let (pivot, inv) = (pivot.clone(), lead.inverse());
        let entries = remainder.into_iter().map(|(k, c)| (k, c * inv.clone())).collect();
        let mut origin = BTreeMap::new();
        if self.track {
            // row = (v - Σ combination·inserted) / lead
            origin.insert(id, inv.clone());
            axpy(&mut origin, &-inv, &combination);
        }
        self.rows.insert(pivot, Row { entries, origin });
        true
    }

    pub fn contains(&self, v: &SparseVec<K, F>) -> bool {
        self.reduce(v).remainder.is_empty()
    }

    /// Coefficients over the inserted vectors reproducing `v`, if `v` is in the span.
    ///
    /// Requires a tracking echelon.
    pub fn express(&self, v: &SparseVec<K, F>) -> Option<BTreeMap<usize, F>> {
        assert!(self.track, "express needs a tracking echelon");
        let r = self.reduce(v);
        r.remainder.is_empty().then_some(r.combination)
    }

    /// Fully reduced basis, largest pivot first. Deterministic for a given
    /// span: the reduced row echelon form is unique.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K, F>> {
        let mut done: BTreeMap<K, SparseVec<K, F>> = BTreeMap::new();
        for (pivot, row) in &self.rows {
            let mut entries = row.entries.clone();
            let others: Vec<K> = entries
                .keys()
                .filter(|k| *k != pivot && done.contains_key(*k))
                .cloned()
                .collect();
            for k in others {
                if let Some(c) = entries.get(&k).cloned() {
                    axpy(&mut entries, &-c, &done[&k]);
                }
            }
            done.insert(pivot.clone(), entries);
        }
        done.into_values().rev().collect()
    }
}

impl<K: Ord + Clone, F: Field> Default for SparseEchelon<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Matrix;
    use crate::scalar::{int, Rational};
    use proptest::prelude::*;

    fn sv(v: &[i64]) -> SparseVec<usize, Rational> {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, int(x)))
            .collect()
    }

    #[test]
    fn tracks_combinations() {
        let mut e = SparseEchelon::tracking();
        assert!(e.insert(&sv(&[1, 1, 0])));
        assert!(e.insert(&sv(&[0, 1, 1])));
        assert!(!e.insert(&sv(&[1, 2, 1])));
        let c = e.express(&sv(&[2, 3, 1])).unwrap();
        assert_eq!(c.get(&0), Some(&int(2)));
        assert_eq!(c.get(&1), Some(&int(1)));
        assert!(e.express(&sv(&[1, 0, 0])).is_none());
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let mut a = SparseEchelon::new();
        a.insert(&sv(&[1, 2, 3]));
        a.insert(&sv(&[0, 1, 1]));
        let mut b = SparseEchelon::new();
        b.insert(&sv(&[1, 3, 4]));
        b.insert(&sv(&[2, 4, 6]));
        b.insert(&sv(&[1, 1, 2]));
        assert_eq!(a.reduced_basis(), b.reduced_basis());
    }

    proptest! {
        #[test]
        fn rank_matches_dense_rref(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..7)) {
            let mut e = SparseEchelon::new();
            for r in &rows {
                e.insert(&sv(r));
            }
            let dense = if rows.is_empty() {
                0
            } else {
                Matrix::<Rational>::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap().rank()
            };
            prop_assert_eq!(e.rank(), dense);
        }

        #[test]
        fn certificates_reconstruct(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 1..6), coeffs in proptest::collection::vec(-3i64..=3, 6)) {
            let mut e = SparseEchelon::tracking();
            for r in &rows {
                e.insert(&sv(r));
            }
            let mut target = SparseVec::new();
            for (r, c) in rows.iter().zip(&coeffs) {
                axpy(&mut target, &int(*c), &sv(r));
            }
            let cert = e.express(&target).expect("target is in the span by construction");
            let mut back = SparseVec::new();
            for (i, c) in &cert {
                axpy(&mut back, c, &sv(&rows[*i]));
            }
            prop_assert_eq!(back, target);
        }
    }
}
