//! Finite matrix groups acting diagonally on polynomial rings.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::poly::{count_monomials, monomials_of_multidegree, Monomial, MultiDegree, SparseEchelon, VariableLayout};
use crate::scalar::{Field, RationalText};
use crate::{Poly, QMatrix, Rational};

pub const DEFAULT_GROUP_ORDER_CAP: usize = 100_000;
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// One group element with its inverse precomputed.
#[derive(Clone, Debug)]
pub struct GroupElement {
    matrix: QMatrix,
    inverse: QMatrix,
    /// When the inverse is a monomial matrix: row `i` of the inverse is
    /// `scale · e_{target}`, stored as `(target, scale)`.
    inverse_monomial: Option<Vec<(usize, Rational)>>,
}

impl GroupElement {
    fn new(matrix: QMatrix) -> Result<Self> {
        let inverse = matrix
            .inverse()
            .ok_or_else(|| Error::InvalidInput(format!("generator {matrix:?} is not invertible")))?;
        let inverse_monomial = monomial_rows(&inverse);
        Ok(GroupElement {
            matrix,
            inverse,
            inverse_monomial,
        })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &QMatrix {
        &self.inverse
    }
}

fn monomial_rows(m: &QMatrix) -> Option<Vec<(usize, Rational)>> {
    (0..m.rows())
        .map(|i| {
            let mut nz = m.row(i).iter().enumerate().filter(|(_, v)| !v.is_zero());
            let (j, v) = nz.next()?;
            nz.next().is_none().then(|| (j, v.clone()))
        })
        .collect()
}

/// A finite group of invertible rational `m×m` matrices, fully enumerated.
#[derive(Clone)]
pub struct MatrixGroup {
    dim: usize,
    generators: Vec<QMatrix>,
    elements: Vec<GroupElement>,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("dim", &self.dim)
            .field("order", &self.order())
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Symmetric group permuting coordinates.
    S,
    /// Signed permutations (Weyl group of type B).
    B,
    /// Signed permutations with an even number of sign changes (type D).
    D,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Family::S),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidInput(format!("unsupported group family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl MatrixGroup {
    /// Closes `generators` under multiplication, breadth-first from the
    /// identity with generators applied in the given order.
    pub fn enumerate(dim: usize, generators: Vec<QMatrix>, cap: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("matrix groups need dimension at least 1".into()));
        }
        for g in &generators {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim * dim,
                    found: g.rows() * g.cols(),
                });
            }
            if g.inverse().is_none() {
                return Err(Error::InvalidInput(format!("generator {g:?} is not invertible")));
            }
        }
        let identity = QMatrix::identity(dim);
        let mut seen: HashSet<QMatrix> = HashSet::from([identity.clone()]);
        let mut order = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(h) = queue.pop_front() {
            for g in &generators {
                let next = h.mul(g)?;
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "group enumeration",
                            cap: "group_order",
                            limit: cap,
                        });
                    }
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let elements = order.into_iter().map(GroupElement::new).collect::<Result<_>>()?;
        Ok(MatrixGroup {
            dim,
            generators,
            elements,
        })
    }

    /// Standard reflection representation of `S_m`, `B_m` or `D_m` as signed
    /// permutation matrices.
    pub fn builtin(family: Family, m: usize) -> Result<Self> {
        if m == 0 || (family == Family::D && m < 2) {
            return Err(Error::InvalidInput(format!("{family}_{m} is not supported")));
        }
        let mut gens: Vec<QMatrix> = (0..m.saturating_sub(1))
            .map(|i| {
                let mut t = QMatrix::zeros(m, m);
                for k in 0..m {
                    let target = match k {
                        _ if k == i => i + 1,
                        _ if k == i + 1 => i,
                        _ => k,
                    };
                    t[(k, target)] = Rational::one();
                }
                t
            })
            .collect();
        match family {
            Family::S => {}
            Family::B => {
                let mut w = QMatrix::identity(m);
                w[(m - 1, m - 1)] = -Rational::one();
                gens.push(w);
            }
            Family::D => {
                let mut w = QMatrix::identity(m);
                w[(0, 0)] = -Rational::one();
                w[(1, 1)] = -Rational::one();
                gens.push(w);
            }
        }
        Self::enumerate(m, gens, DEFAULT_GROUP_ORDER_CAP)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Generators wrapped as elements, for invariance checks.
    pub fn generator_elements(&self) -> Result<Vec<GroupElement>> {
        self.generators.iter().cloned().map(GroupElement::new).collect()
    }
}

/// The diagonal action of a group on `V^{⊕n}`: every element acts the same
/// way on each block of coordinates.
#[derive(Clone, Debug)]
pub struct DiagonalAction {
    group: Arc<MatrixGroup>,
    layout: VariableLayout,
}

impl DiagonalAction {
    pub fn new(group: Arc<MatrixGroup>, copies: usize) -> Result<Self> {
        let layout = VariableLayout::new(copies, group.dim())?;
        Ok(DiagonalAction { group, layout })
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn layout(&self) -> VariableLayout {
        self.layout
    }

    fn check(&self, p: &Poly) -> Result<()> {
        if p.layout() == &self.layout {
            Ok(())
        } else {
            Err(Error::LayoutMismatch(format!(
                "polynomial is not over {} copies of a {}-dimensional module",
                self.layout.blocks(),
                self.layout.vars_per_block()
            )))
        }
    }

    /// `(g·p)(v) = p(g⁻¹·v)`, blockwise.
    pub fn act(&self, g: &GroupElement, p: &Poly) -> Result<Poly> {
        self.check(p)?;
        let mut out = Poly::zero(self.layout);
        for (m, c) in p.terms() {
            self.act_monomial_into(g, m, c, &mut out);
        }
        Ok(out)
    }

    fn act_monomial_into(&self, g: &GroupElement, m: &Monomial, c: &Rational, out: &mut Poly) {
        let layout = self.layout;
        let dim = layout.vars_per_block();
        match &g.inverse_monomial {
            Some(rows) => {
                let mut exps = vec![0u32; layout.num_vars()];
                let mut coeff = c.clone();
                for (v, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let (block, slot) = (layout.block_of(v), layout.slot_of(v));
                    let (target, scale) = &rows[slot];
                    exps[layout.index(block, *target)] += e;
                    coeff *= num_traits::pow(scale.clone(), e as usize);
                }
                out.add_term(Monomial::from_exponents(exps), coeff);
            }
            None => {
                let images: BTreeMap<usize, Poly> = (0..layout.num_vars())
                    .filter(|&v| m.exponents()[v] > 0)
                    .map(|v| {
                        let (block, slot) = (layout.block_of(v), layout.slot_of(v));
                        let img = (0..dim).fold(Poly::zero(layout), |acc, j| {
                            let a = &g.inverse[(slot, j)];
                            if a.is_zero() {
                                acc
                            } else {
                                &acc + &Poly::block_var(layout, block, j).scale(a)
                            }
                        });
                        (v, img)
                    })
                    .collect();
                let term = Poly::monomial(layout, m.clone(), c.clone())
                    .substitute(&images)
                    .expect("images share the action layout");
                for (tm, tc) in term.terms() {
                    out.add_term(tm.clone(), tc.clone());
                }
            }
        }
    }

    /// Average of `g·p` over the group; a projection onto the invariants.
    pub fn reynolds(&self, p: &Poly) -> Result<Poly> {
        self.check(p)?;
        let mut sum = Poly::zero(self.layout);
        for g in self.group.elements() {
            for (m, c) in p.terms() {
                self.act_monomial_into(g, m, c, &mut sum);
            }
        }
        Ok(sum.scale(&Rational::from_int(self.group.order() as i64).inverse()))
    }

    pub fn is_invariant(&self, p: &Poly) -> Result<bool> {
        for g in self.group.generator_elements()? {
            if &self.act(&g, p)? != p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the invariant part of the multihomogeneous component of
    /// degree `deg`, as the rank of the Reynolds images of its monomials.
    pub fn invariant_dimension(&self, deg: &MultiDegree, monomial_cap: usize) -> Result<usize> {
        check_len(self.layout.blocks(), deg.blocks())?;
        if count_monomials(&self.layout, deg) > monomial_cap {
            return Err(Error::CapExceeded {
                what: "invariant dimension",
                cap: "monomials",
                limit: monomial_cap,
            });
        }
        let mut echelon = SparseEchelon::new();
        let mut covered: HashSet<Monomial> = HashSet::new();
        let monomial_group = self.group.elements().iter().all(|g| g.inverse_monomial.is_some());
        for m in monomials_of_multidegree(&self.layout, deg) {
            // For monomial matrices the image of m only involves its orbit, and
            // monomials in one orbit have proportional images.
            if monomial_group && covered.contains(&m) {
                continue;
            }
            let image = self.reynolds(&Poly::monomial(self.layout, m.clone(), Rational::one()))?;
            if monomial_group {
                for g in self.group.elements() {
                    let mut single = Poly::zero(self.layout);
                    self.act_monomial_into(g, &m, &Rational::one(), &mut single);
                    covered.extend(single.terms().keys().cloned());
                }
            }
            echelon.insert(image.terms());
        }
        Ok(echelon.rank())
    }

    /// `g·v` for a point of `V^{⊕n}`, blockwise.
    pub fn act_on_point(&self, g: &GroupElement, v: &[Rational]) -> Result<Vec<Rational>> {
        check_len(self.layout.num_vars(), v.len())?;
        let mut out = Vec::with_capacity(v.len());
        for block in v.chunks(self.layout.vars_per_block()) {
            out.extend(g.matrix.apply(block)?);
        }
        Ok(out)
    }

    pub fn same_orbit(&self, v: &[Rational], w: &[Rational]) -> Result<bool> {
        check_len(self.layout.num_vars(), w.len())?;
        for g in self.group.elements() {
            if self.act_on_point(g, v)? == w {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BuiltinSpec {
    pub family: Family,
    pub m: usize,
}

/// Group spec file: `{"builtin": {"family": "D", "m": 4}}` or
/// `{"generators": [["0","1","1","0"], ...]}` with row-major entries.
///
/// Custom groups may list `"invariants"` generating their invariant ring
/// for the comparison commands.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<BuiltinSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<RationalText>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GroupSpec = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("group spec: {e}")))?;
        match (&spec.builtin, &spec.generators) {
            (Some(_), None) | (None, Some(_)) => Ok(spec),
            _ => Err(Error::InvalidInput(
                "group spec needs exactly one of \"builtin\" or \"generators\"".into(),
            )),
        }
    }

    pub fn build(&self, cap: usize) -> Result<MatrixGroup> {
        if let Some(b) = &self.builtin {
            let g = MatrixGroup::builtin(b.family, b.m)?;
            if g.order() > cap {
                return Err(Error::CapExceeded {
                    what: "group enumeration",
                    cap: "group_order",
                    limit: cap,
                });
            }
            return Ok(g);
        }
        let gens = self.generators.as_deref().unwrap_or_default();
        let Some(first) = gens.first() else {
            return Err(Error::InvalidInput("group spec lists no generators".into()));
        };
        let dim = (first.len() as f64).sqrt().round() as usize;
        let mut mats = Vec::with_capacity(gens.len());
        for g in gens {
            if dim * dim != g.len() {
                return Err(Error::InvalidInput(format!("generator with {} entries is not square", g.len())));
            }
            let entries = g.iter().map(RationalText::value).collect::<Result<Vec<_>>>()?;
            mats.push(QMatrix::from_vec(dim, dim, entries)?);
        }
        MatrixGroup::enumerate(dim, mats, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly_in;
    use crate::random::{rng, small_vector};
    use crate::scalar::{int, rat};

    fn action(family: Family, m: usize, copies: usize) -> DiagonalAction {
        DiagonalAction::new(Arc::new(MatrixGroup::builtin(family, m).unwrap()), copies).unwrap()
    }

    fn poly(a: &DiagonalAction, t: &str) -> Poly {
        parse_poly_in(t, a.layout()).unwrap()
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(MatrixGroup::builtin(Family::S, 3).unwrap().order(), 6);
        assert_eq!(MatrixGroup::builtin(Family::S, 2).unwrap().order(), 2);
        assert_eq!(MatrixGroup::builtin(Family::B, 2).unwrap().order(), 8);
        assert_eq!(MatrixGroup::builtin(Family::D, 3).unwrap().order(), 24);
        assert_eq!(MatrixGroup::builtin(Family::D, 4).unwrap().order(), 192);
        assert_eq!(MatrixGroup::builtin(Family::B, 3).unwrap().order(), 48);
        assert!(MatrixGroup::builtin(Family::D, 1).is_err());
        assert!("Q".parse::<Family>().is_err());
    }

    #[test]
    fn s2_is_identity_and_swap() {
        let g = MatrixGroup::builtin(Family::S, 2).unwrap();
        let mats: Vec<_> = g.elements().iter().map(|e| e.matrix().clone()).collect();
        assert_eq!(mats, vec![QMatrix::identity(2), QMatrix::from_ints(&[&[0, 1], &[1, 0]])]);
    }

    #[test]
    fn enumeration_set_ignores_generator_order() {
        let g = MatrixGroup::builtin(Family::D, 3).unwrap();
        let mut rev = g.generators().to_vec();
        rev.reverse();
        let h = MatrixGroup::enumerate(3, rev, DEFAULT_GROUP_ORDER_CAP).unwrap();
        let set = |g: &MatrixGroup| g.elements().iter().map(|e| e.matrix().clone()).collect::<HashSet<_>>();
        assert_eq!(set(&g), set(&h));
    }

    #[test]
    fn enumeration_cap() {
        let g = MatrixGroup::builtin(Family::B, 3).unwrap();
        let err = MatrixGroup::enumerate(3, g.generators().to_vec(), 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: "group_order", .. }));
        // infinite order
        let shear = QMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(MatrixGroup::enumerate(2, vec![shear], 50).is_err());
        let singular = QMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(MatrixGroup::enumerate(2, vec![singular], 50).is_err());
    }

    #[test]
    fn action_examples() {
        let s2 = action(Family::S, 2, 1);
        let swap = &s2.group().elements()[1];
        assert_eq!(s2.act(swap, &poly(&s2, "x1")).unwrap(), poly(&s2, "x2"));
        let sq = poly(&s2, "x1^2 + x2^2");
        assert_eq!(s2.act(swap, &sq).unwrap(), sq);

        let b2 = action(Family::B, 2, 1);
        let minus = b2
            .group()
            .elements()
            .iter()
            .find(|e| e.matrix() == &QMatrix::from_ints(&[&[-1, 0], &[0, -1]]))
            .unwrap();
        let xy = poly(&b2, "x1*x2");
        assert_eq!(b2.act(minus, &xy).unwrap(), xy);
    }

    #[test]
    fn general_matrices_act_by_substitution() {
        // rotation by 90 degrees, order 4, treated through the general path
        let rot = QMatrix::from_ints(&[&[0, -1], &[1, 0]]);
        let g = GroupElement {
            inverse: rot.inverse().unwrap(),
            matrix: rot,
            inverse_monomial: None,
        };
        let a = action(Family::S, 2, 1);
        let fast = GroupElement::new(g.matrix.clone()).unwrap();
        let p = poly(&a, "x1^3*x2 + 2*x2^2 - x1");
        assert_eq!(a.act(&g, &p).unwrap(), a.act(&fast, &p).unwrap());
    }

    #[test]
    fn reynolds_examples() {
        let s2 = action(Family::S, 2, 1);
        assert_eq!(s2.reynolds(&poly(&s2, "x1")).unwrap(), poly(&s2, "1/2*x1 + 1/2*x2"));
        let b2 = action(Family::B, 2, 1);
        assert!(b2.reynolds(&poly(&b2, "x1")).unwrap().is_zero());
        let d2 = action(Family::D, 2, 1);
        assert_eq!(d2.reynolds(&poly(&d2, "x1*x2")).unwrap(), poly(&d2, "x1*x2"));
    }

    #[test]
    fn reynolds_is_an_invariant_projection() {
        let d3 = action(Family::D, 3, 2);
        let p = poly(&d3, "x1^2*y2 + 3*x1*x2*x3*y1 - y3^4 + x2");
        let r = d3.reynolds(&p).unwrap();
        assert!(d3.is_invariant(&r).unwrap());
        assert_eq!(d3.reynolds(&r).unwrap(), r);
    }

    #[test]
    fn invariant_dimension_examples() {
        let s2 = action(Family::S, 2, 1);
        assert_eq!(s2.invariant_dimension(&MultiDegree(vec![2]), DEFAULT_MONOMIAL_CAP).unwrap(), 2);
        let b2 = action(Family::B, 2, 1);
        assert_eq!(b2.invariant_dimension(&MultiDegree(vec![1]), DEFAULT_MONOMIAL_CAP).unwrap(), 0);
        let err = b2.invariant_dimension(&MultiDegree(vec![3]), 2).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: "monomials", .. }));
    }

    /// Partitions of `d` into at most `m` parts, by brute recursion.
    fn partitions(d: u32, max_part: u32, parts_left: usize) -> usize {
        if d == 0 {
            return 1;
        }
        if parts_left == 0 {
            return 0;
        }
        (1..=max_part.min(d)).map(|p| partitions(d - p, p, parts_left - 1)).sum()
    }

    #[test]
    fn symmetric_invariants_count_partitions() {
        for m in 1..=5 {
            let a = action(Family::S, m, 1);
            for d in 0..=5u32 {
                let dim = a.invariant_dimension(&MultiDegree(vec![d]), DEFAULT_MONOMIAL_CAP).unwrap();
                // partitions into at most m parts = partitions into parts ≤ m
                assert_eq!(dim, partitions(d, d, m), "S_{m}, degree {d}");
            }
        }
    }

    #[test]
    fn invariant_dimension_fast_path_matches_full_rank() {
        let d3 = action(Family::D, 3, 2);
        for deg in [MultiDegree(vec![2, 1]), MultiDegree(vec![2, 2]), MultiDegree(vec![3, 1])] {
            let mut e = SparseEchelon::new();
            for m in monomials_of_multidegree(&d3.layout(), &deg) {
                e.insert(d3.reynolds(&Poly::monomial(d3.layout(), m, int(1))).unwrap().terms());
            }
            assert_eq!(d3.invariant_dimension(&deg, DEFAULT_MONOMIAL_CAP).unwrap(), e.rank());
        }
    }

    #[test]
    fn orbit_examples() {
        let s2 = action(Family::S, 2, 1);
        assert!(s2.same_orbit(&[int(1), int(2)], &[int(2), int(1)]).unwrap());
        assert!(!s2.same_orbit(&[int(1), int(2)], &[int(1), int(3)]).unwrap());
        let b2 = action(Family::B, 2, 1);
        assert!(b2.same_orbit(&[int(1), int(0)], &[int(-1), int(0)]).unwrap());
        assert!(b2.same_orbit(&[int(1)], &[int(1), int(0)]).is_err());
    }

    #[test]
    fn orbit_of_random_point_is_recognized() {
        let d4 = action(Family::D, 4, 2);
        let mut r = rng(7);
        let v = small_vector(&mut r, 8, 9);
        for g in d4.group().elements().iter().step_by(17) {
            let w = d4.act_on_point(g, &v).unwrap();
            assert!(d4.same_orbit(&v, &w).unwrap());
        }
        let mut w = v.clone();
        w[0] = w[0].clone() + rat(1, 2);
        assert!(!d4.same_orbit(&v, &w).unwrap());
    }

    #[test]
    fn group_spec_files() {
        let b = GroupSpec::from_json(r#"{"builtin": {"family": "D", "m": 4}}"#).unwrap();
        assert_eq!(b.build(DEFAULT_GROUP_ORDER_CAP).unwrap().order(), 192);
        let g = GroupSpec::from_json(r#"{"generators": [["0","1","1","0"], ["-1", "0", "0", 1]]}"#).unwrap();
        assert_eq!(g.build(DEFAULT_GROUP_ORDER_CAP).unwrap().order(), 8);
        // dihedral group of order 12 in a rational basis
        let d6 = GroupSpec::from_json(r#"{"generators": [["1","-1","1","0"], ["0","1","1","0"]]}"#).unwrap();
        assert_eq!(d6.build(DEFAULT_GROUP_ORDER_CAP).unwrap().order(), 12);
        assert!(GroupSpec::from_json(r#"{}"#).is_err());
        assert!(GroupSpec::from_json(r#"{"generators": [["1","2","3"]]}"#).unwrap().build(10).is_err());
        assert!(GroupSpec::from_json(r#"{"generators": [["x"]]}"#).unwrap().build(10).is_err());
    }
}
