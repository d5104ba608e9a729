//! Matrix Lie algebras `sl_n` and `so_5`, the `sl_2` action on binary-form
//! coefficients, trace invariants of `so_5` and their order-two
//! polarizations, and the nilpotent-subspace certificates for `sl_3` and
//! `so_5`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::kernel::solve_in_span;
use crate::nullcone::{scalar_matrix_nilpotent, span_probe_nullcone, ProbeVerdict, SubspaceSpec, DEFAULT_PROBE_TRIALS};
use crate::poly::{monomials_of_multidegree, Monomial, MultiDegree, PolyMatrix, SparseEchelon, VariableLayout};
use crate::random::rng;
use crate::scalar::int;
use crate::{Poly, QMatrix, Rational};

const SEED_COUNT: u64 = 3;
const POINT_BOUND: i64 = 9;

pub fn bracket(a: &QMatrix, b: &QMatrix) -> Result<QMatrix> {
    a.mul(b)?.sub(&b.mul(a)?)
}

fn flatten(m: &QMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn elementary(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(i, j)] = int(1);
    m
}

/// A Lie algebra of `n×n` matrices with a fixed basis, checked at
/// construction to be linearly independent and closed under the bracket.
#[derive(Clone, Debug)]
pub struct LieAlgebraBasis {
    name: String,
    matrix_size: usize,
    basis: Vec<QMatrix>,
}

impl LieAlgebraBasis {
    pub fn new(name: impl Into<String>, matrix_size: usize, basis: Vec<QMatrix>) -> Result<Self> {
        for b in &basis {
            if b.rows() != matrix_size || b.cols() != matrix_size {
                return Err(Error::DimensionMismatch {
                    expected: matrix_size,
                    found: b.rows(),
                });
            }
        }
        let flat: Vec<Vec<Rational>> = basis.iter().map(flatten).collect();
        if !flat.is_empty() && QMatrix::from_rows(flat.clone())?.rank() != basis.len() {
            return Err(Error::InvalidInput("Lie algebra basis is linearly dependent".into()));
        }
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if solve_in_span(&flat, &flatten(&bracket(a, b)?))?.is_none() {
                    return Err(Error::InvalidInput("basis span is not closed under the bracket".into()));
                }
            }
        }
        Ok(LieAlgebraBasis {
            name: name.into(),
            matrix_size,
            basis,
        })
    }

    /// Traceless `n×n` matrices: `E_ij` for `i ≠ j`, then `E_ii − E_{i+1,i+1}`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput("sl_n needs n ≥ 2".into()));
        }
        let mut basis = Vec::with_capacity(n * n - 1);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(elementary(n, i, j));
                }
            }
        }
        for i in 0..n - 1 {
            basis.push(elementary(n, i, i).sub(&elementary(n, i + 1, i + 1))?);
        }
        Self::new(format!("sl{n}"), n, basis)
    }

    /// Skew-symmetric `5×5` matrices: `E_ij − E_ji` for `i < j`, in
    /// lexicographic order of `(i, j)`.
    pub fn so5() -> Self {
        let basis = so5_pairs()
            .map(|(i, j)| elementary(5, i, j).sub(&elementary(5, j, i)).expect("same size"))
            .collect();
        Self::new("so5", 5, basis).expect("so5 is a Lie algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn basis(&self) -> &[QMatrix] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `m` in the basis, if `m` lies in the algebra.
    pub fn coordinates(&self, m: &QMatrix) -> Result<Option<Vec<Rational>>> {
        let flat: Vec<Vec<Rational>> = self.basis.iter().map(flatten).collect();
        solve_in_span(&flat, &flatten(m))
    }

    pub fn element(&self, coords: &[Rational]) -> Result<QMatrix> {
        check_len(self.dimension(), coords.len())?;
        let n = self.matrix_size;
        self.basis
            .iter()
            .zip(coords)
            .try_fold(QMatrix::zeros(n, n), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    /// An element with seeded integer coordinates in `−9..=9`.
    pub fn random_element(&self, rng: &mut impl Rng) -> QMatrix {
        let coords: Vec<Rational> = (0..self.dimension())
            .map(|_| int(rng.gen_range(-POINT_BOUND..=POINT_BOUND)))
            .collect();
        self.element(&coords).expect("coordinate count matches")
    }
}

fn so5_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))
}

/// A linear subspace of a Lie algebra spanned by explicit matrices.
#[derive(Clone, Debug)]
pub struct LieSubspace {
    algebra: LieAlgebraBasis,
    spanning: Vec<QMatrix>,
}

impl LieSubspace {
    pub fn new(algebra: LieAlgebraBasis, spanning: Vec<QMatrix>) -> Result<Self> {
        for m in &spanning {
            if m.rows() != algebra.matrix_size() || algebra.coordinates(m)?.is_none() {
                return Err(Error::InvalidInput(format!("spanning matrix is not in {}", algebra.name())));
            }
        }
        Ok(LieSubspace { algebra, spanning })
    }

    pub fn algebra(&self) -> &LieAlgebraBasis {
        &self.algebra
    }

    pub fn spanning(&self) -> &[QMatrix] {
        &self.spanning
    }
}

fn sparse(m: &QMatrix) -> BTreeMap<usize, Rational> {
    m.entries()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Basis of the Lie subalgebra generated by `l`, in reduced echelon form
/// over the matrix entries (so the result depends only on the subalgebra).
///
/// `cap` bounds the dimension and defaults to the ambient dimension.
pub fn subalgebra_closure(l: &LieSubspace, cap: Option<usize>) -> Result<Vec<QMatrix>> {
    let limit = cap.unwrap_or(l.algebra.dimension());
    let n = l.algebra.matrix_size();
    let mut echelon = SparseEchelon::new();
    let mut members: Vec<QMatrix> = Vec::new();
    let mut frontier: Vec<QMatrix> = Vec::new();
    for m in &l.spanning {
        if echelon.insert(&sparse(m)) {
            frontier.push(m.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            members.push(a.clone());
            if echelon.rank() > limit {
                break;
            }
            for b in &members {
                let c = bracket(a, b)?;
                if echelon.insert(&sparse(&c)) {
                    next.push(c);
                }
            }
        }
        if echelon.rank() > limit {
            return Err(Error::CapExceeded {
                what: "subalgebra closure",
                cap: "closure_dimension",
                limit,
            });
        }
        frontier = next;
    }
    echelon
        .reduced_basis()
        .into_iter()
        .map(|row| {
            let mut entries = vec![Rational::zero(); n * n];
            for (k, c) in row {
                entries[k] = c;
            }
            QMatrix::from_vec(n, n, entries)
        })
        .collect()
}

/// Which `sl_2` generator a derivation comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sl2Generator {
    E,
    F,
    H,
}

/// The `sl_2`-module `R_{d_1} ⊕ … ⊕ R_{d_k}`, acting by derivations on
/// polynomials in the coefficients. Block `a` holds `c_0, …, c_{d_a}`;
/// slots past `d_a` are padding and never occur.
#[derive(Clone, Debug)]
pub struct Sl2Module {
    degrees: Vec<u32>,
    layout: VariableLayout,
}

impl Sl2Module {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidInput("binary-form degrees must be ≥ 1".into()));
        }
        let width = *degrees.iter().max().unwrap() as usize + 1;
        let layout = VariableLayout::new(degrees.len(), width)?;
        let module = Sl2Module { degrees, layout };
        module.self_test()?;
        Ok(module)
    }

    pub fn layout(&self) -> VariableLayout {
        self.layout
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The discriminant of `R_2` must be annihilated; this pins down the
    /// sign and duality conventions.
    fn self_test(&self) -> Result<()> {
        let quad = Sl2Module {
            degrees: vec![2],
            layout: VariableLayout::single(3),
        };
        let c = |j| Poly::var(quad.layout, j);
        let disc = &(&c(1) * &c(1)) - &(&c(0) * &c(2)).scale(&int(4));
        for g in [Sl2Generator::E, Sl2Generator::F, Sl2Generator::H] {
            if !quad.derive(g, &disc).is_zero() {
                return Err(Error::InvalidInput("sl2 derivation conventions are inconsistent".into()));
            }
        }
        Ok(())
    }

    /// Image of the coefficient variable `c_j` of block `a`: the induced
    /// action on the dual of `R_d` with basis `x^{d−j} y^j`, where
    /// `e = x∂_y`, `f = y∂_x`, `h = x∂_x − y∂_y`.
    fn on_variable(&self, g: Sl2Generator, block: usize, j: usize) -> Vec<(usize, Rational)> {
        let d = self.degrees[block] as i64;
        let ji = j as i64;
        match g {
            Sl2Generator::E if ji < d => vec![(self.layout.index(block, j + 1), int(-(ji + 1)))],
            Sl2Generator::F if j > 0 => vec![(self.layout.index(block, j - 1), int(-(d - ji + 1)))],
            Sl2Generator::H if d != 2 * ji => vec![(self.layout.index(block, j), int(2 * ji - d))],
            _ => Vec::new(),
        }
    }

    pub fn derive(&self, g: Sl2Generator, p: &Poly) -> Poly {
        let mut out = Poly::zero(self.layout);
        for (mono, coeff) in p.terms() {
            for (var, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (block, slot) = (self.layout.block_of(var), self.layout.slot_of(var));
                for (target, c) in self.on_variable(g, block, slot) {
                    let mut exps = mono.exponents().to_vec();
                    exps[var] -= 1;
                    exps[target] += 1;
                    out.add_term(Monomial::from_exponents(exps), coeff * &c * int(i64::from(e)));
                }
            }
        }
        out
    }

    fn weight(&self, mono: &Monomial) -> i64 {
        mono.exponents()
            .iter()
            .enumerate()
            .map(|(var, &e)| {
                let d = self.degrees[self.layout.block_of(var)] as i64;
                i64::from(e) * (2 * self.layout.slot_of(var) as i64 - d)
            })
            .sum()
    }

    fn uses_padding(&self, mono: &Monomial) -> bool {
        mono.exponents()
            .iter()
            .enumerate()
            .any(|(var, &e)| e > 0 && self.layout.slot_of(var) > self.degrees[self.layout.block_of(var)] as usize)
    }

    fn monomial_count(&self, deg: &MultiDegree) -> usize {
        self.degrees
            .iter()
            .zip(&deg.0)
            .map(|(&d, &k)| binomial(u64::from(k) + u64::from(d), u64::from(d)))
            .fold(1u64, u64::saturating_mul)
            .try_into()
            .unwrap_or(usize::MAX)
    }

    /// Dimension of the invariants of multidegree `deg`: weight-zero
    /// polynomials killed by `e` and `f`.
    pub fn invariant_dimension(&self, deg: &MultiDegree, monomial_cap: usize) -> Result<usize> {
        check_len(self.degrees.len(), deg.blocks())?;
        if self.monomial_count(deg) > monomial_cap {
            return Err(Error::CapExceeded {
                what: "sl2 invariant dimension",
                cap: "monomials",
                limit: monomial_cap,
            });
        }
        let weight_zero: Vec<Monomial> = monomials_of_multidegree(&self.layout, deg)
            .into_iter()
            .filter(|m| !self.uses_padding(m) && self.weight(m) == 0)
            .collect();
        let mut echelon = SparseEchelon::new();
        for m in &weight_zero {
            let p = Poly::monomial(self.layout, m.clone(), int(1));
            let mut image = BTreeMap::new();
            for g in [Sl2Generator::E, Sl2Generator::F] {
                for (mono, c) in self.derive(g, &p).into_terms() {
                    image.insert((g, mono), c);
                }
            }
            echelon.insert(&image);
        }
        Ok(weight_zero.len() - echelon.rank())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn sl2_invariant_dimension(module: &[u32], deg: &MultiDegree, monomial_cap: usize) -> Result<usize> {
    Sl2Module::new(module.to_vec())?.invariant_dimension(deg, monomial_cap)
}

/// The skew matrix whose entries above the diagonal are the ten variables
/// of block `block`.
pub fn so5_generic_matrix(layout: VariableLayout, block: usize) -> PolyMatrix<Rational> {
    let mut a = PolyMatrix::zeros(5, layout);
    for (slot, (i, j)) in so5_pairs().enumerate() {
        let x = Poly::block_var(layout, block, slot);
        a.set(j, i, -&x);
        a.set(i, j, x);
    }
    a
}

/// `tr(A²)` and `tr(A⁴)` in the ten coordinates `x_ij`, `i < j`, of `so_5`.
pub fn so5_trace_invariants() -> (Poly, Poly) {
    let a = so5_generic_matrix(VariableLayout::single(10), 0);
    let a2 = a.mul(&a).expect("square");
    let a4 = a2.mul(&a2).expect("square");
    (a2.trace(), a4.trace())
}

fn trace_of(factors: &[&PolyMatrix<Rational>]) -> Poly {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter()
        .fold((*first).clone(), |acc, m| acc.mul(m).expect("square"))
        .trace()
}

/// Generators of the order-two polarization algebra of `so_5`, in the
/// order `tr B², tr BC, tr C², tr B⁴, tr B³C, 2 tr B²C² + tr (BC)², tr BC³,
/// tr C⁴`, where `B` and `C` are the two copies.
pub fn so5_pol2_generators() -> Vec<Poly> {
    let layout = VariableLayout::new(2, 10).expect("valid layout");
    let b = so5_generic_matrix(layout, 0);
    let c = so5_generic_matrix(layout, 1);
    let mixed = &trace_of(&[&b, &b, &c, &c]).scale(&int(2)) + &trace_of(&[&b, &c, &b, &c]);
    vec![
        trace_of(&[&b, &b]),
        trace_of(&[&b, &c]),
        trace_of(&[&c, &c]),
        trace_of(&[&b, &b, &b, &b]),
        trace_of(&[&b, &b, &b, &c]),
        mixed,
        trace_of(&[&b, &c, &c, &c]),
        trace_of(&[&c, &c, &c, &c]),
    ]
}

/// Rank of the Jacobian matrix of `polys` at `point`.
pub fn jacobian_rank(polys: &[Poly], point: &[Rational]) -> Result<usize> {
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let vars = first.layout().num_vars();
    check_len(vars, point.len())?;
    let rows = polys
        .iter()
        .map(|p| {
            if p.layout() != first.layout() {
                return Err(Error::LayoutMismatch("jacobian polynomials use different layouts".into()));
            }
            (0..vars).map(|j| p.derivative(j).evaluate(point)).collect()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    Ok(QMatrix::from_rows(rows)?.rank())
}

/// Dimension of the orbit of `(a_1, …, a_n)` under the adjoint action:
/// the rank of `x ↦ ([x, a_1], …, [x, a_n])` on the algebra.
pub fn generic_orbit_dimension(alg: &LieAlgebraBasis, point: &[QMatrix]) -> Result<usize> {
    for a in point {
        if a.rows() != alg.matrix_size() || alg.coordinates(a)?.is_none() {
            return Err(Error::InvalidInput(format!("point component is not in {}", alg.name())));
        }
    }
    if point.is_empty() {
        return Ok(0);
    }
    let rows = alg
        .basis()
        .iter()
        .map(|x| {
            point
                .iter()
                .map(|a| bracket(x, a).map(|m| flatten(&m)))
                .collect::<Result<Vec<_>>>()
                .map(|parts| parts.concat())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QMatrix::from_rows(rows)?.rank())
}

fn matrix_text(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

/// Certificate that the plane `{[[0,a,0],[b,0,a],[0,−b,0]]}` of `sl_3`
/// consists of nilpotent matrices yet generates all of `sl_3`.
#[derive(Clone, Debug, Serialize)]
pub struct Sl3Certificate {
    pub symbolic_matrix: Vec<Vec<String>>,
    pub principal_minor_sums: Vec<String>,
    pub nilpotent: bool,
    pub bracket: Vec<Vec<String>>,
    pub bracket_is_expected: bool,
    pub witness_non_nilpotent: bool,
    pub closure_dimension: usize,
    pub algebra_dimension: usize,
    pub probe: ProbeVerdict,
    pub conclusion: String,
}

impl Sl3Certificate {
    pub fn passed(&self) -> bool {
        self.nilpotent
            && self.bracket_is_expected
            && self.witness_non_nilpotent
            && self.closure_dimension == self.algebra_dimension
            && !self.probe.escaped()
    }
}

pub fn sl3_plane() -> (QMatrix, QMatrix) {
    let a = QMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    let b = QMatrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, -1, 0]]);
    (a, b)
}

pub fn certify_sl3(seed: u64) -> Result<Sl3Certificate> {
    let sl3 = LieAlgebraBasis::sl(3)?;
    let (a, b) = sl3_plane();
    let layout = VariableLayout::single(2);
    // a·A + b·B with a, b the two variables
    let mut symbolic = PolyMatrix::zeros(3, layout);
    for i in 0..3 {
        for j in 0..3 {
            let p = &Poly::var(layout, 0).scale(&a[(i, j)]) + &Poly::var(layout, 1).scale(&b[(i, j)]);
            symbolic.set(i, j, p);
        }
    }
    let sums = symbolic.principal_minor_sums();
    let h = bracket(&a, &b)?;
    let expected = QMatrix::from_ints(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 1]]);
    let plane = LieSubspace::new(sl3.clone(), vec![a.clone(), b.clone()])?;
    let closure = subalgebra_closure(&plane, None)?;
    let span = SubspaceSpec::new(9, vec![flatten(&a), flatten(&b)])?;
    let probe = span_probe_nullcone(
        |v| scalar_matrix_nilpotent(&QMatrix::from_vec(3, 3, v.to_vec())?),
        &span,
        DEFAULT_PROBE_TRIALS,
        seed,
    )?;
    let nilpotent = sums.iter().all(Poly::is_zero);
    let witness_non_nilpotent = !scalar_matrix_nilpotent(&h)?;
    let cert = Sl3Certificate {
        symbolic_matrix: (0..3)
            .map(|i| (0..3).map(|j| symbolic.get(i, j).to_string()).collect())
            .collect(),
        principal_minor_sums: sums.iter().map(ToString::to_string).collect(),
        nilpotent,
        bracket: matrix_text(&h),
        bracket_is_expected: h == expected,
        witness_non_nilpotent,
        closure_dimension: closure.len(),
        algebra_dimension: sl3.dimension(),
        probe,
        conclusion: String::new(),
    };
    let conclusion = if cert.passed() {
        "the plane lies in the nilpotent cone but generates sl3, which contains the semisimple diag(1,-2,1); \
         so the plane is nilpotent and not triangularizable"
    } else {
        "certificate failed"
    };
    Ok(Sl3Certificate {
        conclusion: conclusion.into(),
        ..cert
    })
}

/// Certificate that `so_5` has polarization index 1: the order-two
/// polarizations have fewer algebraically independent elements than the
/// transcendence degree of the full invariant field of two copies.
#[derive(Clone, Debug, Serialize)]
pub struct So5Certificate {
    pub seeds: Vec<u64>,
    pub generator_count: usize,
    pub generator_bidegrees: Vec<Vec<u32>>,
    pub jacobian_ranks: Vec<usize>,
    pub jacobian_rank: usize,
    pub orbit_dimensions: Vec<usize>,
    pub orbit_dimension: usize,
    pub ambient_dimension: usize,
    pub group_dimension: usize,
    pub invariant_transcendence_degree: usize,
    pub pol_ind: Option<u32>,
    pub conclusion: String,
}

impl So5Certificate {
    pub fn passed(&self) -> bool {
        self.generator_count == 8
            && self.jacobian_rank <= 8
            && self.orbit_dimension == self.group_dimension
            && self.jacobian_rank < self.invariant_transcendence_degree
            && self.pol_ind == Some(1)
    }
}

/// Runs the rank computations at three seeded integer points starting at `seed`.
pub fn certify_so5(seed: u64) -> Result<So5Certificate> {
    let so5 = LieAlgebraBasis::so5();
    let gens = so5_pol2_generators();
    let seeds: Vec<u64> = (0..SEED_COUNT).map(|k| seed.wrapping_add(k)).collect();
    let mut jacobian_ranks = Vec::new();
    let mut orbit_dimensions = Vec::new();
    for &s in &seeds {
        let mut r = rng(s);
        let b = so5.random_element(&mut r);
        let c = so5.random_element(&mut r);
        let coords: Vec<Rational> = [&b, &c]
            .iter()
            .flat_map(|m| so5_pairs().map(|(i, j)| m[(i, j)].clone()))
            .collect();
        jacobian_ranks.push(jacobian_rank(&gens, &coords)?);
        orbit_dimensions.push(generic_orbit_dimension(&so5, &[b, c])?);
    }
    let jacobian_rank = *jacobian_ranks.iter().max().unwrap_or(&0);
    let orbit_dimension = *orbit_dimensions.iter().max().unwrap_or(&0);
    let ambient_dimension = 2 * so5.dimension();
    let invariant_transcendence_degree = ambient_dimension - orbit_dimension;
    let not_integral = jacobian_rank < invariant_transcendence_degree;
    let conclusion = if not_integral {
        format!(
            "pol2 invariants have transcendence degree at most {jacobian_rank} < {invariant_transcendence_degree}, \
             so the invariants of two copies are not integral over them and pol ind(so5) = 1"
        )
    } else {
        "rank bound inconclusive".to_string()
    };
    Ok(So5Certificate {
        seeds,
        generator_count: gens.len(),
        generator_bidegrees: gens
            .iter()
            .map(|g| g.multidegree().map(|d| d.0).unwrap_or_default())
            .collect(),
        jacobian_ranks,
        jacobian_rank,
        orbit_dimensions,
        orbit_dimension,
        ambient_dimension,
        group_dimension: so5.dimension(),
        invariant_transcendence_degree,
        pol_ind: not_integral.then_some(1),
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::polarize;
    use crate::random::small_vector;

    fn e(i: usize, j: usize) -> QMatrix {
        elementary(3, i, j)
    }

    #[test]
    fn bracket_examples() {
        let h = e(0, 0).sub(&e(1, 1)).unwrap();
        assert_eq!(bracket(&e(0, 1), &e(1, 0)).unwrap(), h);
        assert!(bracket(&h, &h).unwrap().is_zero());
        let (a, b) = sl3_plane();
        assert_eq!(bracket(&a, &b).unwrap(), QMatrix::from_ints(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 1]]));
        assert!(bracket(&QMatrix::identity(2), &QMatrix::identity(3)).is_err());
    }

    #[test]
    fn algebra_construction() {
        for n in 2..=4 {
            let sl = LieAlgebraBasis::sl(n).unwrap();
            assert_eq!(sl.dimension(), n * n - 1);
            assert!(sl.basis().iter().all(|b| b.trace().is_zero()));
        }
        let so5 = LieAlgebraBasis::so5();
        assert_eq!(so5.dimension(), 10);
        for b in so5.basis() {
            assert_eq!(b.transpose(), b.scale(&int(-1)));
        }
        // upper triangular plus a lower entry is not closed
        let bad = vec![e(0, 1), e(1, 0)];
        assert!(LieAlgebraBasis::new("bad", 3, bad).is_err());
    }

    #[test]
    fn closure_examples() {
        let sl3 = LieAlgebraBasis::sl(3).unwrap();
        let span = |ms: Vec<QMatrix>| LieSubspace::new(sl3.clone(), ms).unwrap();
        assert_eq!(subalgebra_closure(&span(vec![e(0, 1)]), None).unwrap().len(), 1);
        let heis = subalgebra_closure(&span(vec![e(0, 1), e(1, 2)]), None).unwrap();
        assert_eq!(heis.len(), 3);
        let flat: Vec<Vec<Rational>> = heis.iter().map(flatten).collect();
        assert!(solve_in_span(&flat, &flatten(&e(0, 2))).unwrap().is_some());
        let (a, b) = sl3_plane();
        assert_eq!(subalgebra_closure(&span(vec![a.clone(), b.clone()]), None).unwrap().len(), 8);
        assert!(matches!(
            subalgebra_closure(&span(vec![a, b]), Some(4)),
            Err(Error::CapExceeded { .. })
        ));
        assert!(LieSubspace::new(sl3, vec![QMatrix::identity(3)]).is_err());
    }

    #[test]
    fn closure_basis_is_canonical() {
        let sl3 = LieAlgebraBasis::sl(3).unwrap();
        let one = LieSubspace::new(sl3.clone(), vec![e(0, 1), e(1, 2)]).unwrap();
        let other = LieSubspace::new(sl3, vec![e(1, 2).add(&e(0, 1)).unwrap(), e(1, 2).scale(&int(3))]).unwrap();
        assert_eq!(subalgebra_closure(&one, None).unwrap(), subalgebra_closure(&other, None).unwrap());
    }

    #[test]
    fn sl2_dimension_examples() {
        let cap = 20_000;
        for k in 1..=4 {
            assert_eq!(sl2_invariant_dimension(&[1], &MultiDegree(vec![k]), cap).unwrap(), 0);
        }
        assert_eq!(sl2_invariant_dimension(&[1, 1], &MultiDegree(vec![1, 1]), cap).unwrap(), 1);
        assert_eq!(sl2_invariant_dimension(&[2], &MultiDegree(vec![2]), cap).unwrap(), 1);
        for d in 1..=8 {
            assert_eq!(sl2_invariant_dimension(&[d], &MultiDegree(vec![1]), cap).unwrap(), 0);
        }
        assert!(sl2_invariant_dimension(&[0], &MultiDegree(vec![1]), cap).is_err());
        assert!(matches!(
            sl2_invariant_dimension(&[6], &MultiDegree(vec![8]), 10),
            Err(Error::CapExceeded { cap: "monomials", .. })
        ));
    }

    /// Classical counts: the invariants of binary cubics and quartics are
    /// generated by the discriminant (degree 4) and by `i`, `j` (degrees 2, 3).
    #[test]
    fn classical_binary_invariants() {
        let cap = 20_000;
        let dims = |d: u32, ks: &[u32]| -> Vec<usize> {
            ks.iter()
                .map(|&k| sl2_invariant_dimension(&[d], &MultiDegree(vec![k]), cap).unwrap())
                .collect()
        };
        assert_eq!(dims(3, &[1, 2, 3, 4, 8]), vec![0, 0, 0, 1, 1]);
        assert_eq!(dims(4, &[2, 3, 4, 5, 6]), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn determinant_of_two_linear_forms_is_invariant() {
        let m = Sl2Module::new(vec![1, 1]).unwrap();
        let v = |a, j| Poly::block_var(m.layout(), a, j);
        let det = &(&v(0, 0) * &v(1, 1)) - &(&v(0, 1) * &v(1, 0));
        for g in [Sl2Generator::E, Sl2Generator::F, Sl2Generator::H] {
            assert!(m.derive(g, &det).is_zero());
        }
    }

    #[test]
    fn derivations_satisfy_sl2_relations() {
        let m = Sl2Module::new(vec![3, 2]).unwrap();
        let mut r = rng(3);
        for deg in [vec![1, 0], vec![2, 1], vec![1, 2]] {
            let monos: Vec<Monomial> = monomials_of_multidegree(&m.layout(), &MultiDegree(deg))
                .into_iter()
                .filter(|x| !m.uses_padding(x))
                .collect();
            let coeffs = small_vector(&mut r, monos.len(), 5);
            let p = Poly::from_terms(m.layout(), monos.into_iter().zip(coeffs));
            let comm = |x, y| &m.derive(x, &m.derive(y, &p)) - &m.derive(y, &m.derive(x, &p));
            use Sl2Generator::*;
            assert_eq!(comm(E, F), m.derive(H, &p));
            assert_eq!(comm(H, E), m.derive(E, &p).scale(&int(2)));
            assert_eq!(comm(H, F), m.derive(F, &p).scale(&int(-2)));
        }
    }

    #[test]
    fn so5_traces() {
        let (t2, t4) = so5_trace_invariants();
        assert_eq!((t2.degree(), t4.degree()), (Some(2), Some(4)));
        let mut pt = vec![int(0); 10];
        pt[0] = int(1);
        assert_eq!(t2.evaluate(&pt).unwrap(), int(-2));
        assert_eq!(t4.evaluate(&pt).unwrap(), int(2));
    }

    #[test]
    fn trace_invariants_match_characteristic_polynomial() {
        // tr A² = −2 f₂ and tr A⁴ = 2 f₂² − 4 f₄ where det(tI − A) = t⁵ + f₂t³ + f₄t
        let a = so5_generic_matrix(VariableLayout::single(10), 0);
        let sums = a.principal_minor_sums();
        let (f2, f4) = (sums[1].clone(), sums[3].clone());
        assert!(sums[0].is_zero() && sums[2].is_zero() && sums[4].is_zero());
        let (t2, t4) = so5_trace_invariants();
        assert_eq!(t2, f2.scale(&int(-2)));
        assert_eq!(t4, &(&f2 * &f2).scale(&int(2)) - &f4.scale(&int(4)));
    }

    #[test]
    fn pol2_generators_shape() {
        let gens = so5_pol2_generators();
        assert_eq!(gens.len(), 8);
        let bidegrees: Vec<Vec<u32>> = gens.iter().map(|g| g.multidegree().unwrap().0).collect();
        assert_eq!(
            bidegrees,
            vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![4, 0], vec![3, 1], vec![2, 2], vec![1, 3], vec![0, 4]]
        );
        // B = C identifies tr(BC) with tr(B²)
        let mut r = rng(5);
        let coords = small_vector(&mut r, 10, 9);
        let doubled: Vec<Rational> = coords.iter().chain(&coords).cloned().collect();
        assert_eq!(gens[1].evaluate(&doubled).unwrap(), gens[0].evaluate(&doubled).unwrap());
    }

    #[test]
    fn polarized_traces_split_into_listed_pieces() {
        let gens = so5_pol2_generators();
        let (t2, t4) = so5_trace_invariants();
        let p2 = polarize(&t2, 2).unwrap();
        let p4 = polarize(&t4, 2).unwrap();
        let piece = |map: &BTreeMap<MultiDegree, Poly>, d: [u32; 2]| map[&MultiDegree(d.to_vec())].clone();
        // tr((α₁B + α₂C)²) = α₁² tr B² + 2α₁α₂ tr BC + α₂² tr C²
        assert_eq!(p2.len(), 3);
        assert_eq!(piece(&p2, [2, 0]), gens[0]);
        assert_eq!(piece(&p2, [1, 1]), gens[1].scale(&int(2)));
        assert_eq!(piece(&p2, [0, 2]), gens[2]);
        assert_eq!(p4.len(), 5);
        assert_eq!(piece(&p4, [4, 0]), gens[3]);
        assert_eq!(piece(&p4, [3, 1]), gens[4].scale(&int(4)));
        assert_eq!(piece(&p4, [2, 2]), gens[5].scale(&int(2)));
        assert_eq!(piece(&p4, [1, 3]), gens[6].scale(&int(4)));
        assert_eq!(piece(&p4, [0, 4]), gens[7]);
    }

    #[test]
    fn jacobian_examples() {
        let lay = VariableLayout::single(2);
        let x = Poly::var(lay, 0);
        let y = Poly::var(lay, 1);
        assert_eq!(jacobian_rank(&[&x * &x, &y * &y], &[int(1), int(1)]).unwrap(), 2);
        assert_eq!(jacobian_rank(&[x.clone(), x.scale(&int(2))], &[int(3), int(-4)]).unwrap(), 1);
        assert!(jacobian_rank(&[x], &[int(1)]).is_err());
    }

    #[test]
    fn orbit_examples() {
        let sl2 = LieAlgebraBasis::sl(2).unwrap();
        let h = QMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(generic_orbit_dimension(&sl2, &[h]).unwrap(), 2);
        assert_eq!(generic_orbit_dimension(&sl2, &[QMatrix::zeros(2, 2)]).unwrap(), 0);
        let so5 = LieAlgebraBasis::so5();
        assert_eq!(generic_orbit_dimension(&so5, &[QMatrix::zeros(5, 5), QMatrix::zeros(5, 5)]).unwrap(), 0);
        assert!(generic_orbit_dimension(&sl2, &[QMatrix::identity(2)]).is_err());
    }

    #[test]
    fn sl3_certificate() {
        let cert = certify_sl3(1).unwrap();
        assert!(cert.nilpotent && cert.witness_non_nilpotent && cert.bracket_is_expected);
        assert_eq!(cert.closure_dimension, 8);
        assert!(cert.passed());
        assert_eq!(cert.principal_minor_sums, vec!["0", "0", "0"]);
    }

    #[test]
    fn so5_certificate() {
        let cert = certify_so5(crate::random::DEFAULT_SEED).unwrap();
        assert_eq!(cert.generator_count, 8);
        assert!(cert.jacobian_ranks.iter().all(|&r| r <= 8));
        assert_eq!(cert.orbit_dimension, 10);
        assert_eq!(cert.invariant_transcendence_degree, 10);
        assert_eq!(cert.pol_ind, Some(1));
        assert!(cert.passed());
    }
}
