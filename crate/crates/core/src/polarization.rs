//! Classical polarization of invariants and the subalgebra the polarizations
//! generate, examined one multidegree at a time.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{DiagonalAction, Family};
use crate::poly::{MultiDegree, SparseEchelon, VariableLayout};
use crate::random::{rng, small_vector};
use crate::{Caps, Poly, QVector, Rational};

pub const DEFAULT_SPAN_PRODUCT_CAP: usize = 50_000;

/// All classical polarizations `f_I` of `f` on `copies` copies of its module.
///
/// `f(α_1 v_1 + … + α_n v_n) = Σ_I α^I f_I(v_1, …, v_n)`. Substituting
/// `x_j ↦ Σ_a t_a x_{a,j}` makes the `t`-degree of every term equal to its
/// block multidegree, so the components are read off after `t = 1`.
/// Coefficients are not multinomially normalized.
pub fn polarize(f: &Poly, copies: usize) -> Result<BTreeMap<MultiDegree, Poly>> {
    let source = f.layout();
    if source.blocks() != 1 {
        return Err(Error::InvalidInput(format!(
            "polarization expects a polynomial on one copy, got {} blocks",
            source.blocks()
        )));
    }
    let target = source.with_blocks(copies)?;
    let images = (0..source.vars_per_block())
        .map(|j| {
            let sum = (0..copies).fold(Poly::zero(target), |acc, a| &acc + &Poly::block_var(target, a, j));
            (j, sum)
        })
        .collect();
    Ok(f.substitute(&images)?.multidegree_components())
}

/// A multihomogeneous generator together with its multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub poly: Poly,
    pub degree: MultiDegree,
}

/// Multihomogeneous generators of a subalgebra of `k[V^{⊕n}]`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    layout: VariableLayout,
    generators: Vec<Generator>,
}

impl GeneratorSet {
    /// Builds a set from multihomogeneous polynomials, dropping zeros,
    /// constants and exact scalar multiples of earlier entries.
    pub fn new(layout: VariableLayout, polys: impl IntoIterator<Item = Poly>) -> Result<Self> {
        let mut set = GeneratorSet {
            layout,
            generators: Vec::new(),
        };
        for p in polys {
            set.push(p)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, poly: Poly) -> Result<()> {
        if poly.layout() != &self.layout {
            return Err(Error::LayoutMismatch("generator outside the set's layout".into()));
        }
        if poly.is_zero() {
            return Ok(());
        }
        let degree = poly
            .multidegree()
            .ok_or_else(|| Error::InvalidInput(format!("generator {poly} is not multihomogeneous")))?;
        if degree.is_zero() {
            return Ok(());
        }
        let monic = poly.monic();
        if self.generators.iter().any(|g| g.degree == degree && g.poly.monic() == monic) {
            return Ok(());
        }
        self.generators.push(Generator { poly, degree });
        Ok(())
    }

    pub fn layout(&self) -> VariableLayout {
        self.layout
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// All exponent tuples `e` with `Σ e_i·deg_i = target`, in a fixed order.
    pub fn exponent_tuples(&self, target: &MultiDegree, cap: usize) -> Result<Vec<Vec<u32>>> {
        fn go(
            gens: &[Generator],
            i: usize,
            remaining: &MultiDegree,
            current: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
            cap: usize,
        ) -> Result<()> {
            if i == gens.len() {
                if remaining.is_zero() {
                    if out.len() == cap {
                        return Err(Error::CapExceeded {
                            what: "graded span",
                            cap: "span_products",
                            limit: cap,
                        });
                    }
                    out.push(current.clone());
                }
                return Ok(());
            }
            let mut rem = remaining.clone();
            let mut e = 0;
            loop {
                current.push(e);
                go(gens, i + 1, &rem, current, out, cap)?;
                current.pop();
                match rem.checked_sub(&gens[i].degree) {
                    Some(r) => rem = r,
                    None => break,
                }
                e += 1;
            }
            Ok(())
        }
        if target.blocks() != self.layout.blocks() {
            return Err(Error::DimensionMismatch {
                expected: self.layout.blocks(),
                found: target.blocks(),
            });
        }
        let mut out = Vec::new();
        go(&self.generators, 0, target, &mut Vec::new(), &mut out, cap)?;
        Ok(out)
    }

    /// `∏ g_i^{e_i}`.
    pub fn product(&self, exponents: &[u32]) -> Poly {
        self.generators
            .iter()
            .zip(exponents)
            .filter(|(_, &e)| e > 0)
            .fold(Poly::one(self.layout), |acc, (g, &e)| &acc * &g.poly.pow(e))
    }
}

/// Polarizations of every input invariant on `copies` copies, de-duplicated
/// up to scalars.
pub fn polarization_generators(invariants: &[Poly], copies: usize) -> Result<GeneratorSet> {
    let Some(first) = invariants.first() else {
        return Err(Error::InvalidInput("no invariants to polarize".into()));
    };
    let layout = first.layout().with_blocks(copies)?;
    let mut set = GeneratorSet::new(layout, [])?;
    for f in invariants {
        for (_, component) in polarize(f, copies)? {
            set.push(component)?;
        }
    }
    Ok(set)
}

/// The classical generators of `k[V]^G` for the builtin reflection groups:
/// power sums `p_1..p_m` for `S_m`; `Σ x_i^{2s}` for `B_m`; for `D_m` the same
/// with `s ≤ m−1` plus `x_1⋯x_m`.
pub fn classical_invariants(family: Family, m: usize) -> Vec<Poly> {
    let layout = VariableLayout::single(m);
    let power_sum = |e: u32| {
        (0..m).fold(Poly::zero(layout), |acc, i| &acc + &Poly::var(layout, i).pow(e))
    };
    match family {
        Family::S => (1..=m as u32).map(power_sum).collect(),
        Family::B => (1..=m as u32).map(|s| power_sum(2 * s)).collect(),
        Family::D => {
            let mut gens: Vec<Poly> = (1..m as u32).map(|s| power_sum(2 * s)).collect();
            gens.push((0..m).fold(Poly::one(layout), |acc, i| &acc * &Poly::var(layout, i)));
            gens
        }
    }
}

/// `P_r(f) = Σ_i y_i^r ∂f/∂x_i` on two copies; `r` must be odd.
pub fn wallach_operator(r: u32, f: &Poly) -> Result<Poly> {
    if r.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("P_r needs odd r, got {r}")));
    }
    let layout = *f.layout();
    if layout.blocks() != 2 {
        return Err(Error::InvalidInput("P_r acts on polynomials over two copies".into()));
    }
    let mut out = Poly::zero(layout);
    for i in 0..layout.vars_per_block() {
        let d = f.derivative(layout.index(0, i));
        if !d.is_zero() {
            out = &out + &(&Poly::block_var(layout, 1, i).pow(r) * &d);
        }
    }
    Ok(out)
}

/// One multidegree slice of the subalgebra generated by a [`GeneratorSet`].
#[derive(Clone, Debug)]
pub struct GradedSpan {
    pub multidegree: MultiDegree,
    /// Reduced echelon basis, largest leading monomial first.
    pub basis: Vec<Poly>,
    pub dimension: usize,
}

struct ProductSpan {
    tuples: Vec<Vec<u32>>,
    echelon: SparseEchelon<crate::poly::Monomial, Rational>,
}

fn product_span(gens: &GeneratorSet, target: &MultiDegree, cap: usize, track: bool) -> Result<ProductSpan> {
    let tuples = gens.exponent_tuples(target, cap)?;
    let mut echelon = if track { SparseEchelon::tracking() } else { SparseEchelon::new() };
    // powers[i][e] = g_i^e, filled lazily
    let mut powers: Vec<Vec<Poly>> = vec![vec![Poly::one(gens.layout())]; gens.len()];
    for t in &tuples {
        let mut prod = Poly::one(gens.layout());
        for (i, &e) in t.iter().enumerate() {
            while powers[i].len() <= e as usize {
                let next = &powers[i][powers[i].len() - 1] * &gens.generators[i].poly;
                powers[i].push(next);
            }
            if e > 0 {
                prod = &prod * &powers[i][e as usize];
            }
        }
        echelon.insert(prod.terms());
    }
    Ok(ProductSpan { tuples, echelon })
}

/// Basis of the span of all generator products of multidegree `target`.
pub fn graded_span_basis(gens: &GeneratorSet, target: &MultiDegree, cap: usize) -> Result<GradedSpan> {
    let span = product_span(gens, target, cap, false)?;
    let basis: Vec<Poly> = span
        .echelon
        .reduced_basis()
        .into_iter()
        .map(|terms| Poly::from_terms(gens.layout(), terms))
        .collect();
    Ok(GradedSpan {
        multidegree: target.clone(),
        dimension: basis.len(),
        basis,
    })
}

/// `f = Σ coefficient · ∏ g_i^{exponents_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub terms: Vec<CertificateTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateTerm {
    pub exponents: Vec<u32>,
    #[serde(serialize_with = "crate::polarization::ser_rational")]
    pub coefficient: Rational,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl MembershipCertificate {
    /// Expands the certificate back into a polynomial.
    pub fn reconstruct(&self, gens: &GeneratorSet) -> Poly {
        self.terms.iter().fold(Poly::zero(gens.layout()), |acc, t| {
            &acc + &gens.product(&t.exponents).scale(&t.coefficient)
        })
    }
}

/// Decides whether multihomogeneous `f` lies in the generated subalgebra and,
/// if so, returns an explicit combination of generator products.
pub fn membership(f: &Poly, gens: &GeneratorSet, cap: usize) -> Result<Option<MembershipCertificate>> {
    if f.layout() != &gens.layout() {
        return Err(Error::LayoutMismatch("polynomial and generators use different layouts".into()));
    }
    if f.is_zero() {
        return Ok(Some(MembershipCertificate { terms: Vec::new() }));
    }
    let degree = f
        .multidegree()
        .ok_or_else(|| Error::InvalidInput(format!("{f} is not multihomogeneous")))?;
    let span = product_span(gens, &degree, cap, true)?;
    let Some(combination) = span.echelon.express(f.terms()) else {
        return Ok(None);
    };
    let terms = combination
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| CertificateTerm {
            exponents: span.tuples[i].clone(),
            coefficient: c,
        })
        .collect();
    Ok(Some(MembershipCertificate { terms }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub multidegree: Vec<u32>,
    pub dim_invariants: usize,
    pub dim_pol_span: usize,
}

impl ComparisonRow {
    pub fn equal(&self) -> bool {
        self.dim_invariants == self.dim_pol_span
    }
}

/// Compares `dim k[V^{⊕n}]^G_λ` with the polarization algebra's dimension in
/// every multidegree `λ` of total degree at most `max_total_degree`.
///
/// `invariants` must generate `k[V]^G` in the degrees involved.
pub fn compare_graded_dims(
    action: &DiagonalAction,
    invariants: &[Poly],
    max_total_degree: u32,
    caps: &Caps,
) -> Result<Vec<ComparisonRow>> {
    let gens = polarization_generators(invariants, action.layout().blocks())?;
    MultiDegree::all_up_to(action.layout().blocks(), max_total_degree)
        .into_iter()
        .map(|deg| {
            Ok(ComparisonRow {
                dim_invariants: action.invariant_dimension(&deg, caps.monomials)?,
                dim_pol_span: graded_span_basis(&gens, &deg, caps.span_products)?.dimension,
                multidegree: deg.0,
            })
        })
        .collect()
}

/// Outcome of [`separation_test`].
#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    pub seed: u64,
    pub trials: usize,
    pub separated: usize,
    /// Random pairs discarded because they happened to share an orbit.
    pub redraws: usize,
    /// Pairs in distinct orbits on which every generator agreed.
    pub counterexamples: Vec<(Vec<String>, Vec<String>)>,
    pub control_pairs: usize,
    /// Same-orbit pairs on which some generator disagreed (must be zero for invariants).
    pub control_failures: usize,
}

impl SeparationReport {
    pub fn passed(&self) -> bool {
        self.separated == self.trials && self.counterexamples.is_empty() && self.control_failures == 0
    }
}

fn values(gens: &GeneratorSet, v: &[Rational]) -> Result<Vec<Rational>> {
    gens.generators().iter().map(|g| g.poly.evaluate(v)).collect()
}

/// Draws seeded pairs of points of `V^{⊕n}` (integer entries in −9..=9) in
/// distinct orbits and checks that some generator takes different values on
/// them; also checks `trials` same-orbit control pairs `(v, g·v)`.
pub fn separation_test(action: &DiagonalAction, gens: &GeneratorSet, trials: usize, seed: u64) -> Result<SeparationReport> {
    use rand::Rng;
    if gens.layout() != action.layout() {
        return Err(Error::LayoutMismatch("generators do not live on the action's module".into()));
    }
    let n = action.layout().num_vars();
    let mut rng = rng(seed);
    let show = |v: &QVector| v.iter().map(Rational::to_string).collect::<Vec<_>>();
    let mut report = SeparationReport {
        seed,
        trials,
        separated: 0,
        redraws: 0,
        counterexamples: Vec::new(),
        control_pairs: 0,
        control_failures: 0,
    };
    let mut done = 0;
    while done < trials {
        let v = small_vector(&mut rng, n, 9);
        let w = small_vector(&mut rng, n, 9);
        if action.same_orbit(&v, &w)? {
            report.redraws += 1;
            continue;
        }
        done += 1;
        if values(gens, &v)? != values(gens, &w)? {
            report.separated += 1;
        } else {
            report.counterexamples.push((show(&v), show(&w)));
        }
    }
    for _ in 0..trials {
        let v = small_vector(&mut rng, n, 9);
        let g = &action.group().elements()[rng.gen_range(0..action.group().order())];
        let w = action.act_on_point(g, &v)?;
        report.control_pairs += 1;
        if values(gens, &v)? != values(gens, &w)? {
            report.control_failures += 1;
        }
    }
    Ok(report)
}

/// Sum of the polarized generators evaluated at `Σ α_a v_a`, for identity checks.
pub fn polarization_identity_holds(f: &Poly, copies: usize, points: &[QVector], scalars: &[Rational]) -> Result<bool> {
    let m = f.layout().vars_per_block();
    if points.len() != copies || scalars.len() != copies {
        return Err(Error::DimensionMismatch {
            expected: copies,
            found: points.len().min(scalars.len()),
        });
    }
    let mut combined = vec![Rational::zero(); m];
    for (p, a) in points.iter().zip(scalars) {
        crate::error::check_len(m, p.len())?;
        for (c, x) in combined.iter_mut().zip(p) {
            *c = c.clone() + a.clone() * x.clone();
        }
    }
    let lhs = f.evaluate(&combined)?;
    let flat: QVector = points.concat();
    let mut rhs = Rational::zero();
    for (deg, comp) in polarize(f, copies)? {
        let weight = deg
            .0
            .iter()
            .zip(scalars)
            .fold(Rational::one(), |acc, (&e, a)| acc * num_traits::pow(a.clone(), e as usize));
        rhs += weight * comp.evaluate(&flat)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::MatrixGroup;
    use crate::poly::parse_poly_in;
    use crate::scalar::int;
    use std::sync::Arc;

    fn lay(blocks: usize, m: usize) -> VariableLayout {
        VariableLayout::new(blocks, m).unwrap()
    }

    fn p(t: &str, l: VariableLayout) -> Poly {
        parse_poly_in(t, l).unwrap()
    }

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    #[test]
    fn polarize_square() {
        let comps = polarize(&p("x1^2", lay(1, 1)), 2).unwrap();
        let two = lay(2, 1);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[&md(&[2, 0])], p("x1^2", two));
        assert_eq!(comps[&md(&[1, 1])], p("2*x1*y1", two));
        assert_eq!(comps[&md(&[0, 2])], p("y1^2", two));
    }

    #[test]
    fn polarize_product_and_sum_of_squares() {
        let two = lay(2, 2);
        let comps = polarize(&p("x1*x2", lay(1, 2)), 2).unwrap();
        assert_eq!(comps[&md(&[1, 1])], p("x1*y2 + x2*y1", two));
        let comps = polarize(&p("x1^2 + x2^2", lay(1, 2)), 2).unwrap();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[&md(&[2, 0])], p("x1^2 + x2^2", two));
        assert_eq!(comps[&md(&[1, 1])], p("2*x1*y1 + 2*x2*y2", two));
        assert_eq!(comps[&md(&[0, 2])], p("y1^2 + y2^2", two));
    }

    #[test]
    fn first_component_is_the_original() {
        let f = p("x1^3 - 2*x1*x2^2 + x3^3", lay(1, 3));
        let comps = polarize(&f, 3).unwrap();
        let three = lay(3, 3);
        assert_eq!(comps[&md(&[3, 0, 0])], f.relabel(three, |v| v));
        for (deg, c) in &comps {
            assert_eq!(deg.total(), 3);
            assert_eq!(c.multidegree().as_ref(), Some(deg));
        }
    }

    #[test]
    fn polarize_rejects_multi_block_input() {
        assert!(polarize(&p("x1*y1", lay(2, 1)), 2).is_err());
    }

    #[test]
    fn generator_counts() {
        let gens = polarization_generators(&[p("x1^2", lay(1, 1))], 2).unwrap();
        let degs: Vec<_> = gens.generators().iter().map(|g| g.degree.clone()).collect();
        assert_eq!(degs, vec![md(&[0, 2]), md(&[1, 1]), md(&[2, 0])]);
        assert_eq!(polarization_generators(&classical_invariants(Family::B, 2), 2).unwrap().len(), 8);
        let sigma4 = classical_invariants(Family::D, 4).pop().unwrap();
        let gens = polarization_generators(&[sigma4], 2).unwrap();
        let degs: Vec<_> = gens.generators().iter().map(|g| g.degree.0.clone()).collect();
        assert_eq!(degs.len(), 5);
        for d in [[4, 0], [3, 1], [2, 2], [1, 3], [0, 4]] {
            assert!(degs.contains(&d.to_vec()));
        }
    }

    #[test]
    fn scalar_multiples_are_dropped() {
        let l = lay(1, 2);
        let set = GeneratorSet::new(l, [p("x1^2 + x2^2", l), p("3*x1^2 + 3*x2^2", l), p("0", l), p("5", l)]).unwrap();
        assert_eq!(set.len(), 1);
        assert!(GeneratorSet::new(l, [p("x1 + x2^2", l)]).is_err());
    }

    #[test]
    fn wallach_examples() {
        let two = lay(2, 2);
        assert_eq!(wallach_operator(1, &p("x1*x2", two)).unwrap(), p("y1*x2 + x1*y2", two));
        assert_eq!(
            wallach_operator(3, &p("x1^4 + x2^4", two)).unwrap(),
            p("4*y1^3*x1^3 + 4*y2^3*x2^3", two)
        );
        assert!(wallach_operator(2, &p("x1", two)).is_err());
        assert!(wallach_operator(1, &p("x1", lay(1, 2))).is_err());
    }

    #[test]
    fn double_wallach_on_sigma4() {
        // P1 P1 (x1 x2 x3 x4) = 2 Σ_{i<j} y_i y_j Π_{k∉{i,j}} x_k, expanded by hand
        let four = lay(2, 4);
        let sigma = p("x1*x2*x3*x4", four);
        let twice = wallach_operator(1, &wallach_operator(1, &sigma).unwrap()).unwrap();
        let expected = p(
            "2*y1*y2*x3*x4 + 2*y1*y3*x2*x4 + 2*y1*y4*x2*x3 + 2*y2*y3*x1*x4 + 2*y2*y4*x1*x3 + 2*y3*y4*x1*x2",
            four,
        );
        assert_eq!(twice, expected);
    }

    #[test]
    fn span_examples() {
        let one = lay(1, 1);
        let gens = GeneratorSet::new(one, [p("x1^2", one)]).unwrap();
        let span = graded_span_basis(&gens, &md(&[4]), DEFAULT_SPAN_PRODUCT_CAP).unwrap();
        assert_eq!(span.dimension, 1);
        assert_eq!(span.basis, vec![p("x1^4", one)]);
        assert_eq!(graded_span_basis(&gens, &md(&[3]), DEFAULT_SPAN_PRODUCT_CAP).unwrap().dimension, 0);

        let xy = lay(1, 2);
        let gens = GeneratorSet::new(xy, [p("x1", xy), p("x2", xy)]).unwrap();
        assert_eq!(graded_span_basis(&gens, &md(&[2]), DEFAULT_SPAN_PRODUCT_CAP).unwrap().dimension, 3);
        assert_eq!(graded_span_basis(&gens, &md(&[0]), DEFAULT_SPAN_PRODUCT_CAP).unwrap().dimension, 1);
    }

    #[test]
    fn span_cap_is_enforced() {
        let xy = lay(1, 2);
        let gens = GeneratorSet::new(xy, [p("x1", xy), p("x2", xy)]).unwrap();
        let err = graded_span_basis(&gens, &md(&[6]), 3).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: "span_products", .. }));
    }

    #[test]
    fn redundant_generators_leave_spans_unchanged() {
        let gens = polarization_generators(&classical_invariants(Family::B, 2), 2).unwrap();
        let mut bigger = gens.clone();
        let extra = &gens.generators()[0].poly * &gens.generators()[1].poly;
        bigger.push(extra).unwrap();
        for deg in MultiDegree::all_up_to(2, 5) {
            assert_eq!(
                graded_span_basis(&gens, &deg, DEFAULT_SPAN_PRODUCT_CAP).unwrap().basis,
                graded_span_basis(&bigger, &deg, DEFAULT_SPAN_PRODUCT_CAP).unwrap().basis,
            );
        }
    }

    #[test]
    fn membership_of_square_power() {
        let one = lay(1, 1);
        let gens = GeneratorSet::new(one, [p("x1^2", one)]).unwrap();
        let cert = membership(&p("3*x1^4", one), &gens, DEFAULT_SPAN_PRODUCT_CAP).unwrap().unwrap();
        assert_eq!(cert.terms, vec![CertificateTerm { exponents: vec![2], coefficient: int(3) }]);
        assert!(membership(&p("x1^3", one), &gens, DEFAULT_SPAN_PRODUCT_CAP).unwrap().is_none());
        assert!(membership(&p("x1^2 + x1", one), &gens, DEFAULT_SPAN_PRODUCT_CAP).is_err());
    }

    #[test]
    fn polarizations_of_invariants_are_invariant() {
        for (family, m) in [(Family::S, 3), (Family::B, 3), (Family::D, 4)] {
            let action = DiagonalAction::new(Arc::new(MatrixGroup::builtin(family, m).unwrap()), 2).unwrap();
            let gens = polarization_generators(&classical_invariants(family, m), 2).unwrap();
            for g in gens.generators() {
                assert!(action.is_invariant(&g.poly).unwrap(), "{family}_{m}: {}", g.poly);
            }
        }
    }

    #[test]
    fn separation_examples() {
        let s2 = DiagonalAction::new(Arc::new(MatrixGroup::builtin(Family::S, 2).unwrap()), 1).unwrap();
        let gens = polarization_generators(&classical_invariants(Family::S, 2), 1).unwrap();
        let v = values(&gens, &[int(1), int(2)]).unwrap();
        let w = values(&gens, &[int(1), int(3)]).unwrap();
        assert_ne!(v, w);
        let report = separation_test(&s2, &gens, 20, 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn compare_s2() {
        let action = DiagonalAction::new(Arc::new(MatrixGroup::builtin(Family::S, 2).unwrap()), 2).unwrap();
        let rows = compare_graded_dims(&action, &classical_invariants(Family::S, 2), 4, &Caps::default()).unwrap();
        assert_eq!(rows.len(), 15);
        assert!(rows.iter().all(ComparisonRow::equal));
    }
}
