//! Nullcone membership: torus modules through strictly separating
//! cocharacters, binary forms through Hilbert's multiplicity criterion,
//! symbolic nilpotency, and one-sided probing of linear spans.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::kernel::strict_positive_functional;
use crate::poly::{homogeneous_bivariate_gcd, Monomial, PolyMatrix, VariableLayout};
use crate::random::rng;
use crate::scalar::{int, RationalText};
use crate::{Poly, QMatrix, Rational};

pub const DEFAULT_PROBE_TRIALS: usize = 64;
const PROBE_BOUND: i64 = 9;

/// A diagonal torus module: coordinate `i` of `V` has integer weight `weights[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSystem {
    pub torus_rank: usize,
    pub weights: Vec<Vec<i64>>,
}

impl WeightSystem {
    pub fn new(torus_rank: usize, weights: Vec<Vec<i64>>) -> Result<Self> {
        for w in &weights {
            check_len(torus_rank, w.len())?;
        }
        Ok(WeightSystem { torus_rank, weights })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let ws: WeightSystem =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("torus spec: {e}")))?;
        Self::new(ws.torus_rank, ws.weights)
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    fn weight(&self, i: usize) -> Vec<Rational> {
        self.weights[i].iter().map(|&w| int(w)).collect()
    }

    fn pairing(&self, gamma: &Cocharacter, i: usize) -> i64 {
        gamma.gamma.iter().zip(&self.weights[i]).map(|(g, w)| g * w).sum()
    }

    fn functional_for(&self, support: &BTreeSet<usize>) -> Result<Option<Cocharacter>> {
        let points: Vec<Vec<Rational>> = support.iter().map(|&i| self.weight(i)).collect();
        strict_positive_functional(&points, self.torus_rank)?
            .map(|g| Cocharacter::from_integral(&g))
            .transpose()
    }
}

/// A one-parameter subgroup `t ↦ (t^{γ_1}, …, t^{γ_r})` of the torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocharacter {
    pub gamma: Vec<i64>,
}

impl Cocharacter {
    fn from_integral(g: &[Rational]) -> Result<Self> {
        let gamma = g
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return Err(Error::InvalidInput(format!("non-integral cocharacter entry {c}")));
                }
                i64::try_from(c.to_integer())
                    .map_err(|_| Error::InvalidInput(format!("cocharacter entry {c} overflows i64")))
            })
            .collect::<Result<_>>()?;
        Ok(Cocharacter { gamma })
    }
}

/// Indices of the coordinates whose weight pairs positively with `gamma`;
/// their span is the subspace `t·v → 0` as `t → 0`.
pub fn v_gamma(ws: &WeightSystem, gamma: &Cocharacter) -> BTreeSet<usize> {
    (0..ws.dim()).filter(|&i| ws.pairing(gamma, i) > 0).collect()
}

/// A cocharacter driving `v` to zero, or `None` when `v` lies outside the
/// nullcone. The zero vector gets the all-ones cocharacter.
pub fn torus_nullcone_member(ws: &WeightSystem, v: &[Rational]) -> Result<Option<Cocharacter>> {
    check_len(ws.dim(), v.len())?;
    let support = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    ws.functional_for(&support)
}

/// A linear subspace of `k^ambient_dim` given by spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceSpec {
    pub ambient_dim: usize,
    pub spanning_vectors: Vec<Vec<Rational>>,
}

impl SubspaceSpec {
    pub fn new(ambient_dim: usize, spanning_vectors: Vec<Vec<Rational>>) -> Result<Self> {
        for v in &spanning_vectors {
            check_len(ambient_dim, v.len())?;
        }
        Ok(SubspaceSpec {
            ambient_dim,
            spanning_vectors,
        })
    }

    pub fn combination(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, v) in coeffs.iter().zip(&self.spanning_vectors) {
            for (o, x) in out.iter_mut().zip(v) {
                *o += c * x;
            }
        }
        out
    }
}

/// A single cocharacter whose positive part contains the whole subspace.
pub fn subspace_in_common_vgamma(ws: &WeightSystem, l: &SubspaceSpec) -> Result<Option<Cocharacter>> {
    check_len(ws.dim(), l.ambient_dim)?;
    let support = l
        .spanning_vectors
        .iter()
        .flat_map(|v| (0..v.len()).filter(|&i| !v[i].is_zero()))
        .collect();
    ws.functional_for(&support)
}

/// A binary form `Σ c_i x^{d−i} y^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BinaryFormText {
    degree: u32,
    coeffs: Vec<RationalText>,
}

impl BinaryForm {
    pub fn new(degree: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInput("binary forms need degree at least 1".into()));
        }
        check_len(degree as usize + 1, coeffs.len())?;
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BinaryFormText =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("binary form spec: {e}")))?;
        let coeffs = raw.coeffs.iter().map(RationalText::value).collect::<Result<_>>()?;
        Self::new(raw.degree, coeffs)
    }

    /// Reads a homogeneous polynomial in two variables.
    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.layout().num_vars() != 2 {
            return Err(Error::LayoutMismatch("binary forms live in two variables".into()));
        }
        let degree = p
            .degree()
            .filter(|_| p.is_homogeneous())
            .ok_or_else(|| Error::InvalidInput("binary form must be a nonzero homogeneous polynomial".into()))?;
        let coeffs = (0..=degree)
            .map(|i| p.coefficient(&Monomial::from_exponents(vec![degree - i, i])))
            .collect();
        Self::new(degree, coeffs)
    }

    pub fn layout() -> VariableLayout {
        VariableLayout::single(2)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> Poly {
        let d = self.degree;
        Poly::from_terms(
            Self::layout(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::from_exponents(vec![d - i as u32, i as u32]), c.clone())),
        )
    }

    /// Hilbert's bound: members have a linear factor of multiplicity at least this.
    pub fn critical_multiplicity(&self) -> u32 {
        self.degree / 2 + 1
    }

    /// Gcd of all partial derivatives of order `m − 1`; its roots are
    /// exactly the roots of multiplicity at least `m`.
    fn high_multiplicity_part(&self) -> Result<Poly> {
        let f = self.to_poly();
        let order = self.critical_multiplicity() - 1;
        let partials: Vec<Poly> = (0..=order)
            .map(|a| {
                let mut p = f.clone();
                for _ in 0..a {
                    p = p.derivative(0);
                }
                for _ in a..order {
                    p = p.derivative(1);
                }
                p
            })
            .collect();
        homogeneous_bivariate_gcd(&partials)
    }
}

pub fn binary_form_nullcone_member(f: &BinaryForm) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(f.high_multiplicity_part()?.degree().unwrap_or(0) > 0)
}

/// The linear form `l` with `l^m | f` for a nullcone member, normalized
/// to `x + c·y` or to `y`.
pub fn binary_nullcone_witness(f: &BinaryForm) -> Result<Option<Poly>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("the zero form has no distinguished line".into()));
    }
    let g = f.high_multiplicity_part()?;
    let k = g.degree().unwrap_or(0);
    if k == 0 {
        return Ok(None);
    }
    let layout = BinaryForm::layout();
    let lead = g.coefficient(&Monomial::from_exponents(vec![k, 0]));
    let l = if lead.is_zero() {
        Poly::var(layout, 1)
    } else {
        // g = lead·(x + c·y)^k, so the x^{k−1}y coefficient is lead·k·c
        let next = g.coefficient(&Monomial::from_exponents(vec![k - 1, 1]));
        let c = next / (lead * int(i64::from(k)));
        &Poly::var(layout, 0) + &Poly::var(layout, 1).scale(&c)
    };
    let power = l.pow(f.critical_multiplicity());
    match f.to_poly().div_exact(&power)? {
        Some(_) => Ok(Some(l)),
        None => Err(Error::InvalidInput(format!(
            "internal check failed: ({l})^{} does not divide the form",
            f.critical_multiplicity()
        ))),
    }
}

/// Symbolic nilpotency: every non-leading characteristic coefficient is
/// the zero polynomial.
pub fn matrix_nilpotent(a: &PolyMatrix<Rational>) -> bool {
    a.is_nilpotent()
}

pub fn scalar_matrix_nilpotent(a: &QMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::InvalidInput("nilpotency needs a square matrix".into()));
    }
    let mut p = a.clone();
    for _ in 1..a.rows() {
        p = p.mul(a)?;
    }
    Ok(p.is_zero())
}

/// Outcome of probing a span for nullcone containment.
///
/// `Escaped` proves the span is not contained in the nullcone; `AllProbesIn`
/// is evidence only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ProbeVerdict {
    Escaped {
        #[serde(serialize_with = "ser_rationals")]
        coeffs: Vec<Rational>,
        #[serde(serialize_with = "ser_rationals")]
        vector: Vec<Rational>,
    },
    AllProbesIn { trials: usize, seed: u64 },
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl ProbeVerdict {
    pub fn escaped(&self) -> bool {
        matches!(self, ProbeVerdict::Escaped { .. })
    }
}

/// Tests `trials` combinations of the spanning vectors: first all
/// coefficients 1, then seeded nonzero draws from `−9..=9`.
pub fn span_probe_nullcone(
    member: impl Fn(&[Rational]) -> Result<bool>,
    l: &SubspaceSpec,
    trials: usize,
    seed: u64,
) -> Result<ProbeVerdict> {
    let n = l.spanning_vectors.len();
    let mut rng = rng(seed);
    for trial in 0..trials {
        let coeffs: Vec<Rational> = if trial == 0 {
            vec![int(1); n]
        } else {
            loop {
                let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-PROBE_BOUND..=PROBE_BOUND)).collect();
                if c.iter().any(|&x| x != 0) || n == 0 {
                    break c.into_iter().map(int).collect();
                }
            }
        };
        let vector = l.combination(&coeffs);
        if !member(&vector)? {
            return Ok(ProbeVerdict::Escaped { coeffs, vector });
        }
    }
    Ok(ProbeVerdict::AllProbesIn { trials, seed })
}

/// Exhaustive search of the integer box `[−bound, bound]^rank` for a
/// cocharacter pairing positively with every listed weight; an independent
/// oracle for [`torus_nullcone_member`].
pub fn brute_force_cocharacter(weights: &[Vec<i64>], rank: usize, bound: i64) -> Option<Vec<i64>> {
    let side = (2 * bound + 1) as usize;
    let total = side.checked_pow(rank as u32)?;
    (0..total).find_map(|mut code| {
        let gamma: Vec<i64> = (0..rank)
            .map(|_| {
                let g = (code % side) as i64 - bound;
                code /= side;
                g
            })
            .collect();
        weights.iter().all(|w| pairs_positively(&gamma, w)).then_some(gamma)
    })
}

pub fn pairs_positively(gamma: &[i64], w: &[i64]) -> bool {
    gamma.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() > 0
}
