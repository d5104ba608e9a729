//! Strict homogeneous feasibility by Fourier–Motzkin elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{check_len, Result};
use crate::scalar::Rational;

/// One strict inequality `Σ coeffs_j·x_j > 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Strict {
    coeffs: Vec<Rational>,
}

impl Strict {
    /// Positive rescaling making the last nonzero coefficient ±1.
    fn normalized(mut self) -> Self {
        if let Some(scale) = self.coeffs.iter().rev().find(|c| !c.is_zero()).map(Rational::abs) {
            for c in &mut self.coeffs {
                *c = c.clone() / scale.clone();
            }
        }
        self
    }
}

/// Finds an integer vector `γ` with `⟨γ, p⟩ > 0` for every point `p`.
///
/// Returns `None` exactly when no such functional exists, i.e. when the
/// origin lies in the convex hull of the points. An empty point list is
/// vacuously feasible and yields `(1, …, 1)` of length `dim`.
pub fn strict_positive_functional(points: &[Vec<Rational>], dim: usize) -> Result<Option<Vec<Rational>>> {
    for p in points {
        check_len(dim, p.len())?;
    }
    let ones = vec![Rational::one(); dim];
    if points.is_empty() {
        return Ok(Some(ones));
    }

    // stages[k] holds the system after eliminating x_{k}, …, x_{dim-1};
    // stages[dim] is the input system.
    let mut stages: Vec<Vec<Strict>> = vec![Vec::new(); dim + 1];
    stages[dim] = dedup(points.iter().map(|p| Strict { coeffs: p.clone() }.normalized()).collect());
    for var in (0..dim).rev() {
        let current = &stages[var + 1];
        let mut next = Vec::new();
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for c in current {
            let a = &c.coeffs[var];
            if a.is_zero() {
                next.push(c.clone());
            } else if a.is_positive() {
                lower.push(c);
            } else {
                upper.push(c);
            }
        }
        // Lower rows have coefficient +1 on `var`, upper rows −1 after normalization.
        for lo in &lower {
            for up in &upper {
                let coeffs = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(a, b)| a.clone() / lo.coeffs[var].abs() + b.clone() / up.coeffs[var].abs())
                    .collect();
                next.push(Strict { coeffs }.normalized());
            }
        }
        stages[var] = dedup(next);
    }
    // With every variable eliminated any remaining row reads 0 > 0.
    if !stages[0].is_empty() {
        return Ok(None);
    }

    let mut gamma: Vec<Rational> = Vec::with_capacity(dim);
    for var in 0..dim {
        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        for c in &stages[var + 1] {
            let a = &c.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let rest = gamma
                .iter()
                .zip(&c.coeffs)
                .fold(Rational::zero(), |acc, (g, k)| acc + g.clone() * k.clone());
            // a·x + rest > 0
            let bound = -rest / a.clone();
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| if bound > l { bound.clone() } else { l }));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| if bound < h { bound.clone() } else { h }));
            }
        }
        gamma.push(pick_in_open_interval(lo.as_ref(), hi.as_ref()));
    }

    // Clear denominators and strip the content.
    let lcm = gamma.iter().fold(BigInt::one(), |acc, g| acc.lcm(g.denom()));
    let scaled: Vec<BigInt> = gamma.iter().map(|g| (g.clone() * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = scaled.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let content = if content.is_zero() { BigInt::one() } else { content };
    Ok(Some(scaled.into_iter().map(|v| Rational::from_integer(v / &content)).collect()))
}

fn dedup(mut rows: Vec<Strict>) -> Vec<Strict> {
    rows.sort();
    rows.dedup();
    rows
}

/// The integer of least magnitude strictly inside `(lo, hi)`, falling back to
/// the midpoint when the interval contains no integer.
fn pick_in_open_interval(lo: Option<&Rational>, hi: Option<&Rational>) -> Rational {
    let inside = |x: &Rational| lo.is_none_or(|l| x > l) && hi.is_none_or(|h| x < h);
    let zero = Rational::zero();
    if inside(&zero) {
        return zero;
    }
    // Zero is excluded, so the interval lies entirely on one side of it.
    let candidate = match (lo, hi) {
        (Some(l), _) if !l.is_negative() => l.floor() + Rational::one(),
        (_, Some(h)) => h.ceil() - Rational::one(),
        _ => unreachable!("an unbounded side would contain zero"),
    };
    if inside(&candidate) {
        return candidate;
    }
    match (lo, hi) {
        (Some(l), Some(h)) => (l.clone() + h.clone()) / Rational::from_integer(BigInt::from(2)),
        _ => unreachable!("a half-line always contains an integer"),
    }
}
