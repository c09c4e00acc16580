//! Exact feasibility of strict linear systems by Fourier–Motzkin elimination.
//!
//! Every derived row carries the nonnegative multipliers of the original
//! constraints that produced it, so an infeasible system yields a Farkas-type
//! certificate directly. Feasible systems get a witness by back-substitution,
//! picking each coordinate strictly inside its open interval.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::InequalitySystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point strictly satisfying every constraint.
    Feasible(Vec<BigRational>),
    Infeasible(Certificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[BigRational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Feasibility::Feasible(_) => None,
            Feasibility::Infeasible(c) => Some(c),
        }
    }
}

/// Multipliers `λ ≥ 0`, not all zero, with `Σ λ_k c_k = 0` and `Σ λ_k b_k ≤ 0`.
/// Summing the scaled constraints gives the contradiction `0 < Σ λ_k b_k ≤ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<BigRational>,
}

impl Certificate {
    /// `Σ λ_k b_k`, the right-hand side of the combined contradiction.
    pub fn combined_bound(&self, system: &InequalitySystem) -> BigRational {
        self.multipliers
            .iter()
            .zip(system.constraints())
            .map(|(l, c)| l * &c.bound)
            .sum()
    }

    pub fn verify(&self, system: &InequalitySystem) -> bool {
        let cs = system.constraints();
        if self.multipliers.len() != cs.len()
            || self.multipliers.iter().any(Signed::is_negative)
            || self.multipliers.iter().all(Zero::is_zero)
        {
            return false;
        }
        let combined_zero = (0..system.dimension()).all(|v| {
            self.multipliers
                .iter()
                .zip(cs)
                .map(|(l, c)| l * &c.coeffs[v])
                .sum::<BigRational>()
                .is_zero()
        });
        combined_zero && !self.combined_bound(system).is_positive()
    }
}

#[derive(Clone)]
struct Row {
    coeffs: Vec<BigRational>,
    bound: BigRational,
    mult: Vec<BigRational>,
}

impl Row {
    fn scaled_add(&self, a: &BigRational, other: &Row, b: &BigRational) -> Row {
        Row {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| a * x + b * y)
                .collect(),
            bound: a * &self.bound + b * &other.bound,
            mult: self
                .mult
                .iter()
                .zip(&other.mult)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        }
    }

    /// Divides by the first nonzero |coefficient| so duplicates coincide.
    fn normalize(&mut self) {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.bound /= &lead;
            for m in self.mult.iter_mut() {
                *m /= &lead;
            }
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn integer(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// A simple point strictly inside `(lower, upper)`, either end possibly open.
fn pick(lower: Option<&BigRational>, upper: Option<&BigRational>) -> BigRational {
    match (lower, upper) {
        (None, None) => BigRational::zero(),
        (Some(lo), None) => integer(lo.floor().to_integer()) + BigRational::one(),
        (None, Some(hi)) => integer(hi.ceil().to_integer()) - BigRational::one(),
        (Some(lo), Some(hi)) => {
            let candidate = integer(lo.floor().to_integer()) + BigRational::one();
            if &candidate < hi {
                candidate
            } else {
                (lo + hi) / BigRational::from_integer(BigInt::from(2))
            }
        }
    }
}

pub(super) fn solve(system: &InequalitySystem) -> Feasibility {
    let dim = system.dimension();
    let count = system.constraints().len();
    let mut rows: Vec<Row> = system
        .constraints()
        .iter()
        .enumerate()
        .map(|(k, c)| Row {
            coeffs: c.coeffs.clone(),
            bound: c.bound.clone(),
            mult: (0..count)
                .map(|j| {
                    if j == k {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        })
        .collect();

    // stages[dim - 1 - v] holds the rows in effect when variable v is eliminated.
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(dim);
    for var in (0..dim).rev() {
        if let Some(bad) = rows
            .iter()
            .find(|r| r.is_constant() && !r.bound.is_positive())
        {
            return Feasibility::Infeasible(Certificate {
                multipliers: bad.mult.clone(),
            });
        }
        stages.push(rows.clone());
        let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coeffs[var].is_positive() {
                upper.push(r);
            } else if r.coeffs[var].is_negative() {
                lower.push(r);
            } else if !r.is_constant() {
                rest.push(r);
            }
        }
        for u in &upper {
            for l in &lower {
                let mut combined = u.scaled_add(&-l.coeffs[var].clone(), l, &u.coeffs[var]);
                combined.coeffs[var] = BigRational::zero();
                combined.normalize();
                rest.push(combined);
            }
        }
        let mut deduped: Vec<Row> = Vec::with_capacity(rest.len());
        for r in rest {
            if !deduped
                .iter()
                .any(|d| d.coeffs == r.coeffs && d.bound == r.bound)
            {
                deduped.push(r);
            }
        }
        rows = deduped;
    }
    if let Some(bad) = rows.iter().find(|r| !r.bound.is_positive()) {
        return Feasibility::Infeasible(Certificate {
            multipliers: bad.mult.clone(),
        });
    }

    let mut point = vec![BigRational::zero(); dim];
    for var in 0..dim {
        let stage = &stages[dim - 1 - var];
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for r in stage {
            let c = &r.coeffs[var];
            if c.is_zero() {
                continue;
            }
            let residual: BigRational = &r.bound
                - (0..var)
                    .map(|j| &r.coeffs[j] * &point[j])
                    .sum::<BigRational>();
            let limit = residual / c;
            if c.is_positive() {
                if hi.as_ref().is_none_or(|h| &limit < h) {
                    hi = Some(limit);
                }
            } else if lo.as_ref().is_none_or(|l| &limit > l) {
                lo = Some(limit);
            }
        }
        point[var] = pick(lo.as_ref(), hi.as_ref());
    }
    Feasibility::Feasible(point)
}
