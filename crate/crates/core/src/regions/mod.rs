//! Phase-inequality regions attached to exceptional collections.
//!
//! A region is described in `(m, φ)` coordinates: masses are only required to
//! be positive, so everything interesting is a system of strict linear
//! inequalities `⟨c, φ⟩ < b` in the phases. For a collection with minimal
//! Hom degrees `k_{i,j}`, the region is `φ_i < φ_j + α_{i,j}` with `α` the
//! cheapest chain `i < l₁ < … < l_s < j` of `k_{i,l₁} + … + k_{l_s,j} − s`.

mod feasibility;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::collections::NumericalCollection;
use crate::{Error, Result};

pub use feasibility::{Certificate, Feasibility};

/// Minimal degree with a nonzero Hom, or `Infinite` when there is none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(i64),
    Infinite,
}

impl Degree {
    fn plus(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::Infinite,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(k) => write!(f, "{k}"),
            Degree::Infinite => write!(f, "inf"),
        }
    }
}

/// The numbers `k_{i,j}` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    n: usize,
    k: Vec<Vec<Degree>>,
}

impl DegreeMatrix {
    /// The strong case: every Hom lives in degree zero.
    pub fn all_zero(n: usize) -> Self {
        DegreeMatrix {
            n,
            k: vec![vec![Degree::Finite(0); n + 1]; n + 1],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Degree) -> Self {
        let mut d = Self::all_zero(n);
        for i in 0..=n {
            for j in i + 1..=n {
                d.k[i][j] = f(i, j);
            }
        }
        d
    }

    /// Reads degrees off a collection assumed strong: a positive `χ` means a
    /// Hom in degree 0, a vanishing `χ` means the pair is orthogonal. A
    /// negative `χ` cannot come from a strong collection and is rejected.
    pub fn from_collection(c: &NumericalCollection) -> Result<Self> {
        let mut d = Self::all_zero(c.n());
        for i in 0..=c.n() {
            for j in i + 1..=c.n() {
                let chi = c.chi(i, j);
                d.k[i][j] = if chi.is_positive() {
                    Degree::Finite(0)
                } else if chi.is_zero() {
                    Degree::Infinite
                } else {
                    return Err(Error::UndeterminedDegree(chi.to_string(), i, j));
                };
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Degree {
        assert!(i < j && j <= self.n);
        self.k[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Degree) {
        assert!(i < j && j <= self.n);
        self.k[i][j] = value;
    }
}

/// `α_{i,j}`: shortest path from `i` to `j` over the index order with edge
/// weights `k − 1`, plus one.
pub fn alpha(d: &DegreeMatrix, i: usize, j: usize) -> Degree {
    assert!(i < j && j <= d.n, "alpha needs i < j ≤ n");
    let mut best = vec![Degree::Infinite; j + 1];
    best[i] = Degree::Finite(0);
    for l in i + 1..=j {
        for m in i..l {
            let via = best[m].plus(d.k[m][l].plus(Degree::Finite(-1)));
            if via < best[l] {
                best[l] = via;
            }
        }
    }
    best[j].plus(Degree::Finite(1))
}

/// A strict inequality `⟨coeffs, φ⟩ < bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
    pub label: String,
}

impl Constraint {
    /// `φ_i − φ_j < offset`.
    pub fn difference(
        dimension: usize,
        i: usize,
        j: usize,
        offset: i64,
        label: impl Into<String>,
    ) -> Self {
        let mut coeffs = vec![BigRational::zero(); dimension];
        coeffs[i] += rat(1);
        coeffs[j] -= rat(1);
        Constraint {
            coeffs,
            bound: rat(offset),
            label: label.into(),
        }
    }

    pub fn holds_at(&self, phi: &[BigRational]) -> bool {
        let lhs: BigRational = self.coeffs.iter().zip(phi).map(|(c, x)| c * x).sum();
        lhs < self.bound
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " | {}]", self.bound)
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a vector as `(p/q, …)`.
pub fn format_point(p: &[BigRational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Finitely many strict inequalities in `dimension` phase variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalitySystem {
    dimension: usize,
    constraints: Vec<Constraint>,
}

impl InequalitySystem {
    pub fn new(dimension: usize) -> Self {
        InequalitySystem {
            dimension,
            constraints: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, c: Constraint) -> Result<()> {
        if c.coeffs.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                actual: c.coeffs.len(),
            });
        }
        self.constraints.push(c);
        Ok(())
    }

    fn push_difference(&mut self, i: usize, j: usize, offset: i64, label: impl Into<String>) {
        let c = Constraint::difference(self.dimension, i, j, offset, label);
        self.constraints.push(c);
    }

    /// Keeps constraints whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Constraint) -> bool) -> Self {
        InequalitySystem {
            dimension: self.dimension,
            constraints: self
                .constraints
                .iter()
                .filter(|c| keep(c))
                .cloned()
                .collect(),
        }
    }

    /// The image under `φ_i ↦ −φ_{d−1−i}`, which reverses the index order.
    pub fn mirror(&self) -> Self {
        let d = self.dimension;
        InequalitySystem {
            dimension: d,
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint {
                    coeffs: (0..d).map(|j| -c.coeffs[d - 1 - j].clone()).collect(),
                    bound: c.bound.clone(),
                    label: c.label.clone(),
                })
                .collect(),
        }
    }

    /// Same rows up to order, labels ignored.
    pub fn same_row_set(&self, other: &InequalitySystem) -> bool {
        let key = |s: &InequalitySystem| {
            let mut rows: Vec<(Vec<BigRational>, BigRational)> = s
                .constraints
                .iter()
                .map(|c| (c.coeffs.clone(), c.bound.clone()))
                .collect();
            rows.sort();
            rows
        };
        self.dimension == other.dimension && key(self) == key(other)
    }

    /// Exact strict membership of the phases.
    pub fn contains_phases(&self, phi: &[BigRational]) -> Result<bool> {
        if phi.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                actual: phi.len(),
            });
        }
        Ok(self.constraints.iter().all(|c| c.holds_at(phi)))
    }

    /// Membership of a full `(m, φ)` point: positive masses and phases
    /// strictly satisfying every constraint.
    pub fn contains(&self, p: &PhasePoint) -> Result<bool> {
        if p.masses.len() != p.phases.len() {
            return Err(Error::DimensionMismatch {
                expected: p.phases.len(),
                actual: p.masses.len(),
            });
        }
        Ok(p.masses.iter().all(Signed::is_positive) && self.contains_phases(&p.phases)?)
    }

    /// A verified witness or a verified infeasibility certificate.
    pub fn is_feasible(&self) -> Feasibility {
        let result = feasibility::solve(self);
        match &result {
            Feasibility::Feasible(w) => assert!(
                self.contains_phases(w).unwrap_or(false),
                "elimination produced a point outside the system"
            ),
            Feasibility::Infeasible(cert) => assert!(
                cert.verify(self),
                "elimination produced an invalid certificate"
            ),
        }
        result
    }

    /// One `[c_0,…,c_n | b]` row per line, each followed by `# label` when labelled.
    pub fn to_rows(&self) -> String {
        let mut out = String::new();
        for c in &self.constraints {
            out.push_str(&c.to_string());
            if !c.label.is_empty() {
                out.push_str("  # ");
                out.push_str(&c.label);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the row format; `#` starts a comment that becomes the label.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let mut system: Option<InequalitySystem> = None;
        for line in text.lines() {
            let (body, label) = match line.split_once('#') {
                Some((b, l)) => (b.trim(), l.trim()),
                None => (line.trim(), ""),
            };
            if body.is_empty() {
                continue;
            }
            let inner = body
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| {
                    Error::Parse(format!("row must look like [c0,...,cn | b]: `{body}`"))
                })?;
            let (lhs, rhs) = inner
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("missing `|` in `{body}`")))?;
            let coeffs = lhs
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let bound = parse_rational(rhs)?;
            let sys = system.get_or_insert_with(|| InequalitySystem::new(coeffs.len()));
            sys.push(Constraint {
                coeffs,
                bound,
                label: label.to_string(),
            })?;
        }
        system.ok_or_else(|| Error::Parse("no constraint rows".into()))
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_rows())
    }
}

/// Masses `|Z(E_i)|` and phases `φ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhasePoint {
    pub masses: Vec<BigRational>,
    pub phases: Vec<BigRational>,
}

impl PhasePoint {
    pub fn new(masses: Vec<BigRational>, phases: Vec<BigRational>) -> Result<Self> {
        if masses.len() != phases.len() {
            return Err(Error::DimensionMismatch {
                expected: phases.len(),
                actual: masses.len(),
            });
        }
        Ok(PhasePoint { masses, phases })
    }

    /// Masses are decoupled from the phase inequalities; witnesses use `m_i = 1`.
    pub fn with_unit_masses(phases: Vec<BigRational>) -> Self {
        PhasePoint {
            masses: vec![rat(1); phases.len()],
            phases,
        }
    }
}

/// `φ_i < φ_j + α_{i,j}` for every `i < j` with finite `α`.
pub fn region_system(d: &DegreeMatrix) -> InequalitySystem {
    let mut s = InequalitySystem::new(d.n + 1);
    for i in 0..=d.n {
        for j in i + 1..=d.n {
            if let Degree::Finite(a) = alpha(d, i, j) {
                s.push_difference(i, j, a, format!("phi{i} < phi{j} + ({a})"));
            }
        }
    }
    s
}

fn push_strong_condition(s: &mut InequalitySystem, n: usize) {
    for i in 0..=n {
        for j in i + 1..=n {
            let off = -((j - i - 1) as i64);
            s.push_difference(i, j, off, format!("(i) phi{i} < phi{j} - {}", j - i - 1));
        }
    }
}

/// Phases in the overlap of the region of a strong collection and of its
/// single right mutation at `kidx`: the strong condition (i), then (ii')
/// `φ_{k+1} < φ_k + 1` and (iii) `φ_{k+1} < φ_{k+i} − (i−1)` for `i ≥ 2`.
pub fn lemma41_system(n: usize, kidx: usize) -> Result<InequalitySystem> {
    if kidx >= n {
        return Err(Error::MutationIndex { index: kidx, n });
    }
    let mut s = InequalitySystem::new(n + 1);
    push_strong_condition(&mut s, n);
    let k = kidx;
    s.push_difference(k + 1, k, 1, format!("(ii') phi{} < phi{k} + 1", k + 1));
    for i in 2..=n - k {
        s.push_difference(
            k + 1,
            k + i,
            -((i - 1) as i64),
            format!("(iii) phi{} < phi{} - {}", k + 1, k + i, i - 1),
        );
    }
    Ok(s)
}

/// The three condition lists for a four-object strong collection `F`:
///
/// 1. `Θ_F ∩ Θ_{L₂F} ∩ Θ_{L₀L₂F}` in `(φ0, …, φ3)`;
/// 2. `Θ_F ∩ Θ_{R₂F} ∩ Θ_{R₀R₂F}`, the mirror of the first under `φ_i ↦ −φ_{3−i}`;
/// 3. `Θ_E ∩ Θ_{L₀L₂E}` in `(φ0, …, φ3, ψ)` where `ψ` is the phase of the
///    mutated object `L_{E₀}E₁`, bounded by `φ1 − 1 < ψ < φ0 + 1`.
pub fn thm51_systems() -> (InequalitySystem, InequalitySystem, InequalitySystem) {
    let mut left = InequalitySystem::new(4);
    push_strong_condition(&mut left, 3);
    left.push_difference(0, 2, -2, "(ii) phi0 < phi2 - 2");
    left.push_difference(1, 2, -1, "(ii) phi1 < phi2 - 1");
    left.push_difference(1, 0, 1, "(iii) phi1 - 1 < phi0");
    left.push_difference(3, 2, 1, "(iii) phi3 - 1 < phi2");

    let mut right = InequalitySystem::new(4);
    push_strong_condition(&mut right, 3);
    right.push_difference(1, 3, -2, "(ii) phi1 < phi3 - 2");
    right.push_difference(1, 2, -1, "(ii) phi1 < phi2 - 1");
    right.push_difference(3, 2, 1, "(iii) phi3 < phi2 + 1");
    right.push_difference(1, 0, 1, "(iii) phi1 < phi0 + 1");

    let mut dual = InequalitySystem::new(5);
    push_strong_condition(&mut dual, 3);
    dual.push_difference(1, 0, 1, "(ii) phi1 - 1 < phi0");
    dual.push_difference(3, 2, 1, "(ii) phi3 - 1 < phi2");
    dual.push_difference(4, 2, -2, "(iii) psi < phi2 - 2");
    dual.push_difference(1, 4, 1, "(mut) phi1 - 1 < psi");
    dual.push_difference(4, 0, 1, "(mut) psi < phi0 + 1");

    (left, right, dual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn pt(v: &[&str]) -> Vec<BigRational> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn alpha_examples() {
        let z = DegreeMatrix::all_zero(3);
        assert_eq!(alpha(&z, 0, 3), Degree::Finite(-2));
        for i in 0..3 {
            assert_eq!(alpha(&z, i, i + 1), Degree::Finite(0));
        }
        let mut d = DegreeMatrix::all_zero(2);
        d.set(0, 1, Degree::Infinite);
        assert_eq!(alpha(&d, 0, 1), Degree::Infinite);
        assert_eq!(alpha(&d, 0, 2), Degree::Finite(0));
    }

    #[test]
    fn region_of_strong_collection() {
        let s = region_system(&DegreeMatrix::all_zero(3));
        assert_eq!(s.constraints().len(), 6);
        for c in s.constraints() {
            let i = c.coeffs.iter().position(|x| *x == q("1")).unwrap();
            let j = c.coeffs.iter().position(|x| *x == q("-1")).unwrap();
            assert_eq!(c.bound, rat(-((j - i - 1) as i64)));
        }
        let one = region_system(&DegreeMatrix::all_zero(1));
        assert_eq!(one.to_rows(), "[1,-1 | 0]  # phi0 < phi1 + (0)\n");
        let none = region_system(&DegreeMatrix::from_fn(1, |_, _| Degree::Infinite));
        assert!(none.constraints().is_empty());
    }

    #[test]
    fn lemma41_witness() {
        let s = lemma41_system(3, 0).unwrap();
        assert!(s
            .contains_phases(&pt(&["0", "1/2", "8/5", "27/10"]))
            .unwrap());
        assert!(!s.contains_phases(&pt(&["0", "3/2", "3", "9/2"])).unwrap());
        for k in 0..3 {
            assert!(lemma41_system(3, k).unwrap().is_feasible().is_feasible());
        }
        assert!(lemma41_system(3, 3).is_err());
    }

    #[test]
    fn feasibility_small_cases() {
        let mut s = InequalitySystem::new(2);
        s.push(Constraint::difference(2, 0, 1, 0, "")).unwrap();
        let w = s.is_feasible();
        assert!(w.is_feasible());
        s.push(Constraint::difference(2, 1, 0, 0, "")).unwrap();
        let r = s.is_feasible();
        let cert = r.certificate().unwrap();
        assert!(cert.verify(&s));
        assert_eq!(cert.combined_bound(&s), rat(0));
    }

    #[test]
    fn constant_row_contradiction() {
        let mut s = InequalitySystem::new(1);
        s.push(Constraint {
            coeffs: vec![rat(0)],
            bound: rat(-1),
            label: String::new(),
        })
        .unwrap();
        let cert = s.is_feasible();
        assert_eq!(cert.certificate().unwrap().multipliers, vec![rat(1)]);
    }

    #[test]
    fn thm51_all_feasible() {
        let (l, r, d) = thm51_systems();
        for s in [&l, &r, &d] {
            let f = s.is_feasible();
            assert!(s.contains_phases(f.witness().unwrap()).unwrap());
        }
        assert!(l.mirror().same_row_set(&r));
        assert!(!l.same_row_set(&r));
    }

    #[test]
    fn contains_checks() {
        let s = lemma41_system(3, 0).unwrap();
        assert!(s.contains_phases(&pt(&["0", "1"])).is_err());
        let boundary = pt(&["0", "1", "5/2", "7/2"]); // φ1 < φ0 + 1 tight
        assert!(!s.contains_phases(&boundary).unwrap());
        let p = PhasePoint::with_unit_masses(pt(&["0", "1/2", "8/5", "27/10"]));
        assert!(s.contains(&p).unwrap());
        let bad = PhasePoint::new(pt(&["1", "0", "1", "1"]), p.phases.clone()).unwrap();
        assert!(!s.contains(&bad).unwrap());
    }

    #[test]
    fn rows_round_trip() {
        let s = lemma41_system(3, 1).unwrap();
        let back = InequalitySystem::parse_rows(&s.to_rows()).unwrap();
        assert_eq!(back, s);
        let parsed = InequalitySystem::parse_rows("[1/2, -3 | 7/4]\n").unwrap();
        assert_eq!(parsed.constraints()[0].coeffs, pt(&["1/2", "-3"]));
        assert!(InequalitySystem::parse_rows("[1,2 | 3]\n[1 | 2]").is_err());
        assert!(InequalitySystem::parse_rows("1,2 | 3").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn degrees_from_collection() {
        let c = crate::pn::beilinson_collection(3);
        assert_eq!(
            DegreeMatrix::from_collection(&c).unwrap(),
            DegreeMatrix::all_zero(3)
        );
        let id = NumericalCollection::from_gram(crate::matrix::IntMatrix::identity(3)).unwrap();
        assert_eq!(
            DegreeMatrix::from_collection(&id).unwrap(),
            DegreeMatrix::from_fn(2, |_, _| Degree::Infinite)
        );
        let neg = NumericalCollection::from_gram(
            crate::matrix::IntMatrix::from_rows(&[vec![1, -2], vec![0, 1]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            DegreeMatrix::from_collection(&neg),
            Err(Error::UndeterminedDegree(..))
        ));
    }
}
