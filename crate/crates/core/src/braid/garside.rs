//! Left-greedy Garside normal form for the classical braid monoid.

use std::fmt;

use super::{BraidWord, Letter, Permutation};

/// `Δ^infimum · factors[0] · factors[1] · …` with every factor a proper
/// simple element and every adjacent pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl GarsideForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// `inf + number of factors`.
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Checks the two structural invariants of the form.
    pub fn is_well_formed(&self) -> bool {
        self.factors
            .iter()
            .all(|p| !p.is_identity() && !p.is_longest() && p.len() == self.strands)
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }

    /// A word representing the same braid.
    pub fn to_word(&self) -> BraidWord {
        let delta = Permutation::longest(self.strands).reduced_word();
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend(delta.iter().map(|&i| Letter::left(i)));
            } else {
                letters.extend(delta.iter().rev().map(|&i| Letter::right(i)));
            }
        }
        for p in &self.factors {
            letters.extend(p.reduced_word().into_iter().map(Letter::left));
        }
        BraidWord::new(self.strands, letters)
            .expect("indices come from permutations of the right size")
    }
}

impl fmt::Display for GarsideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for p in &self.factors {
            write!(f, " . {p}")?;
        }
        Ok(())
    }
}

/// `S(b) ⊆ F(a)`: every generator that starts `b` already finishes `a`.
fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    (0..b.len().saturating_sub(1)).all(|i| !b.has_left_descent(i) || a.has_right_descent(i))
}

/// Moves crossings from the front of `b` onto the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    while let Some(i) =
        (0..b.len().saturating_sub(1)).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i))
    {
        a.mul_right(i);
        b.mul_left(i);
        moved = true;
    }
    moved
}

fn normalize(factors: &mut Vec<Permutation>) {
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (head, tail) = factors.split_at_mut(j + 1);
            changed |= make_left_weighted(&mut head[j], &mut tail[0]);
        }
        let before = factors.len();
        factors.retain(|p| !p.is_identity());
        if !changed && factors.len() == before {
            break;
        }
    }
}

/// Left normal form of `w`.
pub fn normal_form(w: &BraidWord) -> GarsideForm {
    let n = w.strands();
    let mut infimum: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();
    for letter in w.letters() {
        if letter.positive {
            factors.push(Permutation::transposition(n, letter.index));
        } else {
            // x σ_i⁻¹ = x Δ⁻¹ (Δ σ_i⁻¹) = Δ⁻¹ τ(x) (Δ σ_i⁻¹)
            infimum -= 1;
            for p in factors.iter_mut() {
                *p = p.flip();
            }
            let mut co = Permutation::longest(n);
            co.mul_right(letter.index);
            factors.push(co);
        }
        normalize(&mut factors);
        let leading = factors.iter().take_while(|p| p.is_longest()).count();
        infimum += leading as i64;
        factors.drain(..leading);
    }
    GarsideForm {
        strands: n,
        infimum,
        factors,
    }
}
