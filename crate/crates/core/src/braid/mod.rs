//! Words in the Artin braid group and their normal form.
//!
//! A word is stored in textual order. When a word acts on a collection the
//! rightmost letter acts first, so `L0 R1` means "apply `R1`, then `L0`".
//! `σ_i` is written `L<i>` (left mutation) and `σ_i⁻¹` is written `R<i>`.

mod garside;
mod perm;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use garside::{normal_form, GarsideForm};
pub use perm::Permutation;

use crate::{Error, Result};

/// A single Artin generator `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    /// `σ_i`, acting as the left mutation `L_i`.
    pub const fn left(index: usize) -> Self {
        Letter {
            index,
            positive: true,
        }
    }

    /// `σ_i⁻¹`, acting as the right mutation `R_i`.
    pub const fn right(index: usize) -> Self {
        Letter {
            index,
            positive: false,
        }
    }

    pub const fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    pub fn exponent(self) -> i8 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.positive { 'L' } else { 'R' };
        write!(f, "{tag}{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::UnsupportedStrands(0));
        }
        if let Some(bad) = letters.iter().find(|l| l.index + 1 >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated tokens `L<i>`, `R<i>`, `s<i>` or `s<i>^-1`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(parse_token)
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.index + 1 >= self.strands {
            return Err(Error::IndexOutOfRange {
                index: letter.index,
                strands: self.strands,
            });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                actual: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The formal inverse: reversed order, inverted letters.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Inserts `word` before position `at`.
    pub fn insert_at(&self, at: usize, word: &BraidWord) -> Self {
        let mut letters = self.letters[..at].to_vec();
        letters.extend_from_slice(&word.letters);
        letters.extend_from_slice(&self.letters[at..]);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn is_trivial(&self) -> bool {
        normal_form(self).is_identity()
    }

    /// Uniformly random word of the given length.
    pub fn random<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> Self {
        assert!(strands >= 2);
        let letters = (0..len)
            .map(|_| Letter {
                index: rng.gen_range(0..strands - 1),
                positive: rng.gen_bool(0.5),
            })
            .collect();
        BraidWord { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<Letter> {
    let malformed = || Error::MalformedToken(tok.to_string());
    let index = |digits: &str| -> Result<usize> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        usize::from_str(digits).map_err(|_| malformed())
    };
    if let Some(rest) = tok.strip_prefix('L') {
        Ok(Letter::left(index(rest)?))
    } else if let Some(rest) = tok.strip_prefix('R') {
        Ok(Letter::right(index(rest)?))
    } else if let Some(rest) = tok.strip_prefix('s') {
        match rest.strip_suffix("^-1") {
            Some(digits) => Ok(Letter::right(index(digits)?)),
            None => Ok(Letter::left(index(rest)?)),
        }
    } else {
        Err(malformed())
    }
}

fn require_four(strands: usize) -> Result<()> {
    if strands == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedStrands(strands))
    }
}

/// `δ = σ0σ1σ2σ0σ1σ0`, the positive half-twist of four strands.
pub fn delta_word(strands: usize) -> Result<BraidWord> {
    require_four(strands)?;
    BraidWord::parse("L0 L1 L2 L0 L1 L0", 4)
}

/// `(σ0σ1σ2)⁴`, the generator of the centre of the four-strand group.
pub fn center_word(strands: usize) -> Result<BraidWord> {
    require_four(strands)?;
    Ok(BraidWord::parse("L0 L1 L2", 4)?.pow(4))
}

/// The defining relators `σiσi+1σi(σi+1σiσi+1)⁻¹` and `σiσj(σjσi)⁻¹`, `|i-j| ≥ 2`.
pub fn relators(strands: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let gens = strands.saturating_sub(1);
    for i in 0..gens.saturating_sub(1) {
        let (a, b) = (Letter::left(i), Letter::left(i + 1));
        out.push(BraidWord {
            strands,
            letters: vec![a, b, a, b.inverse(), a.inverse(), b.inverse()],
        });
    }
    for i in 0..gens {
        for j in i + 2..gens {
            let (a, b) = (Letter::left(i), Letter::left(j));
            out.push(BraidWord {
                strands,
                letters: vec![a, b, a.inverse(), b.inverse()],
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_transliterates() {
        let w = BraidWord::parse("L0 R1", 4).unwrap();
        assert_eq!(w.letters(), &[Letter::left(0), Letter::right(1)]);
        let s = BraidWord::parse("s0 s1^-1", 4).unwrap();
        assert_eq!(w, s);
        assert_eq!(w.to_string(), "L0 R1");
    }

    #[test]
    fn parse_delta() {
        let d = BraidWord::parse("L0 L1 L2 L0 L1 L0", 4).unwrap();
        assert_eq!(d, delta_word(4).unwrap());
        assert_eq!(
            d.letters().iter().map(|l| l.index).collect::<Vec<_>>(),
            vec![0, 1, 2, 0, 1, 0]
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            BraidWord::parse("L5", 4),
            Err(Error::IndexOutOfRange {
                index: 5,
                strands: 4
            })
        );
        assert!(matches!(
            BraidWord::parse("X1", 4),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("L", 4),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("s1^-2", 4),
            Err(Error::MalformedToken(_))
        ));
        assert!(BraidWord::parse("", 4).unwrap().is_empty());
    }

    #[test]
    fn unsupported_strands() {
        assert_eq!(delta_word(3), Err(Error::UnsupportedStrands(3)));
        assert_eq!(center_word(5), Err(Error::UnsupportedStrands(5)));
    }

    #[test]
    fn triviality_examples() {
        let t = |s: &str| BraidWord::parse(s, 4).unwrap().is_trivial();
        assert!(t("L0 R0"));
        assert!(t("L0 L2 R0 R2"));
        assert!(!t("L0"));
        assert!(t(""));
    }

    #[test]
    fn free_reduction() {
        let w = BraidWord::parse("L0 L1 R1 R0 L2", 4).unwrap();
        assert_eq!(w.free_reduce().to_string(), "L2");
        assert!(!w.is_freely_reduced());
    }

    #[test]
    fn relator_count() {
        // two braid relators and one far commutation for A4
        assert_eq!(relators(4).len(), 3);
        assert!(relators(4).iter().all(BraidWord::is_trivial));
        assert!(relators(6).iter().all(BraidWord::is_trivial));
    }
}
