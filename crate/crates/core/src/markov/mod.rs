//! Six-tuple invariants of collections on P³ and the group `G` acting on them.
//!
//! For a four-object collection, `T` records the strictly upper Gram
//! entries `(a01, a02, a03, a12, a13, a23)`. Unipotency of `−κ` cuts out the
//! integer solutions of two Markov-type equations, and the group
//!
//! ```text
//! G = ⟨v, w2, w3 | v² = w2⁴ = w3² = 1, w3⁻¹w2w3 = w2⁻¹, (v w3 w2³)³ = 1, (v w3 v w2²)² = 1⟩
//! ```
//!
//! acts on six-tuples by polynomial substitutions. G-words act with the
//! rightmost letter first, matching braid words.

mod orbit;
pub mod symbolic;

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::{delta_word, BraidWord, Letter};
use crate::collections::NumericalCollection;
use crate::matrix::IntMatrix;
use crate::{Error, Result};

pub use orbit::{
    explore, explore_collections, explore_tuples, mutation_letters, orbit_collections,
    orbit_tuples, stabilizer_scan, Orbit, OrbitMember,
};

/// Labels of the six coordinates, in storage order.
pub const COORDINATES: [&str; 6] = ["a01", "a02", "a03", "a12", "a13", "a23"];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SixTuple(pub [BigInt; 6]);

impl SixTuple {
    pub fn new(values: [i64; 6]) -> Self {
        SixTuple(values.map(BigInt::from))
    }

    /// `T`: reads `(a01, a02, a03, a12, a13, a23)` off a four-object collection.
    pub fn from_collection(c: &NumericalCollection) -> Result<Self> {
        if c.n() != 3 {
            return Err(Error::WrongRank {
                expected: 3,
                actual: c.n(),
            });
        }
        let g = c.gram();
        Ok(SixTuple([
            g[(0, 1)].clone(),
            g[(0, 2)].clone(),
            g[(0, 3)].clone(),
            g[(1, 2)].clone(),
            g[(1, 3)].clone(),
            g[(2, 3)].clone(),
        ]))
    }

    /// The unitriangular Gram matrix with these entries.
    pub fn to_gram(&self) -> IntMatrix {
        let [a01, a02, a03, a12, a13, a23] = self.0.clone();
        let one = || BigInt::from(1);
        let zero = BigInt::zero;
        IntMatrix::from_rows(&[
            vec![one(), a01, a02, a03],
            vec![zero(), one(), a12, a13],
            vec![zero(), zero(), one(), a23],
            vec![zero(), zero(), zero(), one()],
        ])
        .expect("rows have equal length")
    }

    pub fn a01(&self) -> &BigInt {
        &self.0[0]
    }
    pub fn a02(&self) -> &BigInt {
        &self.0[1]
    }
    pub fn a03(&self) -> &BigInt {
        &self.0[2]
    }
    pub fn a12(&self) -> &BigInt {
        &self.0[3]
    }
    pub fn a13(&self) -> &BigInt {
        &self.0[4]
    }
    pub fn a23(&self) -> &BigInt {
        &self.0[5]
    }

    /// Parses `4,6,4,4,6,4`, optionally wrapped in parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected six comma-separated integers, got `{text}`"
            )));
        }
        let mut out: [BigInt; 6] = Default::default();
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer `{p}`")))?;
        }
        Ok(SixTuple(out))
    }
}

impl fmt::Display for SixTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = &self.0;
        write!(f, "({a},{b},{c},{d},{e},{g})")
    }
}

/// Left side of the quadratic–quartic Markov-type equation; zero on `Γ`.
pub fn eval_eq1(t: &SixTuple) -> BigInt {
    let [a01, a02, a03, a12, a13, a23] = &t.0;
    let squares: BigInt = t.0.iter().map(|x| x * x).sum();
    squares - a01 * a12 * a02 - a01 * a13 * a03 - a02 * a23 * a03 - a12 * a23 * a13
        + a01 * a12 * a23 * a03
        - 8
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Eq2Variant {
    /// Second term `a02²a12²`, as typeset in the source.
    Printed,
    /// Second term `a02²a13²`, the form equivalent to unipotency.
    #[default]
    Corrected,
}

impl std::str::FromStr for Eq2Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(Eq2Variant::Printed),
            "corrected" => Ok(Eq2Variant::Corrected),
            other => Err(Error::Parse(format!("unknown eq2 variant `{other}`"))),
        }
    }
}

/// Left side of the quartic equation in the requested variant.
pub fn eval_eq2(t: &SixTuple, variant: Eq2Variant) -> BigInt {
    let [a01, a02, a03, a12, a13, a23] = &t.0;
    let second = match variant {
        Eq2Variant::Printed => a02 * a02 * a12 * a12,
        Eq2Variant::Corrected => a02 * a02 * a13 * a13,
    };
    a01 * a01 * a23 * a23 + second + a03 * a03 * a12 * a12
        - 2 * a01 * a13 * a02 * a23
        - 2 * a02 * a12 * a03 * a13
        + 2 * a01 * a12 * a23 * a03
        - 16
}

/// Rebuilds the Gram matrix and tests `(κ + I)⁴ = 0` directly.
pub fn unipotency_oracle(t: &SixTuple) -> bool {
    NumericalCollection::from_gram(t.to_gram())
        .expect("to_gram is unitriangular")
        .is_minus_kappa_unipotent()
}

/// On `Γ`: both equations vanish and the matrix oracle agrees.
pub fn is_on_gamma(t: &SixTuple) -> bool {
    eval_eq1(t).is_zero() && unipotency_oracle(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GLetter {
    V,
    W2,
    W2Inv,
    W3,
}

impl GLetter {
    pub const ALL: [GLetter; 4] = [GLetter::V, GLetter::W2, GLetter::W2Inv, GLetter::W3];

    pub fn inverse(self) -> Self {
        match self {
            GLetter::W2 => GLetter::W2Inv,
            GLetter::W2Inv => GLetter::W2,
            other => other,
        }
    }

    /// The substitution on coordinates, generic over any commutative ring.
    pub fn act<T>(self, t: &[T; 6]) -> [T; 6]
    where
        T: Clone,
        for<'a> &'a T: Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
    {
        let [a01, a02, a03, a12, a13, a23] = t;
        match self {
            GLetter::V => [
                a01.clone(),
                a03.clone(),
                a02.clone(),
                &(a01 * a03) - a13,
                &(a01 * a02) - a12,
                a23.clone(),
            ],
            GLetter::W2 => [
                a03.clone(),
                a13.clone(),
                a23.clone(),
                a01.clone(),
                a02.clone(),
                a12.clone(),
            ],
            GLetter::W2Inv => GLetter::W2.act(&GLetter::W2.act(&GLetter::W2.act(t))),
            GLetter::W3 => [
                a23.clone(),
                a13.clone(),
                a03.clone(),
                a12.clone(),
                a02.clone(),
                a01.clone(),
            ],
        }
    }
}

impl fmt::Display for GLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GLetter::V => "v",
            GLetter::W2 => "w2",
            GLetter::W2Inv => "w2^-1",
            GLetter::W3 => "w3",
        })
    }
}

pub fn apply_g(t: &SixTuple, letter: GLetter) -> SixTuple {
    SixTuple(letter.act(&t.0))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GWord {
    pub letters: Vec<GLetter>,
}

impl GWord {
    pub fn new(letters: Vec<GLetter>) -> Self {
        GWord { letters }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| match tok {
                "v" => Ok(GLetter::V),
                "w2" => Ok(GLetter::W2),
                "w2^-1" => Ok(GLetter::W2Inv),
                "w3" => Ok(GLetter::W3),
                other => Err(Error::Parse(format!("unknown G letter `{other}`"))),
            })
            .collect::<Result<_>>()?;
        Ok(GWord { letters })
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &GWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GWord { letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        GWord {
            letters: self.letters.repeat(k),
        }
    }

    /// Reduction using `v² = w3² = w2⁴ = 1`: runs of `w2^{±1}` collapse to an
    /// exponent mod 4, written `w2`, `w2 w2` or `w2^-1`.
    pub fn reduce(&self) -> Self {
        enum Tok {
            V,
            W3,
            W2(u8),
        }
        let mut stack: Vec<Tok> = Vec::new();
        for &l in &self.letters {
            match l {
                GLetter::V | GLetter::W3 => {
                    let same = matches!(
                        (stack.last(), l),
                        (Some(Tok::V), GLetter::V) | (Some(Tok::W3), GLetter::W3)
                    );
                    if same {
                        stack.pop();
                    } else {
                        stack.push(if l == GLetter::V { Tok::V } else { Tok::W3 });
                    }
                }
                GLetter::W2 | GLetter::W2Inv => {
                    let step = if l == GLetter::W2 { 1 } else { 3 };
                    let e = match stack.last() {
                        Some(Tok::W2(e)) => {
                            let e = *e;
                            stack.pop();
                            (e + step) % 4
                        }
                        _ => step,
                    };
                    if e != 0 {
                        stack.push(Tok::W2(e));
                    }
                }
            }
        }
        let mut letters = Vec::new();
        for t in stack {
            match t {
                Tok::V => letters.push(GLetter::V),
                Tok::W3 => letters.push(GLetter::W3),
                Tok::W2(1) => letters.push(GLetter::W2),
                Tok::W2(2) => letters.extend([GLetter::W2, GLetter::W2]),
                Tok::W2(_) => letters.push(GLetter::W2Inv),
            }
        }
        GWord { letters }
    }

    /// Acts on a tuple, rightmost letter first.
    pub fn apply(&self, t: &SixTuple) -> SixTuple {
        let mut cur = t.clone();
        for &l in self.letters.iter().rev() {
            cur = apply_g(&cur, l);
        }
        cur
    }
}

impl fmt::Display for GWord {
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

/// The defining relators of `G`, by name.
pub fn g_relators() -> Vec<(&'static str, GWord)> {
    use GLetter::*;
    vec![
        ("v^2", GWord::new(vec![V, V])),
        ("w2^4", GWord::new(vec![W2; 4])),
        ("w3^2", GWord::new(vec![W3, W3])),
        ("w3^-1 w2 w3 w2", GWord::new(vec![W3, W2, W3, W2])),
        ("(v w3 w2^3)^3", GWord::new(vec![V, W3, W2, W2, W2]).pow(3)),
        ("(v w3 v w2^2)^2", GWord::new(vec![V, W3, V, W2, W2]).pow(2)),
    ]
}

/// Image of `R_i` under `f`.
fn f_right(i: usize) -> GWord {
    use GLetter::*;
    match i {
        0 => GWord::new(vec![W2, W2, V, W3]),
        1 => GWord::new(vec![W2, V, W3, W2]),
        2 => GWord::new(vec![V, W3, W2, W2]),
        _ => unreachable!("four strands have three generators"),
    }
}

/// Image of a single mutation letter; `L_i` maps to the inverse of `f(R_i)`.
pub fn f_letter(l: Letter) -> GWord {
    let r = f_right(l.index);
    if l.positive {
        r.inverse()
    } else {
        r
    }
}

/// `f: A₄ → G`, letter by letter in textual order.
pub fn f_image(w: &BraidWord) -> Result<GWord> {
    if w.strands() != 4 {
        return Err(Error::StrandMismatch {
            expected: 4,
            actual: w.strands(),
        });
    }
    let mut letters = Vec::new();
    for &l in w.letters() {
        letters.extend(f_letter(l).letters);
    }
    Ok(GWord { letters })
}

/// `T(δ · w · c) = f(w) · T(δ · c)`.
pub fn check_equivariance(c: &NumericalCollection, w: &BraidWord) -> Result<bool> {
    if c.n() != 3 {
        return Err(Error::WrongRank {
            expected: 3,
            actual: c.n(),
        });
    }
    let delta = delta_word(4)?;
    let lhs = SixTuple::from_collection(&c.apply_word(w)?.apply_word(&delta)?)?;
    let base = SixTuple::from_collection(&c.apply_word(&delta)?)?;
    let rhs = f_image(w)?.apply(&base);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pn::beilinson_collection;

    fn t(v: [i64; 6]) -> SixTuple {
        SixTuple::new(v)
    }

    #[test]
    fn t_map_examples() {
        let e = beilinson_collection(3);
        assert_eq!(
            SixTuple::from_collection(&e).unwrap(),
            t([4, 10, 20, 4, 10, 4])
        );
        let d = e.apply_word(&delta_word(4).unwrap()).unwrap();
        assert_eq!(
            SixTuple::from_collection(&d).unwrap(),
            t([4, 6, 4, 4, 6, 4])
        );
        let id = NumericalCollection::from_gram(IntMatrix::identity(4)).unwrap();
        assert_eq!(SixTuple::from_collection(&id).unwrap(), t([0; 6]));
        assert_eq!(
            SixTuple::from_collection(&beilinson_collection(2)),
            Err(Error::WrongRank {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn eq1_values() {
        assert_eq!(eval_eq1(&t([4, 6, 4, 4, 6, 4])), BigInt::from(0));
        assert_eq!(eval_eq1(&t([4, 10, 20, 4, 10, 4])), BigInt::from(0));
        assert_eq!(eval_eq1(&t([0; 6])), BigInt::from(-8));
    }

    #[test]
    fn eq2_values() {
        let s = t([4, 6, 4, 4, 6, 4]);
        assert_eq!(eval_eq2(&s, Eq2Variant::Printed), BigInt::from(-720));
        assert_eq!(eval_eq2(&s, Eq2Variant::Corrected), BigInt::from(0));
        assert_eq!(eval_eq2(&t([0; 6]), Eq2Variant::Printed), BigInt::from(-16));
        assert_eq!(
            eval_eq2(&t([0; 6]), Eq2Variant::Corrected),
            BigInt::from(-16)
        );
    }

    #[test]
    fn oracle_values() {
        assert!(unipotency_oracle(&t([4, 6, 4, 4, 6, 4])));
        assert!(unipotency_oracle(&t([4, 10, 20, 4, 10, 4])));
        assert!(!unipotency_oracle(&t([1, 0, 0, 0, 0, 0])));
    }

    #[test]
    fn g_action_examples() {
        let s = t([4, 6, 4, 4, 6, 4]);
        assert_eq!(apply_g(&s, GLetter::W2), s);
        assert_eq!(apply_g(&s, GLetter::W3), s);
        assert_eq!(apply_g(&s, GLetter::V), t([4, 4, 6, 10, 20, 4]));
        assert_eq!(apply_g(&apply_g(&s, GLetter::V), GLetter::V), s);
    }

    #[test]
    fn f_image_examples() {
        let w = BraidWord::parse("R0", 4).unwrap();
        assert_eq!(f_image(&w).unwrap().to_string(), "w2 w2 v w3");
        assert!(f_image(&BraidWord::empty(4)).unwrap().is_empty());
        let l = BraidWord::parse("L0", 4).unwrap();
        assert_eq!(f_image(&l).unwrap().to_string(), "w3 v w2^-1 w2^-1");
        assert!(f_image(&BraidWord::empty(3)).is_err());
        let rrr = BraidWord::parse("R2 R1 R0", 4).unwrap();
        let img = f_image(&rrr).unwrap();
        for s in [
            t([4, 6, 4, 4, 6, 4]),
            t([4, 10, 20, 4, 10, 4]),
            t([1, 2, 3, 5, 7, 11]),
        ] {
            assert_eq!(img.apply(&s), apply_g(&s, GLetter::W2));
        }
    }

    #[test]
    fn g_word_reduction() {
        let w = GWord::parse("v v w2 w2 w2 w3 w3 w2 w2^-1").unwrap();
        assert_eq!(w.reduce().to_string(), "w2^-1");
        let w = GWord::parse("w2 v w2^-1 w2 v w2^-1").unwrap();
        assert!(w.reduce().is_empty());
        assert_eq!(GWord::parse("w2 w2").unwrap().reduce().to_string(), "w2 w2");
        assert!(GWord::parse("x").is_err());
    }

    #[test]
    fn reduce_preserves_action() {
        let w = GWord::parse("w2 w2 w2 v w3 w3 w2^-1 v w2 w2 w2 w2 w3").unwrap();
        let s = t([3, -1, 4, 1, -5, 9]);
        assert_eq!(w.reduce().apply(&s), w.apply(&s));
    }

    #[test]
    fn equivariance_on_beilinson() {
        let e = beilinson_collection(3);
        assert!(check_equivariance(&e, &BraidWord::parse("R0", 4).unwrap()).unwrap());
        assert!(check_equivariance(&e, &BraidWord::empty(4)).unwrap());
        assert!(check_equivariance(&beilinson_collection(2), &BraidWord::empty(3)).is_err());
    }

    #[test]
    fn tuple_parse() {
        assert_eq!(
            SixTuple::parse("(4,6,4,4,6,4)").unwrap(),
            t([4, 6, 4, 4, 6, 4])
        );
        assert_eq!(
            SixTuple::parse(" 1, 2,3,4,5,-6").unwrap(),
            t([1, 2, 3, 4, 5, -6])
        );
        assert!(SixTuple::parse("1,2,3").is_err());
        assert!(SixTuple::parse("1,2,3,4,5,x").is_err());
        assert_eq!(t([4, 6, 4, 4, 6, 4]).to_string(), "(4,6,4,4,6,4)");
    }
}
