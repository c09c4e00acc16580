//! Polynomials in the six coordinates, used to check identities of the
//! `G`-action on all of ℤ⁶ rather than pointwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GLetter, GWord, COORDINATES};

type Exponents = [u32; 6];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term([0; 6], c.into());
        p
    }

    /// The coordinate `a01, …, a23` with index `k`.
    pub fn var(k: usize) -> Self {
        let mut e = [0; 6];
        e[k] = 1;
        let mut p = Poly::zero();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (name, &p) in COORDINATES.iter().zip(e) {
                match p {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// The generic point `(a01, …, a23)`.
pub fn generic_tuple() -> [Poly; 6] {
    std::array::from_fn(Poly::var)
}

/// Applies a `G`-word to the generic point, rightmost letter first.
pub fn apply_symbolic(w: &GWord) -> [Poly; 6] {
    let mut cur = generic_tuple();
    for &l in w.letters.iter().rev() {
        cur = l.act(&cur);
    }
    cur
}

/// Whether `w` acts as the identity on all of ℤ⁶ (as a polynomial map).
pub fn is_identity_map(w: &GWord) -> bool {
    apply_symbolic(w) == generic_tuple()
}

/// Coordinates where `w` differs from the identity, as `image − variable`.
pub fn defect(w: &GWord) -> Vec<(usize, Poly)> {
    apply_symbolic(w)
        .iter()
        .zip(generic_tuple().iter())
        .enumerate()
        .filter_map(|(k, (img, x))| {
            let d = img - x;
            (!d.is_zero()).then_some((k, d))
        })
        .collect()
}

/// `letter` as a polynomial map, for callers that want to inspect it.
pub fn letter_map(letter: GLetter) -> [Poly; 6] {
    letter.act(&generic_tuple())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::g_relators;

    #[test]
    fn v_is_an_involution_on_z6() {
        assert!(is_identity_map(&GWord::new(vec![GLetter::V, GLetter::V])));
    }

    #[test]
    fn single_letters_are_not_identity() {
        for l in GLetter::ALL {
            assert!(!is_identity_map(&GWord::new(vec![l])), "{l}");
        }
        let d = defect(&GWord::new(vec![GLetter::V]));
        assert_eq!(d.len(), 4);
        assert_eq!(d[0].0, 1);
        assert_eq!(d[0].1, &Poly::var(2) - &Poly::var(1));
    }

    #[test]
    fn relators_hold_on_all_of_z6() {
        for (name, r) in g_relators() {
            assert!(is_identity_map(&r), "{name}: {:?}", defect(&r));
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let p = &(&x * &y) - &(&y * &x);
        assert!(p.is_zero());
        let q = &(&x * &x) - &Poly::constant(1);
        assert_eq!(q.to_string(), "-1 + 1*a01^2");
        assert_eq!(letter_map(GLetter::W2)[0], Poly::var(2));
    }
}
