//! Exceptional collections reduced to their numerical shadow.
//!
//! A [`NumericalCollection`] keeps the Euler-form Gram matrix `χ(E_i, E_j)`
//! and the classes `[E_j]` (as columns) in a fixed ambient basis of `K(D)`.
//! Mutations act through the defining triangles:
//!
//! * `L_i`: slot `i` becomes `χ(E_i,E_{i+1})[E_i] − [E_{i+1}]`, slot `i+1` becomes `[E_i]`;
//! * `R_i`: slot `i` becomes `[E_{i+1}]`, slot `i+1` becomes `χ(E_i,E_{i+1})[E_{i+1}] − [E_i]`.
//!
//! Both are unimodular basis changes `M`, and the Gram matrix transforms as
//! `Mᵀ · gram · M`.

use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::Value;

use crate::braid::{BraidWord, Letter};
use crate::matrix::IntMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct NumericalCollection {
    n: usize,
    gram: IntMatrix,
    classes: IntMatrix,
    ambient: IntMatrix,
    history: BraidWord,
}

/// Equality ignores the history (and the ambient form, which is determined
/// by gram and classes).
impl PartialEq for NumericalCollection {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gram == other.gram && self.classes == other.classes
    }
}

impl Eq for NumericalCollection {}

impl Hash for NumericalCollection {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.gram.hash(state);
        self.classes.hash(state);
    }
}

fn check_unitriangular(gram: &IntMatrix) -> Result<()> {
    if !gram.is_square() || gram.rows() == 0 {
        return Err(Error::NotUnitriangular(format!(
            "expected a non-empty square matrix, got {}x{}",
            gram.rows(),
            gram.cols()
        )));
    }
    for i in 0..gram.rows() {
        if !gram[(i, i)].is_one() {
            return Err(Error::NotUnitriangular(format!(
                "diagonal entry ({i},{i}) is {}",
                gram[(i, i)]
            )));
        }
        for j in 0..i {
            if !gram[(i, j)].is_zero() {
                return Err(Error::NotUnitriangular(format!(
                    "entry ({i},{j}) below the diagonal is {}",
                    gram[(i, j)]
                )));
            }
        }
    }
    Ok(())
}

impl NumericalCollection {
    /// A collection whose members form the ambient basis.
    pub fn from_gram(gram: IntMatrix) -> Result<Self> {
        check_unitriangular(&gram)?;
        let size = gram.rows();
        Ok(NumericalCollection {
            n: size - 1,
            classes: IntMatrix::identity(size),
            ambient: gram.clone(),
            gram,
            history: BraidWord::empty(size),
        })
    }

    /// A collection with explicit classes; the ambient Euler form is
    /// recovered as `C⁻ᵀ · gram · C⁻¹`.
    pub fn from_parts(gram: IntMatrix, classes: IntMatrix) -> Result<Self> {
        check_unitriangular(&gram)?;
        if classes.rows() != gram.rows() || classes.cols() != gram.cols() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                actual: classes.rows(),
            });
        }
        if !classes.determinant().abs().is_one() {
            return Err(Error::NotUnimodular);
        }
        let inv = classes.unimodular_inverse()?;
        let ambient = &(&inv.transpose() * &gram) * &inv;
        let size = gram.rows();
        Ok(NumericalCollection {
            n: size - 1,
            gram,
            classes,
            ambient,
            history: BraidWord::empty(size),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn classes(&self) -> &IntMatrix {
        &self.classes
    }

    pub fn ambient(&self) -> &IntMatrix {
        &self.ambient
    }

    /// Letters applied so far, latest first.
    pub fn history(&self) -> &BraidWord {
        &self.history
    }

    /// `χ(E_i, E_j)`.
    pub fn chi(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[(i, j)]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::MutationIndex {
                index: i,
                n: self.n,
            })
        }
    }

    /// Basis-change matrix of a single mutation letter.
    pub fn mutation_matrix(&self, letter: Letter) -> Result<IntMatrix> {
        let i = letter.index;
        self.check_index(i)?;
        let a = self.gram[(i, i + 1)].clone();
        let mut m = IntMatrix::identity(self.size());
        m[(i, i)] = BigInt::zero();
        m[(i + 1, i + 1)] = BigInt::zero();
        if letter.positive {
            m[(i, i)] = a;
            m[(i + 1, i)] = -BigInt::one();
            m[(i, i + 1)] = BigInt::one();
        } else {
            m[(i + 1, i)] = BigInt::one();
            m[(i, i + 1)] = -BigInt::one();
            m[(i + 1, i + 1)] = a;
        }
        Ok(m)
    }

    fn mutate(&self, letter: Letter) -> Result<Self> {
        let m = self.mutation_matrix(letter)?;
        let gram = &(&m.transpose() * &self.gram) * &m;
        let classes = &self.classes * &m;
        let mut history = BraidWord::empty(self.size());
        history.push(letter)?;
        let history = history.concat(&self.history)?;
        Ok(NumericalCollection {
            n: self.n,
            gram,
            classes,
            ambient: self.ambient.clone(),
            history,
        })
    }

    pub fn left_mutation(&self, i: usize) -> Result<Self> {
        self.mutate(Letter::left(i))
    }

    pub fn right_mutation(&self, i: usize) -> Result<Self> {
        self.mutate(Letter::right(i))
    }

    pub fn apply_letter(&self, letter: Letter) -> Result<Self> {
        self.mutate(letter)
    }

    /// Applies `w` with the rightmost letter acting first.
    pub fn apply_word(&self, w: &BraidWord) -> Result<Self> {
        if w.strands() != self.size() {
            return Err(Error::StrandMismatch {
                expected: self.size(),
                actual: w.strands(),
            });
        }
        let mut c = self.clone();
        for &l in w.letters().iter().rev() {
            c = c.mutate(l)?;
        }
        Ok(c)
    }

    /// `κ = gram⁻¹ · gramᵀ`.
    pub fn serre_matrix(&self) -> SerreMatrix {
        let inv = self
            .gram
            .unitriangular_inverse()
            .expect("gram is unitriangular by construction");
        SerreMatrix {
            kappa: &inv * &self.gram.transpose(),
        }
    }

    /// `(κ + I)^{n+1} = 0`.
    pub fn is_minus_kappa_unipotent(&self) -> bool {
        self.serre_matrix().is_minus_unipotent()
    }

    /// Every strictly upper Gram entry is positive.
    pub fn is_strong_candidate(&self) -> bool {
        (0..self.size()).all(|i| (i + 1..self.size()).all(|j| self.gram[(i, j)].is_positive()))
    }

    /// Unitriangular gram, unimodular classes and `Cᵀ A₀ C = gram`.
    pub fn is_consistent(&self) -> bool {
        self.gram.is_upper_unitriangular()
            && self.classes.determinant().abs().is_one()
            && (&(&self.classes.transpose() * &self.ambient) * &self.classes) == self.gram
    }

    /// Serializes to the collection file format, e.g.
    /// `{"n":3,"gram":[[1,4,10,20],…],"classes":"identity"}`.
    pub fn to_json(&self) -> String {
        let classes = if self.classes.is_identity() {
            "\"identity\"".to_string()
        } else {
            self.classes.to_string()
        };
        format!(
            "{{\"n\":{},\"gram\":{},\"classes\":{}}}",
            self.n, self.gram, classes
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid field `n`".into()))?
            as usize;
        let gram = json_matrix(
            v.get("gram")
                .ok_or_else(|| Error::Parse("missing field `gram`".into()))?,
        )?;
        if gram.rows() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                actual: gram.rows(),
            });
        }
        match v.get("classes") {
            None => Self::from_gram(gram),
            Some(Value::String(s)) if s == "identity" => Self::from_gram(gram),
            Some(m @ Value::Array(_)) => Self::from_parts(gram, json_matrix(m)?),
            Some(other) => Err(Error::Parse(format!("invalid `classes` value {other}"))),
        }
    }
}

fn json_matrix(v: &Value) -> Result<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                .iter()
                .map(|x| match x {
                    Value::Number(num) => num
                        .to_string()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("non-integer entry {num}"))),
                    other => Err(Error::Parse(format!("non-integer entry {other}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(&rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerreMatrix {
    pub kappa: IntMatrix,
}

impl SerreMatrix {
    /// `(κ + I)^{size} = 0`.
    pub fn is_minus_unipotent(&self) -> bool {
        let size = self.kappa.rows();
        let shifted = &self.kappa + &IntMatrix::identity(size);
        shifted.pow(size as u32).is_zero()
    }

    /// `χ(x, y) = χ(y, κx)` for all x, y, i.e. `A = (A κ)ᵀ`.
    pub fn satisfies_serre_identity(&self, gram: &IntMatrix) -> bool {
        (gram * &self.kappa).transpose() == *gram
    }

    /// Coefficients `c_0..c_size` of `det(xI − κ)`, highest degree first.
    pub fn characteristic_polynomial(&self) -> Vec<BigInt> {
        // Faddeev–LeVerrier; the divisions are exact for integer matrices.
        let n = self.kappa.rows();
        let mut coeffs = vec![BigInt::one()];
        let mut m = IntMatrix::zeros(n, n);
        let id = IntMatrix::identity(n);
        for k in 1..=n {
            let c_prev = coeffs[k - 1].clone();
            m = &(&self.kappa * &m) + &id.scale(&c_prev);
            let am = &self.kappa * &m;
            let trace: BigInt = (0..n).map(|i| am[(i, i)].clone()).sum();
            coeffs.push(-trace / BigInt::from(k));
        }
        coeffs
    }
}

/// Random upper unitriangular matrix with off-diagonal entries in `lo..=hi`.
pub fn random_unitriangular<R: Rng + ?Sized>(
    size: usize,
    lo: i64,
    hi: i64,
    rng: &mut R,
) -> IntMatrix {
    IntMatrix::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => BigInt::one(),
        std::cmp::Ordering::Less => BigInt::from(rng.gen_range(lo..=hi)),
        std::cmp::Ordering::Greater => BigInt::zero(),
    })
}
