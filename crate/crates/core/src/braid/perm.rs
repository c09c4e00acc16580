use std::fmt;

/// Permutation of `0..len` in one-line notation: `images[x]` is the image of `x`.
///
/// Products compose right to left, `(p * q)(x) = p(q(x))`. The adjacent
/// transposition `s_i` corresponds to the braid generator `σ_i`, and a
/// permutation stands for the unique positive braid without repeated
/// crossings (a simple element).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    /// The order-reversing permutation, i.e. the half-twist.
    pub fn longest(len: usize) -> Self {
        Permutation {
            images: (0..len).rev().collect(),
        }
    }

    pub fn transposition(len: usize, i: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(i, i + 1);
        p
    }

    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.images.len();
        self.images.iter().enumerate().all(|(i, &x)| x == n - 1 - i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// Number of inversions, the braid length of the simple element.
    pub fn length(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// `self * s_i` is shorter than `self`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i] > self.images[i + 1]
    }

    /// `s_i * self` is shorter than `self`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// `self * s_i`.
    pub fn mul_right(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// `s_i * self`.
    pub fn mul_left(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }

    /// Conjugation by the half-twist, which sends `s_i` to `s_{len-2-i}`.
    pub fn flip(&self) -> Self {
        let n = self.images.len();
        Permutation {
            images: (0..n).map(|x| n - 1 - self.images[n - 1 - x]).collect(),
        }
    }

    /// A reduced word of generator indices whose product is `self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(p.length());
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p.has_right_descent(i)) {
            p.mul_right(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for Permutation {
    /// One-line notation, 1-based: `[2 1 3 4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}
