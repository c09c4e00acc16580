//! Line bundles on projective space and the Beilinson collection.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::collections::NumericalCollection;
use crate::matrix::IntMatrix;

/// `a(a−1)⋯(a−b+1) / b!`, valid for any integer `a`.
pub fn binomial(a: i64, b: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..b as i64 {
        num *= BigInt::from(a - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}

/// `dim Hⁱ(Pⁿ, O(m))`.
pub fn line_bundle_cohomology(n: u32, m: i64, i: u32) -> BigInt {
    assert!(n >= 1 && i <= n, "need n ≥ 1 and 0 ≤ i ≤ n");
    let n64 = n as i64;
    if i == 0 && m >= 0 {
        binomial(n64 + m, n)
    } else if i == n && m < -n64 {
        // dual of H⁰(O(−m−n−1))
        binomial(-m - 1, n)
    } else {
        BigInt::zero()
    }
}

/// `χ(O(a), O(a+d)) = Σ (−1)ⁱ dim Hⁱ(Pⁿ, O(d))`.
pub fn euler_chi_line(n: u32, d: i64) -> BigInt {
    (0..=n)
        .map(|i| {
            let h = line_bundle_cohomology(n, d, i);
            if i % 2 == 0 {
                h
            } else {
                -h
            }
        })
        .sum()
}

/// Gram matrix of `{O, O(1), …, O(n)}`.
pub fn beilinson_gram(n: u32) -> IntMatrix {
    let size = n as usize + 1;
    IntMatrix::from_fn(size, size, |i, j| {
        if i <= j {
            euler_chi_line(n, j as i64 - i as i64)
        } else {
            BigInt::zero()
        }
    })
}

pub fn beilinson_collection(n: u32) -> NumericalCollection {
    NumericalCollection::from_gram(beilinson_gram(n)).expect("binomial gram is unitriangular")
}

/// Coordinates of `[O(m)]` in the basis `[O], …, [O(n)]`, solved from the
/// pairings `χ(O(i), O(m))`.
pub fn line_class(n: u32, m: i64) -> Vec<BigInt> {
    let a = beilinson_gram(n);
    let pairings: Vec<BigInt> = (0..=n as i64).map(|i| euler_chi_line(n, m - i)).collect();
    let class = a
        .unitriangular_inverse()
        .expect("binomial gram is unitriangular")
        .apply(&pairings);
    debug_assert_eq!(a.apply(&class), pairings);
    class
}

/// Matrix of `− ⊗ O(1)` on `K(Pⁿ)`.
pub fn twist_matrix(n: u32) -> IntMatrix {
    let size = n as usize + 1;
    let mut t = IntMatrix::zeros(size, size);
    for j in 0..size - 1 {
        t[(j + 1, j)] = BigInt::one();
    }
    t.set_column(size - 1, &line_class(n, n as i64 + 1));
    t
}

/// Class map of the Serre functor `− ⊗ O(−n−1)[n]`: `(−1)ⁿ · twist^{−(n+1)}`.
pub fn serre_class_map(n: u32) -> IntMatrix {
    let inv = twist_matrix(n)
        .unimodular_inverse()
        .expect("twist is unimodular");
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    inv.pow(n + 1).scale(&sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(line_bundle_cohomology(3, 1, 0), b(4));
        assert_eq!(line_bundle_cohomology(3, -4, 3), b(1));
        for i in 0..=3 {
            assert_eq!(line_bundle_cohomology(3, -2, i), b(0));
        }
        assert_eq!(line_bundle_cohomology(2, -5, 2), b(6));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(euler_chi_line(3, 3), b(20));
        assert_eq!(euler_chi_line(3, -4), b(-1));
        assert_eq!(euler_chi_line(3, 0), b(1));
    }

    #[test]
    fn binomial_negative_top() {
        assert_eq!(binomial(-1, 3), b(-1));
        assert_eq!(binomial(6, 3), b(20));
        assert_eq!(binomial(2, 3), b(0));
        assert_eq!(binomial(5, 0), b(1));
    }

    #[test]
    fn beilinson_small() {
        assert_eq!(
            beilinson_gram(1),
            IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap()
        );
        for n in 1..=5 {
            assert!(beilinson_collection(n).is_strong_candidate());
        }
    }

    #[test]
    fn twist_last_column() {
        let t = twist_matrix(3);
        assert_eq!(t.column(3), vec![b(-1), b(4), b(-6), b(4)]);
        assert_eq!(twist_matrix(1).column(1), vec![b(-1), b(2)]);
        for n in 1..=5 {
            assert_eq!(twist_matrix(n).determinant(), b(1));
        }
    }

    #[test]
    fn serre_map_matches_kappa() {
        for n in 1..=4 {
            let a = beilinson_gram(n);
            let kappa = &a.unitriangular_inverse().unwrap() * &a.transpose();
            assert_eq!(serre_class_map(n), kappa, "n = {n}");
        }
    }
}
