use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Element of the root lattice in the simple-root basis `(alpha_1, ..., alpha_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root `alpha_i` (1-based `i`).
    pub fn simple(i: u8, rank: usize) -> Self {
        let mut v = vec![0; rank];
        v[i as usize - 1] = 1;
        Root(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Member of `Q^+`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Positive roots of type A are exactly the interval sums `alpha_a + ... + alpha_b`.
    pub fn is_positive_root(&self) -> bool {
        let support: Vec<usize> = (0..self.rank()).filter(|&k| self.0[k] != 0).collect();
        match (support.first(), support.last()) {
            (Some(&a), Some(&b)) => (a..=b).all(|k| self.0[k] == 1),
            _ => false,
        }
    }

    /// `(alpha_i, self)` for the simple root `alpha_i`.
    pub fn pair_simple(&self, i: u8) -> i64 {
        let k = i as usize - 1;
        let mut s = 2 * self.0[k];
        if k > 0 {
            s -= self.0[k - 1];
        }
        if k + 1 < self.rank() {
            s -= self.0[k + 1];
        }
        s
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, i: u8) -> Self {
        let mut v = self.0.clone();
        v[i as usize - 1] -= self.pair_simple(i);
        Root(v)
    }

    /// Letters of a word of this weight, counted: `coords[k]` copies of `k+1`.
    pub fn letter_multiset(word: &[u8], rank: usize) -> Self {
        let mut v = vec![0; rank];
        for &a in word {
            v[a as usize - 1] += 1;
        }
        Root(v)
    }
}

/// Symmetric bilinear form with `(alpha_i, alpha_i) = 2`, `(alpha_i, alpha_{i+1}) = -1`.
pub fn cartan_pairing(a: &Root, b: &Root) -> i64 {
    assert_eq!(a.rank(), b.rank(), "rank mismatch in Cartan pairing");
    let n = a.rank();
    let mut s = 0;
    for k in 0..n {
        if a.0[k] == 0 {
            continue;
        }
        s += 2 * a.0[k] * b.0[k];
        if k > 0 {
            s -= a.0[k] * b.0[k - 1];
        }
        if k + 1 < n {
            s -= a.0[k] * b.0[k + 1];
        }
    }
    s
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: Self) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: Self) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&Root> for i64 {
    type Output = Root;
    fn mul(self, rhs: &Root) -> Root {
        Root(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_examples() {
        let a1 = Root::simple(1, 3);
        let a2 = Root::simple(2, 3);
        let a3 = Root::simple(3, 3);
        assert_eq!(cartan_pairing(&a1, &a1), 2);
        assert_eq!(cartan_pairing(&(&a1 + &a2), &a1), 1);
        assert_eq!(cartan_pairing(&a1, &a3), 0);
        assert_eq!(cartan_pairing(&a1, &a2), -1);
    }

    #[test]
    fn reflections() {
        let a1 = Root::simple(1, 2);
        let a2 = Root::simple(2, 2);
        assert_eq!(a2.reflect(1), &a1 + &a2);
        assert_eq!(a1.reflect(1), Root(vec![-1, 0]));
        assert_eq!((&a1 + &a2).reflect(2), a1);
    }

    #[test]
    fn positive_roots_are_intervals() {
        assert!(Root(vec![0, 1, 1]).is_positive_root());
        assert!(!Root(vec![1, 0, 1]).is_positive_root());
        assert!(!Root(vec![0, 2, 0]).is_positive_root());
    }
}
