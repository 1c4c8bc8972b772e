use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1..n}`.
///
/// Products are read left to right: `p * q` applies `p` first, then `q`. For braids this
/// means the strand entering at position `i` at the top of a word leaves at `perm(i)`
/// at the bottom.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The transposition swapping `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n.max(i).max(j));
        p.images.swap(i - 1, j - 1);
        p
    }

    /// `images[k-1]` is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|v| v - 1).collect() })
    }

    /// Product of the given cycles (left to right) on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for c in cycles {
            let mut p = Self::identity(n);
            let mut seen = std::collections::HashSet::new();
            for &d in c {
                if d == 0 || d > n || !seen.insert(d) {
                    return Err(Error::InvalidPermutation(format!("bad cycle {c:?} on 1..{n}")));
                }
            }
            for k in 0..c.len() {
                p.images[c[k] - 1] = c[(k + 1) % c.len()] - 1;
            }
            acc = acc.then(&p);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `k` (1-based); points beyond the degree are fixed.
    pub fn apply(&self, k: usize) -> usize {
        self.images.get(k - 1).map_or(k, |v| v + 1)
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// Pads with fixed points up to degree `n`.
    pub fn extend(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..n);
        Permutation { images }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        let images = (1..=n).map(|k| other.apply(self.apply(k)) - 1).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Disjoint cycles including fixed points, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, largest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Length of the cycle through `k`.
    pub fn cycle_len_of(&self, k: usize) -> usize {
        let mut len = 1;
        let mut cur = self.apply(k);
        while cur != k {
            cur = self.apply(cur);
            len += 1;
        }
        len
    }

    /// True iff the permutation is a single cycle through all points.
    pub fn is_full_cycle(&self) -> bool {
        self.degree() > 0 && self.cycle_len_of(1) == self.degree()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_to_right_product() {
        let a = Permutation::from_cycles(9, &[vec![1, 7, 3, 9, 5, 4, 2, 8, 6]]).unwrap();
        let b = Permutation::from_cycles(9, &[vec![1, 2]]).unwrap();
        assert_eq!((&a * &b).to_string(), "(1 7 3 9 5 4)(2 8 6)");
    }

    #[test]
    fn sign_and_inversions_agree() {
        let p = Permutation::from_images(&[3, 1, 4, 2, 5]).unwrap();
        assert_eq!(p.inversions().is_multiple_of(2), p.sign() == 1);
        assert_eq!(p.then(&p.inverse()), Permutation::identity(5));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
    }

    #[test]
    fn cycle_queries() {
        let p = Permutation::from_cycles(5, &[vec![1, 3], vec![2, 5, 4]]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.cycle_len_of(4), 3);
        assert!(!p.is_full_cycle());
        assert_eq!(p.cycles(), vec![vec![1, 3], vec![2, 5, 4]]);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
