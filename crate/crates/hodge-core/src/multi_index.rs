//! Strictly increasing multi-indices and the permutation signs attached to
//! splitting/merging them.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("index {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("indices not strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),
}

/// A strictly increasing sequence of indices in `1..=dim`, naming a basis
/// element `e_I = e_{i_1} ∧ … ∧ e_{i_p}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// The empty index (degree 0).
    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self, IndexError> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(IndexError::NotIncreasing(indices.clone()));
            }
        }
        for &i in &indices {
            if i == 0 || i > dim {
                return Err(IndexError::OutOfRange(i, dim));
            }
        }
        Ok(MultiIndex(indices))
    }

    /// Single index `e_i`.
    pub fn single(i: usize) -> Self {
        MultiIndex(vec![i])
    }

    /// Full index `(1, …, m)`.
    pub fn top(m: usize) -> Self {
        MultiIndex((1..=m).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_valid_for(&self, dim: usize) -> bool {
        self.0.last().is_none_or(|&last| last <= dim)
    }

    /// Complementary index `CI` in `{1..m}` together with the sign of the
    /// permutation `(I, CI)` of `(1, …, m)`.
    pub fn complement_signed(&self, m: usize) -> Result<(i8, MultiIndex), IndexError> {
        if !self.is_valid_for(m) {
            return Err(IndexError::OutOfRange(*self.0.last().unwrap(), m));
        }
        let comp: Vec<usize> = (1..=m).filter(|i| !self.contains(*i)).collect();
        // Inversions of the concatenation (I, CI): pairs (i, c) with i ∈ I,
        // c ∈ CI, i > c. Both halves are internally sorted.
        let mut inv = 0usize;
        for &i in &self.0 {
            inv += comp.iter().take_while(|&&c| c < i).count();
        }
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        Ok((sign, MultiIndex(comp)))
    }

    /// Merge with a disjoint index set, returning the union and the sign of
    /// sorting the concatenation `(self, other)`. `None` if they intersect.
    pub fn merge_signed(&self, other: &MultiIndex) -> Option<(i8, MultiIndex)> {
        let mut merged = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (0usize, 0usize);
        let mut inv = 0usize;
        while a < self.0.len() && b < other.0.len() {
            if self.0[a] == other.0[b] {
                return None;
            }
            if self.0[a] < other.0[b] {
                merged.push(self.0[a]);
                a += 1;
            } else {
                // other.0[b] jumps over the remaining entries of self
                inv += self.0.len() - a;
                merged.push(other.0[b]);
                b += 1;
            }
        }
        merged.extend_from_slice(&self.0[a..]);
        merged.extend_from_slice(&other.0[b..]);
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        Some((sign, MultiIndex(merged)))
    }

    /// Insert one index, with the sign of moving it into place from the left.
    pub fn insert_signed(&self, i: usize) -> Option<(i8, MultiIndex)> {
        if self.contains(i) {
            return None;
        }
        let pos = self.0.iter().take_while(|&&x| x < i).count();
        let mut v = self.0.clone();
        v.insert(pos, i);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, MultiIndex(v)))
    }

    /// Remove one index, with the sign of moving it out to the left.
    pub fn remove_signed(&self, i: usize) -> Option<(i8, MultiIndex)> {
        let pos = self.0.binary_search(&i).ok()?;
        let mut v = self.0.clone();
        v.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, MultiIndex(v)))
    }

    /// All degree-`p` multi-indices for dimension `m`, in lexicographic order.
    pub fn all(m: usize, p: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p);
        fn rec(m: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if cur.len() == p {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for i in start..=m {
                cur.push(i);
                rec(m, p, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(m, p, 1, &mut cur, &mut out);
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sign of `(I, CI)` together with the complement, as a free function.
pub fn complement_sign(index: &MultiIndex, m: usize) -> Result<(i8, MultiIndex), IndexError> {
    index.complement_signed(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force permutation sign by counting inversions of the full word.
    fn perm_sign(word: &[usize]) -> i8 {
        let mut inv = 0;
        for a in 0..word.len() {
            for b in a + 1..word.len() {
                if word[a] > word[b] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn complement_examples() {
        let (s, c) = MultiIndex::empty().complement_signed(3).unwrap();
        assert_eq!((s, c.indices()), (1, &[1, 2, 3][..]));

        // (2,1,3) has one inversion
        let (s, c) = MultiIndex::single(2).complement_signed(3).unwrap();
        assert_eq!((s, c.indices()), (-1, &[1, 3][..]));

        let i12 = MultiIndex::new(vec![1, 2], 4).unwrap();
        let (s, c) = i12.complement_signed(4).unwrap();
        assert_eq!((s, c.indices()), (1, &[3, 4][..]));
    }

    #[test]
    fn complement_sign_matches_bruteforce() {
        for m in 1..=6 {
            for p in 0..=m {
                for idx in MultiIndex::all(m, p) {
                    let (s, c) = idx.complement_signed(m).unwrap();
                    let mut word = idx.indices().to_vec();
                    word.extend_from_slice(c.indices());
                    assert_eq!(s, perm_sign(&word), "I={idx} m={m}");
                }
            }
        }
    }

    #[test]
    fn merge_sign_matches_bruteforce() {
        for m in 1..=5 {
            for p in 0..=m {
                for q in 0..=m {
                    for a in MultiIndex::all(m, p) {
                        for b in MultiIndex::all(m, q) {
                            let merged = a.merge_signed(&b);
                            let disjoint = b.indices().iter().all(|i| !a.contains(*i));
                            assert_eq!(merged.is_some(), disjoint);
                            if let Some((s, u)) = merged {
                                let mut word = a.indices().to_vec();
                                word.extend_from_slice(b.indices());
                                assert_eq!(s, perm_sign(&word));
                                let mut sorted = word.clone();
                                sorted.sort_unstable();
                                assert_eq!(u.indices(), &sorted[..]);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            MultiIndex::new(vec![2, 2], 3),
            Err(IndexError::NotIncreasing(vec![2, 2]))
        );
        assert_eq!(MultiIndex::new(vec![0], 3), Err(IndexError::OutOfRange(0, 3)));
        assert_eq!(MultiIndex::new(vec![4], 3), Err(IndexError::OutOfRange(4, 3)));
    }

    #[test]
    fn insert_remove_roundtrip() {
        let idx = MultiIndex::new(vec![1, 3, 4], 5).unwrap();
        let (s1, with2) = idx.insert_signed(2).unwrap();
        assert_eq!(with2.indices(), &[1, 2, 3, 4]);
        assert_eq!(s1, -1); // one transposition past e_1
        let (s2, back) = with2.remove_signed(2).unwrap();
        assert_eq!(back, idx);
        assert_eq!(s2, -1);
        assert!(idx.insert_signed(3).is_none());
        assert!(idx.remove_signed(2).is_none());
    }
}
