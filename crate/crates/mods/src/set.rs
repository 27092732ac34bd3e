//! Vertex subsets of a fixed ambient vertex range `0..n`, stored as bit masks.
//!
//! Sets are plain values: the algebra operations return new sets and the
//! per-word cost of union/intersection/cardinality is constant. One inline
//! word covers every order up to 64; larger orders spill to the heap without
//! changing any contract.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

type Words = SmallVec<[u64; 1]>;

fn word_count(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// A subset of the vertices `0..n` of a fixed graph or digraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Words,
}

impl VertexSet {
    /// The empty subset of `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: SmallVec::from_elem(0, word_count(n)),
        }
    }

    /// The full subset `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.trim();
        s
    }

    /// The singleton `{v}`.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from vertex indices. Panics if any index is out of range.
    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Ambient vertex count `n`.
    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.n, "vertex {} out of range for order {}", v, self.n);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range for order {}", v, self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {} out of range for order {}", v, self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    /// Complement within the ambient range.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "ambient mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "ambient mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + v)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn union_with(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "ambient mismatch");
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    /// `|other \ self|`: how many members of `other` are new to `self`.
    pub(crate) fn gain_from(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (b & !a).count_ones() as usize)
            .sum()
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        VertexSet { n: self.n, words }
    }

    fn trim(&mut self) {
        let spare = self.words.len() * 64 - self.n;
        if spare > 0 {
            let last = self.words.len() - 1;
            self.words[last] &= !0 >> spare;
        }
    }
}

/// Ascending-sequence lexicographic order: `{0,4} < {0,5} < {1,2}`, and a
/// set precedes its proper supersets. The set containing the lowest
/// differing vertex comes first, except when the other set has no member
/// past the shared prefix (then it is the shorter sequence and comes first).
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.n, other.n, "ambient mismatch");
        for (wi, (&a, &b)) in self.words.iter().zip(other.words.iter()).enumerate() {
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            let pos = diff.trailing_zeros();
            let self_has_low = a >> pos & 1 == 1;
            let rest = if self_has_low {
                &other.words
            } else {
                &self.words
            };
            let above = if pos == 63 { 0 } else { !0u64 << (pos + 1) };
            let other_continues = rest[wi] & above != 0 || rest[wi + 1..].iter().any(|&w| w != 0);
            return match (self_has_low, other_continues) {
                (true, true) | (false, false) => Ordering::Less,
                (true, false) | (false, true) => Ordering::Greater,
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_basics() {
        let a = VertexSet::from_vertices(10, [0, 3, 7]);
        let b = VertexSet::from_vertices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 4, 7]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 7]);
        assert_eq!(a.complement().to_vec(), vec![1, 2, 4, 5, 6, 8, 9]);
        assert_eq!(a.len(), 3);
        assert!(VertexSet::empty(4).is_empty());
        assert_eq!(VertexSet::full(5).to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn multi_word_orders() {
        let mut s = VertexSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.complement().len(), 127);
        assert_eq!(VertexSet::full(130).len(), 130);
    }

    #[test]
    fn lexicographic_order() {
        let mk = |vs: &[usize]| VertexSet::from_vertices(8, vs.iter().copied());
        assert!(mk(&[0, 4]) < mk(&[0, 5]));
        assert!(mk(&[0, 5]) < mk(&[1, 2]));
        assert!(mk(&[0]) < mk(&[0, 1]));
        assert!(mk(&[2]) < mk(&[3]));
        assert_eq!(mk(&[1, 2]).cmp(&mk(&[1, 2])), Ordering::Equal);
    }

    #[test]
    fn display_form() {
        let s = VertexSet::from_vertices(6, [1, 4]);
        assert_eq!(format!("{}", s), "{1, 4}");
        assert_eq!(format!("{}", VertexSet::empty(3)), "{}");
    }
}
