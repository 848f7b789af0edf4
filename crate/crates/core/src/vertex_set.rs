//! Dense bitset over the vertices of one tournament.
//!
//! Vertices are stored as 0-based indices; vertex `i` carries the
//! user-facing label `i + 1`. Tournaments with at most 64 vertices keep the
//! whole set inline in a single machine word.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

type Words = SmallVec<[u64; 1]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl VertexSet {
    /// Empty subset of `{0, .., n-1}`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            universe: n,
            words: SmallVec::from_elem(0, word_count(n)),
        }
    }

    /// The whole vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(n);
            if hi > lo {
                let bits = hi - lo;
                *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
            }
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from 1-based labels. Returns `None` if a label is out of range.
    pub fn from_labels<I: IntoIterator<Item = usize>>(n: usize, labels: I) -> Option<Self> {
        let mut s = Self::empty(n);
        for l in labels {
            if l == 0 || l > n {
                return None;
            }
            s.insert(l - 1);
        }
        Some(s)
    }

    /// The first `k` vertices `{0, .., k-1}`.
    pub fn prefix(n: usize, k: usize) -> Self {
        let mut s = Self::full(k.min(n));
        s.universe = n;
        s.words.resize(word_count(n), 0);
        s
    }

    /// Number of vertices of the owning tournament.
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} out of range 0..{}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words[0],
        }
    }

    /// Members as ascending 1-based labels.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Vertices of the owning tournament that are not in `self`.
    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(&a, &b)| a & b != 0)
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lexicographic order `≺` on subsets: at the smallest index where the two
    /// sets differ, the set containing that vertex is the smaller one.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (&a, &b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        self.universe.cmp(&other.universe)
    }
}

/// Ordered by the lexicographic order `≺` (see [`VertexSet::lex_cmp`]).
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Comma-separated ascending 1-based labels; the empty set prints as nothing.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 69]);
        assert_eq!(s.labels(), vec![1, 64, 65, 70]);
        s.remove(63);
        assert!(!s.contains(63));
        assert_eq!(s.complement().len(), 67);
    }

    #[test]
    fn full_and_prefix() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(0).len(), 0);
        let p = VertexSet::prefix(100, 70);
        assert_eq!(p.len(), 70);
        assert_eq!(p.universe(), 100);
        assert!(p.contains(69) && !p.contains(70));
    }

    #[test]
    fn display_is_one_based() {
        let s = VertexSet::from_indices(5, [4, 0, 2]);
        assert_eq!(s.to_string(), "1,3,5");
        assert_eq!(VertexSet::empty(5).to_string(), "");
        assert_eq!(VertexSet::from_labels(5, [1, 3, 5]), Some(s));
        assert_eq!(VertexSet::from_labels(5, [0]), None);
        assert_eq!(VertexSet::from_labels(5, [6]), None);
    }

    #[test]
    fn lex_order_prefers_lower_indices() {
        let n = 4;
        let a = VertexSet::from_indices(n, [0, 3]);
        let b = VertexSet::from_indices(n, [1, 2]);
        assert!(a < b);
        let c = VertexSet::from_indices(n, [0]);
        // {0,3} vs {0}: first difference at 3, which is in a.
        assert!(a < c);
        assert_eq!(a.cmp(&a), Ordering::Equal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn set(n: usize) -> impl Strategy<Value = VertexSet> {
            proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
                VertexSet::from_indices(n, bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
            })
        }

        proptest! {
            #[test]
            fn lex_order_is_total_and_antisymmetric(a in set(80), b in set(80)) {
                let ab = a.lex_cmp(&b);
                prop_assert_eq!(ab, b.lex_cmp(&a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
            }

            #[test]
            fn set_algebra_agrees_with_iteration(a in set(70), b in set(70)) {
                let inter: Vec<_> = a.iter().filter(|v| b.contains(*v)).collect();
                prop_assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), inter.clone());
                prop_assert_eq!(a.intersection_len(&b), inter.len());
                prop_assert_eq!(a.union(&b).len() + inter.len(), a.len() + b.len());
                prop_assert_eq!(a.difference(&b).is_subset(&a), true);
                prop_assert_eq!(a.is_subset(&b), a.difference(&b).is_empty());
            }
        }
    }
}
