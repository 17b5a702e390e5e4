use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A fixed-width bitset over the vertices `0..universe` of one graph.
///
/// Sets are the currency for guard configurations, neighborhoods and
/// independent sets. Two sets only compare equal when they share a universe.
/// Graphs up to 128 vertices never touch the heap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: u32,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe: universe as u32,
            words: SmallVec::from_elem(0, universe.div_ceil(WORD)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`. Only meaningful
    /// for universes of at most 64 vertices.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "from_mask needs a universe of at most 64");
        let mut s = Self::new(universe);
        if !s.words.is_empty() {
            s.words[0] = mask;
        }
        s.trim();
        s
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    fn trim(&mut self) {
        let rem = self.universe() % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`, returning whether it was newly added.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe);
        let bit = 1u64 << (v % WORD);
        let w = &mut self.words[v / WORD];
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe() {
            return false;
        }
        let bit = 1u64 << (v % WORD);
        let w = &mut self.words[v / WORD];
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    /// The configuration after a guard at `from` moves to `to`.
    pub fn with_move(&self, from: usize, to: usize) -> Self {
        let mut s = self.clone();
        s.remove(from);
        s.insert(to);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.universe())
    }

    pub fn clear(&mut self) {
        for w in self.words.iter_mut() {
            *w = 0;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Vertices in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Colexicographic order: sets are compared as binary numbers, most
/// significant vertex first. Sets over different universes order by universe.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let mut s = VertexSet::new(70);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert!(s.insert(69));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 69]);
        assert!(s.contains(69));
        assert!(!s.contains(70));
        assert_eq!(s.complement().len(), 68);
        assert!(s.remove(3));
        assert_eq!(s.first(), Some(69));
    }

    #[test]
    fn full_is_trimmed() {
        let f = VertexSet::full(65);
        assert_eq!(f.len(), 65);
        assert!(f.complement().is_empty());
        assert!(VertexSet::full(0).is_empty());
    }

    #[test]
    fn colex_order_matches_numeric_order() {
        let a = VertexSet::from_mask(4, 0b0110);
        let b = VertexSet::from_mask(4, 0b1001);
        assert!(a < b);
        let c = VertexSet::from_vertices(100, [99]);
        let d = VertexSet::from_vertices(100, [0, 1, 2, 98]);
        assert!(d < c);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let b = VertexSet::from_vertices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(a.intersects(&b));
        assert!(VertexSet::from_vertices(10, [1, 3]).is_subset(&a));
        assert_eq!(a.with_move(1, 9).to_vec(), vec![2, 3, 9]);
        assert_eq!(format!("{a}"), "{1, 2, 3}");
    }
}
