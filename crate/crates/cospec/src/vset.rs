//! Fixed-capacity vertex sets backed by a 128-bit mask.
//!
//! A `VertexSet` doubles as one row of an adjacency matrix, so graph
//! operations reduce to word operations. The capacity bound is what makes
//! the enumeration core cheap; it is far above anything the search paths
//! ever ask for.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

/// Maximum number of vertices any graph in this crate may have.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids in `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Set containing exactly the vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 & (1u128 << v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(mut self, v: usize) -> VertexSet {
        self.insert(v);
        self
    }

    #[inline]
    pub fn without(mut self, v: usize) -> VertexSet {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn lowest(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn intersects(&self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Set difference `self \ other`.
    #[inline]
    pub fn minus(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to the vertex range `0..n`.
    #[inline]
    pub fn complement_within(&self, n: usize) -> VertexSet {
        VertexSet(!self.0).intersection(VertexSet::full(n))
    }

    #[inline]
    pub fn intersection(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    /// Ascending iterator over the members.
    #[inline]
    pub fn iter(&self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(3);
        s.insert(127);
        s.insert(0);
        assert_eq!(s.len(), 3);
        assert!(s.contains(127));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 127]);
        s.remove(3);
        assert_eq!(s.lowest(), Some(0));
        assert!(!s.contains(3));
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(5);
        assert_eq!(s.len(), 5);
        let c = VertexSet::singleton(2).complement_within(5);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        assert_eq!(VertexSet::full(MAX_VERTICES).len(), MAX_VERTICES);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_iter([0, 1, 2]);
        let b = VertexSet::from_iter([2, 3]);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!((a | b).len(), 4);
        assert_eq!(a.minus(b).iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(VertexSet::from_iter([1, 2]).is_subset_of(a));
        assert!(a.intersects(b));
    }
}
