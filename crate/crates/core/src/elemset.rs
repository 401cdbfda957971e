//! Sets of element indices over a fixed carrier.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of a carrier `0..universe`, stored as a bitset.
///
/// The total order is the canonical one used for ideals and submodules:
/// smaller sets first, ties broken by comparing the ascending element lists
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    bits: FixedBitSet,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert(x);
        s
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    pub fn from_elems(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(universe);
        for x in elems {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Inserts `x`, returning true if it was not already present.
    pub fn insert(&mut self, x: usize) -> bool {
        !self.bits.put(x)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElemSet { bits }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElemSet { bits }
    }

    /// Number of common elements, without allocating.
    pub fn intersection_len(&self, other: &ElemSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = ElemSet::from_elems(6, [0, 3]);
        let b = ElemSet::from_elems(6, [0, 2, 4]);
        let c = ElemSet::from_elems(6, [0, 2]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn set_algebra() {
        let a = ElemSet::from_elems(8, [0, 2, 4, 6]);
        let b = ElemSet::from_elems(8, [0, 4]);
        assert!(b.is_subset(&a));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(ElemSet::full(3).to_vec(), vec![0, 1, 2]);
        let mut s = ElemSet::new(4);
        assert!(s.insert(1));
        assert!(!s.insert(1));
    }
}
