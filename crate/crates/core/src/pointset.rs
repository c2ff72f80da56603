//! Bitmask-backed subsets of a finite point universe.

use std::cmp::Ordering;
use std::fmt;

/// Largest universe a [`PointSet`] can index.
pub const MAX_POINTS: usize = 128;

/// A subset of the points `0..universe`.
///
/// Sets over the same universe compare equal iff their masks are equal. The
/// [`Ord`] impl is the canonical order used for every family of sets: first
/// by cardinality, then lexicographically by sorted member indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    mask: u128,
    universe: u8,
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_POINTS, "universe too large");
        PointSet {
            mask: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.mask = full_mask(universe);
        s
    }

    pub fn singleton(universe: usize, p: usize) -> Self {
        Self::from_indices(universe, [p])
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            assert!(i < universe, "point index {i} out of range 0..{universe}");
            s.mask |= 1 << i;
        }
        s
    }

    /// Builds a set from a raw mask; bits outside the universe are dropped.
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        let mut s = Self::empty(universe);
        s.mask = mask & full_mask(universe);
        s
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.universe() && self.mask & (1 << p) != 0
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < self.universe(), "point index {p} out of range");
        self.mask |= 1 << p;
    }

    pub fn remove(&mut self, p: usize) {
        if p < self.universe() {
            self.mask &= !(1 << p);
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.debug_same_universe(other);
        PointSet {
            mask: self.mask | other.mask,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.debug_same_universe(other);
        PointSet {
            mask: self.mask & other.mask,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.debug_same_universe(other);
        PointSet {
            mask: self.mask & !other.mask,
            universe: self.universe,
        }
    }

    pub fn complement(&self) -> Self {
        PointSet {
            mask: !self.mask & full_mask(self.universe()),
            universe: self.universe,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// `self ≬ other`: the sets share at least one point.
    pub fn meets(&self, other: &Self) -> bool {
        self.mask & other.mask != 0
    }

    /// Lowest member index.
    pub fn first(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { mask: self.mask }
    }

    fn debug_same_universe(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "mixed universes");
    }
}

fn full_mask(universe: usize) -> u128 {
    if universe == MAX_POINTS {
        u128::MAX
    } else {
        (1u128 << universe) - 1
    }
}

pub struct Iter {
    mask: u128,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.mask == 0 {
            return None;
        }
        let i = self.mask.trailing_zeros() as usize;
        self.mask &= self.mask - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.mask.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for &PointSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // Equal cardinality: the set owning the lowest differing index is
        // lexicographically smaller, which is the larger bit-reversed mask.
        self.len()
            .cmp(&other.len())
            .then_with(|| other.mask.reverse_bits().cmp(&self.mask.reverse_bits()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
