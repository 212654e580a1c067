//! Dense position sets backed by `u64` blocks.
//!
//! A [`Region`] is always tied to a fixed universe `[0..n)`, the position
//! index range of one game. All binary operations require both operands to
//! share that universe.

use std::fmt;

/// A set of position indices over a fixed universe `[0..n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Region {
    words: Vec<u64>,
    universe: usize,
}

const BITS: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(BITS)
}

impl Region {
    /// The empty set over `[0..universe)`.
    pub fn empty(universe: usize) -> Self {
        Region {
            words: vec![0; words_for(universe)],
            universe,
        }
    }

    /// The full set `[0..universe)`.
    pub fn full(universe: usize) -> Self {
        let mut r = Region {
            words: vec![!0u64; words_for(universe)],
            universe,
        };
        r.mask_tail();
        r
    }

    /// Builds a region from an iterator of indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut r = Region::empty(universe);
        for i in indices {
            r.insert(i);
        }
        r
    }

    // Bits at or above `universe` must stay zero.
    fn mask_tail(&mut self) {
        let rem = self.universe % BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        debug_assert!(index < self.universe);
        self.words[index / BITS] & (1u64 << (index % BITS)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} outside universe {}", self.universe);
        self.words[index / BITS] |= 1u64 << (index % BITS);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} outside universe {}", self.universe);
        self.words[index / BITS] &= !(1u64 << (index % BITS));
    }

    /// Number of positions in the set.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_same_universe(&self, other: &Region) {
        assert_eq!(
            self.universe, other.universe,
            "regions belong to different universes"
        );
    }

    pub fn union_with(&mut self, other: &Region) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Region) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Region) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Region) -> Region {
        let mut r = self.clone();
        r.union_with(other);
        r
    }

    pub fn intersection(&self, other: &Region) -> Region {
        let mut r = self.clone();
        r.intersect_with(other);
        r
    }

    pub fn difference(&self, other: &Region) -> Region {
        let mut r = self.clone();
        r.difference_with(other);
        r
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Region {
        let mut r = Region {
            words: self.words.iter().map(|w| !w).collect(),
            universe: self.universe,
        };
        r.mask_tail();
        r
    }

    pub fn is_subset_of(&self, other: &Region) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Region) -> bool {
        self.check_same_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Iterates members in ascending index order.
    pub fn iter(&self) -> RegionIter<'_> {
        RegionIter {
            region: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct RegionIter<'a> {
    region: &'a Region,
    word_idx: usize,
    current: u64,
}

impl Iterator for RegionIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.region.words.len() {
                return None;
            }
            self.current = self.region.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * BITS + bit)
    }
}

impl<'a> IntoIterator for &'a Region {
    type Item = usize;
    type IntoIter = RegionIter<'a>;

    fn into_iter(self) -> RegionIter<'a> {
        self.iter()
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
