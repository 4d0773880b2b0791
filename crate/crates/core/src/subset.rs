//! Fixed-universe bitsets over individual indices.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

type Words = SmallVec<[u64; 2]>;

/// A subset of `{0, .., universe - 1}`.
///
/// Societies of up to 128 individuals live inline without heap allocation,
/// which keeps the exhaustive searches cheap. Two subsets can only be
/// combined when they share a universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    words: Words,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Subset {
            universe,
            words: SmallVec::from_elem(!0, word_count(universe)),
        };
        s.trim();
        s
    }

    /// Builds a subset from indices, rejecting any index outside the universe.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Subset::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(Error::input(format!(
                    "index {i} out of range for {universe} individuals"
                )));
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Interprets the low `universe` bits of `mask` as members.
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        let mut s = Subset::empty(universe);
        for (w, word) in s.words.iter_mut().enumerate().take(2) {
            *word = (mask >> (w * WORD)) as u64;
        }
        s.trim();
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// # Panics
    /// If `i` is outside the universe.
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.universe,
            "index {i} outside universe {}",
            self.universe
        );
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Number of common members, without materialising the intersection.
    pub fn intersection_len(&self, other: &Subset) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> Subset {
        let mut s = Subset {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Checks that `self` lives in a universe of exactly `n` individuals.
    pub fn check_universe(&self, n: usize, what: &str) -> Result<()> {
        if self.universe != n {
            return Err(Error::input(format!(
                "{what} is over {} individuals but the profile has {n}",
                self.universe
            )));
        }
        Ok(())
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
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
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl BitAnd for &Subset {
    type Output = Subset;
    fn bitand(self, rhs: &Subset) -> Subset {
        let mut out = self.clone();
        out.intersect_with(rhs);
        out
    }
}

impl BitOr for &Subset {
    type Output = Subset;
    fn bitor(self, rhs: &Subset) -> Subset {
        let mut out = self.clone();
        out.union_with(rhs);
        out
    }
}

impl Sub for &Subset {
    type Output = Subset;
    fn sub(self, rhs: &Subset) -> Subset {
        let mut out = self.clone();
        out.difference_with(rhs);
        out
    }
}

/// Prints sorted members as `[0 3 5]`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({}/{})", self, self.universe)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = Subset::from_indices(70, [0, 5, 64, 69]).unwrap();
        let b = Subset::from_indices(70, [5, 69]).unwrap();
        assert_eq!(a.len(), 4);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!((&a - &b).to_vec(), vec![0, 64]);
        assert_eq!((&a & &b).to_vec(), vec![5, 69]);
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(a.complement().len(), 66);
        assert!(!a.complement().contains(69));
        assert!(!a.complement().contains(70));
        assert_eq!(Subset::full(70).len(), 70);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(Subset::from_indices(3, [3]).is_err());
    }

    #[test]
    fn empty_universe() {
        let s = Subset::full(0);
        assert!(s.is_empty());
        assert_eq!(s.iter().count(), 0);
        assert_eq!(s.to_string(), "[]");
    }

    #[test]
    fn display_is_sorted() {
        let s = Subset::from_indices(10, [7, 1, 3]).unwrap();
        assert_eq!(s.to_string(), "[1 3 7]");
    }

    #[test]
    fn mask_roundtrip() {
        let s = Subset::from_mask(100, (1u128 << 99) | 0b101);
        assert_eq!(s.to_vec(), vec![0, 2, 99]);
    }
}
