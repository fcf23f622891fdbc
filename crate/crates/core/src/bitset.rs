//! Dense subsets of a finite universe `0..universe`.
//!
//! [`ElementSet`] is used both for subsets of a group (indexed by element)
//! and for subsets of the class list of a group (indexed by class).

use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: Vec<u64>,
    universe: usize,
    card: usize,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: alloc::vec![0; universe.div_ceil(WORD)],
            universe,
            card: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.bits.iter_mut() {
            *w = !0;
        }
        let rem = universe % WORD;
        if rem != 0 {
            if let Some(last) = s.bits.last_mut() {
                *last = (1u64 << rem) - 1;
            }
        }
        s.card = universe;
        s
    }

    pub fn singleton(universe: usize, i: u32) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(universe: usize, iter: I) -> Self {
        let mut s = Self::empty(universe);
        for i in iter {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Cached cardinality.
    #[inline]
    pub fn len(&self) -> usize {
        self.card
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.card == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.card == self.universe
    }

    #[inline]
    pub fn contains(&self, i: u32) -> bool {
        let i = i as usize;
        i < self.universe && self.bits[i / WORD] & (1 << (i % WORD)) != 0
    }

    /// Inserts `i`; returns true when it was not present.
    #[inline]
    pub fn insert(&mut self, i: u32) -> bool {
        let i = i as usize;
        assert!(i < self.universe, "index {i} outside universe {}", self.universe);
        let w = &mut self.bits[i / WORD];
        let m = 1u64 << (i % WORD);
        if *w & m == 0 {
            *w |= m;
            self.card += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, i: u32) -> bool {
        let i = i as usize;
        if i >= self.universe {
            return false;
        }
        let w = &mut self.bits[i / WORD];
        let m = 1u64 << (i % WORD);
        if *w & m != 0 {
            *w &= !m;
            self.card -= 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            bits: &self.bits,
            word: 0,
            cur: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn recount(&mut self) {
        self.card = self.bits.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
        self.recount();
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= *b;
        }
        self.recount();
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !*b;
        }
        self.recount();
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.card <= other.card
            && self
                .bits
                .iter()
                .zip(&other.bits)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementSet({}/{}: ", self.card, self.universe)?;
        f.debug_set().entries(self.iter().take(32)).finish()?;
        if self.card > 32 {
            write!(f, "..")?;
        }
        write!(f, ")")
    }
}

pub struct Iter<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some((self.word * WORD + tz) as u32);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = u32;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
