//! Dense subsets of one parity class of `Q_n`.
//!
//! A vertex of parity `p` is determined by its elements in `[n-1]`: element
//! `n` is present exactly when the rest has the wrong parity. The low `n - 1`
//! bits therefore index each class by a code in `0..2^(n-1)`, and toggling an
//! element `i < n` toggles bit `i - 1` of the code while toggling `n` keeps the
//! code. The neighbourhood of a dense set is then a union of `n` bit
//! permutations of its indicator, computed a word at a time.

use crate::cube::{check_ground, ground_mask, Parity, SimplicialIter, VertexSet};
use crate::error::{Error, Result};
use crate::family::Family;

/// Largest ground size for dense sets (`2^31` flags, 256 MiB).
pub const DENSE_MAX_N: u32 = 32;

/// Masks selecting the positions whose bit `b` is clear, for `b < 6`.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

#[inline]
fn swap_within_word(w: u64, b: u32) -> u64 {
    let shift = 1u32 << b;
    let m = LOW_HALF[b as usize];
    ((w & m) << shift) | ((w >> shift) & m)
}

/// Indicator of a subset of `X_p`, indexed by code.
#[derive(Clone, PartialEq, Eq)]
pub struct ParitySet {
    n: u32,
    parity: Parity,
    words: Vec<u64>,
}

impl std::fmt::Debug for ParitySet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParitySet")
            .field("n", &self.n)
            .field("parity", &self.parity)
            .field("len", &self.len())
            .finish()
    }
}

impl ParitySet {
    pub fn empty(n: u32, parity: Parity) -> Result<Self> {
        check_ground(n, 1, DENSE_MAX_N)?;
        let words = (1usize << (n - 1)).div_ceil(64);
        Ok(ParitySet {
            n,
            parity,
            words: vec![0; words],
        })
    }

    /// The whole class `X_p`.
    pub fn full(n: u32, parity: Parity) -> Result<Self> {
        let mut s = Self::empty(n, parity)?;
        s.words.fill(u64::MAX);
        s.trim();
        Ok(s)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `2^(n-1)`.
    pub fn capacity(&self) -> u64 {
        1u64 << (self.n - 1)
    }

    fn trim(&mut self) {
        let cap = self.capacity();
        if cap < 64 {
            self.words[0] &= (1u64 << cap) - 1;
        }
    }

    #[inline]
    fn code(&self, v: VertexSet) -> usize {
        (v.bits() & ground_mask(self.n - 1)) as usize
    }

    #[inline]
    fn vertex(&self, code: usize) -> VertexSet {
        let low = code as u64;
        let top = (low.count_ones() + self.parity.bit()) & 1;
        VertexSet::from_bits(low | (top as u64) << (self.n - 1))
    }

    fn check_member(&self, v: VertexSet) -> Result<()> {
        v.check_valid(self.n)?;
        if v.parity() != self.parity {
            return Err(Error::MixedParity);
        }
        Ok(())
    }

    /// Adds `v`, which must lie in this class. Returns whether it was new.
    pub fn insert(&mut self, v: VertexSet) -> Result<bool> {
        self.check_member(v)?;
        Ok(self.insert_unchecked(v))
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, v: VertexSet) -> bool {
        debug_assert!(v.is_valid_for(self.n) && v.parity() == self.parity);
        let c = self.code(v);
        let word = &mut self.words[c / 64];
        let bit = 1u64 << (c % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    /// Membership; vertices outside the class are never members.
    #[inline]
    pub fn contains(&self, v: VertexSet) -> bool {
        if !v.is_valid_for(self.n) || v.parity() != self.parity {
            return false;
        }
        let c = self.code(v);
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in code order (not simplicial order).
    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.words.iter().enumerate().flat_map(move |(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(self.vertex(i * 64 + b))
            })
        })
    }

    /// `N(self)`, a subset of the opposite class.
    pub fn neighborhood(&self) -> ParitySet {
        // toggling element n leaves the code alone
        let mut out = ParitySet {
            n: self.n,
            parity: self.parity.flip(),
            words: self.words.clone(),
        };
        for b in 0..self.n - 1 {
            if b < 6 {
                for (o, &w) in out.words.iter_mut().zip(&self.words) {
                    *o |= swap_within_word(w, b);
                }
            } else {
                let stride = 1usize << (b - 6);
                for (j, o) in out.words.iter_mut().enumerate() {
                    *o |= self.words[j ^ stride];
                }
            }
        }
        out
    }

    /// `X_p ∖ self`.
    pub fn complement(&self) -> ParitySet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    fn check_same_class(&self, other: &ParitySet) {
        assert!(
            self.n == other.n && self.parity == other.parity,
            "dense sets from different classes"
        );
    }

    pub fn intersection_len(&self, other: &ParitySet) -> u64 {
        self.check_same_class(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    /// Some member of `self ∩ other`, if any.
    pub fn first_common(&self, other: &ParitySet) -> Option<VertexSet> {
        self.check_same_class(other);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & *b != 0)
            .map(|(i, (a, b))| self.vertex(i * 64 + (a & b).trailing_zeros() as usize))
    }

    /// Some member of `self ∖ other`, if any.
    pub fn first_missing_from(&self, other: &ParitySet) -> Option<VertexSet> {
        self.check_same_class(other);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| *a & !*b != 0)
            .map(|(i, (a, b))| self.vertex(i * 64 + (a & !b).trailing_zeros() as usize))
    }

    pub fn is_subset(&self, other: &ParitySet) -> bool {
        self.first_missing_from(other).is_none()
    }

    /// Sparse form in simplicial order, found by walking the class.
    pub fn to_family(&self) -> Family {
        let members = SimplicialIter::new(self.n, self.parity)
            .expect("dense ground size is valid")
            .filter(|v| self.contains(*v))
            .collect();
        Family::from_sorted_unchecked(self.n, members)
    }

    /// Dense form of the members of `family` with this parity.
    pub fn from_family(family: &Family, parity: Parity) -> Result<Self> {
        let mut s = Self::empty(family.n(), parity)?;
        for v in family.iter().filter(|v| v.parity() == parity) {
            s.insert_unchecked(v);
        }
        Ok(s)
    }
}
