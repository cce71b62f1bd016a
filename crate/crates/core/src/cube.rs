//! Vertices of the cube `Q_n`, exact binomials and the simplicial order.
//!
//! A vertex is a subset of `[n] = {1, ..., n}` packed into a `u64`: element `i`
//! lives in bit `i - 1`. Ground sizes go up to 64, which keeps every count that
//! appears here (at most `2^63`, or `C(64, 32)`) inside exact `u64` arithmetic.
//!
//! The simplicial order compares sizes first and breaks ties lexicographically
//! with small elements first: among sets of equal size, `x < y` iff the least
//! element of `x △ y` belongs to `x`. Numeric comparison of the packed words is
//! a different order and is never used.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ground size.
pub const MAX_N: u32 = 64;

/// Exact non-negative count.
pub type Count = u64;

const fn pascal_table() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    let mut m = 0;
    while m <= 64 {
        t[m][0] = 1;
        let mut r = 1;
        while r <= m {
            t[m][r] = t[m - 1][r - 1] + t[m - 1][r];
            r += 1;
        }
        m += 1;
    }
    t
}

static PASCAL: [[u64; 65]; 65] = pascal_table();

/// `C(m, r)` without range checks on `m`; zero when `r > m`.
#[inline]
pub(crate) fn binom(m: u32, r: u32) -> u64 {
    debug_assert!(m <= MAX_N);
    if r > m {
        0
    } else {
        PASCAL[m as usize][r as usize]
    }
}

/// Exact binomial coefficient `C(m, r)` for `m <= 64`.
pub fn binomial(m: u32, r: u32) -> Result<Count> {
    if m > MAX_N {
        return Err(Error::out_of_range("m", m as u64, 0, MAX_N as u64));
    }
    Ok(binom(m, r))
}

/// Bit mask of the ground set `[n]`.
#[inline]
pub fn ground_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_ground(n: u32, min: u32, max: u32) -> Result<()> {
    if n < min || n > max {
        Err(Error::out_of_range("n", n as u64, min as u64, max as u64))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(size: u32) -> Self {
        if size.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn from_bit(bit: u32) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::InvalidArgument(format!(
                "parity must be 0 or 1, got {bit}"
            ))),
        }
    }

    pub fn bit(self) -> u32 {
        self as u32
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// One vertex of `Q_n`.
///
/// Ordered by the simplicial order, so sorting a slice of vertices yields the
/// canonical order used for every family in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// Builds a vertex from 1-based elements. Repeats are ignored.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > MAX_N {
                return Err(Error::InvalidArgument(format!(
                    "element {e} outside 1..={MAX_N}"
                )));
            }
            bits |= 1u64 << (e - 1);
        }
        Ok(VertexSet(bits))
    }

    /// `{1, ..., r}` for `r <= 64`.
    pub fn initial(r: u32) -> Self {
        VertexSet(ground_mask(r))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn size(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn parity(self) -> Parity {
        Parity::of(self.size())
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, element: u32) -> bool {
        (1..=MAX_N).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    /// `self △ {element}`.
    #[inline]
    pub fn toggle(self, element: u32) -> Self {
        debug_assert!((1..=MAX_N).contains(&element));
        VertexSet(self.0 ^ (1u64 << (element - 1)))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn is_valid_for(self, n: u32) -> bool {
        self.0 & !ground_mask(n) == 0
    }

    pub(crate) fn check_valid(self, n: u32) -> Result<()> {
        if self.is_valid_for(n) {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: self, n })
        }
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Upper-case hex form of the packed word, e.g. `0xD` for `{1,3,4}`.
    pub fn to_hex(self) -> String {
        format!("{:#X}", self.0).replacen("0X", "0x", 1)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix("0x")
            .or_else(|| s.strip_prefix("0X"))
            .ok_or_else(|| Error::InvalidArgument(format!("hex vertex `{s}` lacks 0x prefix")))?;
        u64::from_str_radix(digits, 16)
            .map(VertexSet)
            .map_err(|e| Error::InvalidArgument(format!("hex vertex `{s}`: {e}")))
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses either `{1,3,4}` or `0xD`.
impl FromStr for VertexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with("0x") || s.starts_with("0X") {
            return VertexSet::from_hex(s);
        }
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidArgument(format!("cannot parse vertex `{s}`")))?;
        let mut elements = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let e = part
                .parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad element `{part}` in `{s}`")))?;
            elements.push(e);
        }
        VertexSet::from_elements(elements)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        simplicial_cmp(*self, *other)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Simplicial order: smaller sets first, then lexicographic with small
/// elements first.
#[inline]
pub fn simplicial_cmp(x: VertexSet, y: VertexSet) -> Ordering {
    match x.size().cmp(&y.size()) {
        Ordering::Equal => {
            let diff = x.0 ^ y.0;
            if diff == 0 {
                Ordering::Equal
            } else if x.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        other => other,
    }
}

/// 0-based lexicographic position of `x` among the `|x|`-subsets of `[n]`.
pub fn layer_rank(x: VertexSet, n: u32) -> Result<Count> {
    check_ground(n, 0, MAX_N)?;
    x.check_valid(n)?;
    Ok(layer_rank_unchecked(x.0, n))
}

#[inline]
pub(crate) fn layer_rank_unchecked(bits: u64, n: u32) -> u64 {
    // Every element j skipped before the current choice accounts for all
    // completions that pick j instead.
    let mut remaining = bits.count_ones();
    let mut rank = 0u64;
    let mut j = 1;
    while remaining > 0 {
        if bits >> (j - 1) & 1 == 1 {
            remaining -= 1;
        } else {
            rank += binom(n - j, remaining - 1);
        }
        j += 1;
    }
    rank
}

/// Inverse of [`layer_rank`] on layer `r`.
pub fn layer_unrank(n: u32, r: u32, k: Count) -> Result<VertexSet> {
    check_ground(n, 0, MAX_N)?;
    let total = binom(n, r);
    if k >= total {
        return Err(Error::RankOutOfRange {
            rank: k,
            bound: total,
        });
    }
    Ok(VertexSet(layer_unrank_unchecked(n, r, k)))
}

fn layer_unrank_unchecked(n: u32, r: u32, mut k: u64) -> u64 {
    let mut bits = 0u64;
    let mut remaining = r;
    let mut j = 1;
    while remaining > 0 {
        let c = binom(n - j, remaining - 1);
        if k < c {
            bits |= 1u64 << (j - 1);
            remaining -= 1;
        } else {
            k -= c;
        }
        j += 1;
    }
    bits
}

/// Number of sets in the layers of the same parity strictly below layer `r`.
fn parity_offset(n: u32, r: u32) -> u64 {
    let mut offset = 0u64;
    let mut j = r % 2;
    while j < r {
        offset += binom(n, j);
        j += 2;
    }
    offset
}

/// Position of `x` within its parity class under the simplicial order.
pub fn parity_rank(x: VertexSet, n: u32) -> Result<Count> {
    check_ground(n, 0, MAX_N)?;
    x.check_valid(n)?;
    Ok(parity_offset(n, x.size()) + layer_rank_unchecked(x.0, n))
}

/// Inverse of [`parity_rank`] on the class of the given parity.
pub fn parity_unrank(n: u32, parity: Parity, k: Count) -> Result<VertexSet> {
    let total = parity_class_size(n)?;
    if k >= total {
        return Err(Error::RankOutOfRange {
            rank: k,
            bound: total,
        });
    }
    let (r, within) = locate_parity_rank(n, parity, k);
    Ok(VertexSet(layer_unrank_unchecked(n, r, within)))
}

/// Splits a parity rank into (layer, rank within layer). Requires `k < 2^(n-1)`.
fn locate_parity_rank(n: u32, parity: Parity, mut k: u64) -> (u32, u64) {
    let mut r = parity.bit();
    loop {
        let c = binom(n, r);
        if k < c {
            return (r, k);
        }
        k -= c;
        r += 2;
        debug_assert!(r <= n, "parity rank beyond class");
    }
}

/// `|X_0| = |X_1| = 2^(n-1)`.
pub fn parity_class_size(n: u32) -> Result<Count> {
    check_ground(n, 1, MAX_N)?;
    Ok(1u64 << (n - 1))
}

/// Next set in lexicographic order among the sets with the same number of
/// elements inside `interval` (a contiguous mask whose top bit is `hi - 1`).
#[inline]
fn lex_successor(x: u64, interval: u64, hi: u32) -> Option<u64> {
    // the block of elements pinned against `hi` moves back down behind the
    // highest element that can still advance
    let holes = !x & interval;
    if holes == 0 {
        return None;
    }
    let z = 63 - holes.leading_zeros();
    let pinned = hi - 1 - z;
    let rest = x & ((1u64 << z) - 1);
    if rest == 0 {
        return None;
    }
    let p = 63 - rest.leading_zeros();
    let tail = ((1u64 << pinned) - 1).wrapping_shl(p + 2);
    Some((rest ^ (1u64 << p)) | (1u64 << (p + 1)) | tail)
}

fn interval_mask(lo: u32, hi: u32) -> u64 {
    if lo > hi {
        0
    } else {
        ground_mask(hi) & !ground_mask(lo - 1)
    }
}

/// Lexicographic walk over `prefix ∪ x` for the `r`-subsets `x` of `lo..=hi`.
///
/// Yields nothing when the interval has fewer than `r` elements. The prefix is
/// OR-ed in untouched; callers keep it disjoint from the interval.
#[derive(Clone, Debug)]
pub struct LayerIter {
    hi: u32,
    interval: u64,
    prefix: u64,
    current: Option<u64>,
}

impl LayerIter {
    pub fn new(prefix: VertexSet, lo: u32, hi: u32, r: u32) -> Self {
        debug_assert!(lo >= 1 && hi <= MAX_N);
        let width = (hi + 1).saturating_sub(lo);
        let interval = interval_mask(lo, hi);
        let current = (r <= width).then(|| ground_mask(r) << (lo - 1));
        debug_assert!(prefix.0 & interval == 0);
        LayerIter {
            hi,
            interval,
            prefix: prefix.0,
            current,
        }
    }

    /// Resumes the walk over `[n]` at `start` (which must be valid for `n`).
    fn resume(start: VertexSet, n: u32) -> Self {
        LayerIter {
            hi: n,
            interval: ground_mask(n),
            prefix: 0,
            current: Some(start.0),
        }
    }
}

impl Iterator for LayerIter {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let x = self.current?;
        self.current = lex_successor(x, self.interval, self.hi);
        Some(VertexSet(self.prefix | x))
    }
}

/// Calls `f` on `prefix ∪ x` for every `r`-subset `x` of `lo..=hi`, in
/// increasing numeric order of the packed words.
///
/// Memory-friendly order for filling dense sets; not the simplicial order.
pub fn for_each_in_word_order(
    prefix: VertexSet,
    lo: u32,
    hi: u32,
    r: u32,
    mut f: impl FnMut(VertexSet),
) {
    let width = (hi + 1).saturating_sub(lo);
    if r > width {
        return;
    }
    if r == 0 {
        f(prefix);
        return;
    }
    let shift = lo - 1;
    let limit = 1u128 << width;
    let mut x = (1u128 << r) - 1;
    while x < limit {
        f(VertexSet(prefix.0 | (x as u64) << shift));
        // next word with the same popcount
        let low = x & x.wrapping_neg();
        let ripple = x + low;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
}

/// Walks one parity class of `Q_n` in simplicial order, starting at a given
/// rank.
#[derive(Clone, Debug)]
pub struct SimplicialIter {
    n: u32,
    layer: u32,
    inner: LayerIter,
    remaining: u64,
}

impl SimplicialIter {
    /// The whole class.
    pub fn new(n: u32, parity: Parity) -> Result<Self> {
        Self::from_rank(n, parity, 0)
    }

    /// Ranks `start..2^(n-1)`.
    pub fn from_rank(n: u32, parity: Parity, start: Count) -> Result<Self> {
        let total = parity_class_size(n)?;
        if start > total {
            return Err(Error::RankOutOfRange {
                rank: start,
                bound: total,
            });
        }
        if start == total {
            return Ok(SimplicialIter {
                n,
                layer: n + 1,
                inner: LayerIter::new(VertexSet::EMPTY, 1, n, n + 1),
                remaining: 0,
            });
        }
        let (layer, within) = locate_parity_rank(n, parity, start);
        let first = VertexSet(layer_unrank_unchecked(n, layer, within));
        Ok(SimplicialIter {
            n,
            layer,
            inner: LayerIter::resume(first, n),
            remaining: total - start,
        })
    }

    /// Limits the walk to at most `len` further vertices.
    pub fn take_count(mut self, len: u64) -> Self {
        self.remaining = self.remaining.min(len);
        self
    }
}

impl Iterator for SimplicialIter {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        if self.remaining == 0 {
            return None;
        }
        loop {
            if let Some(v) = self.inner.next() {
                self.remaining -= 1;
                return Some(v);
            }
            self.layer += 2;
            if self.layer > self.n {
                self.remaining = 0;
                return None;
            }
            self.inner = LayerIter::new(VertexSet::EMPTY, 1, self.n, self.layer);
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(elements: &[u32]) -> VertexSet {
        VertexSet::from_elements(elements.iter().copied()).unwrap()
    }

    /// Pascal's triangle built row by row with u128, independent of the table.
    fn pascal_oracle(m: u32, r: u32) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..m {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row.get(r as usize).copied().unwrap_or(0)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(5, 7).unwrap(), 0);
        assert_eq!(pascal_oracle(6, 3), 20);
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert!(matches!(binomial(65, 3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn binomial_matches_oracle_on_every_row() {
        for m in 0..=64 {
            for r in 0..=m + 1 {
                assert_eq!(
                    binomial(m, r).unwrap() as u128,
                    pascal_oracle(m, r),
                    "C({m},{r})"
                );
            }
        }
        assert_eq!(binomial(64, 32).unwrap(), 1_832_624_140_942_590_534);
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(simplicial_cmp(v(&[]), v(&[1])), Ordering::Less);
        assert_eq!(simplicial_cmp(v(&[1, 2]), v(&[1, 3])), Ordering::Less);
        assert_eq!(simplicial_cmp(v(&[1, 4]), v(&[2, 3])), Ordering::Less);
        assert_eq!(simplicial_cmp(v(&[2, 3]), v(&[1, 4])), Ordering::Greater);
        assert_eq!(simplicial_cmp(v(&[2, 3]), v(&[2, 3])), Ordering::Equal);
        // numeric order of the words says otherwise
        assert!(v(&[1, 4]).bits() > v(&[2, 3]).bits());
    }

    #[test]
    fn layer_rank_examples() {
        assert_eq!(layer_rank(v(&[1, 2]), 4).unwrap(), 0);
        assert_eq!(layer_rank(v(&[2, 3]), 4).unwrap(), 3);
        assert_eq!(layer_rank(v(&[3, 4]), 4).unwrap(), 5);
        assert!(layer_rank(v(&[5]), 4).is_err());
    }

    #[test]
    fn layer_unrank_examples() {
        assert_eq!(layer_unrank(4, 2, 0).unwrap(), v(&[1, 2]));
        assert_eq!(layer_unrank(4, 2, 3).unwrap(), v(&[2, 3]));
        assert_eq!(layer_unrank(4, 0, 0).unwrap(), v(&[]));
        assert_eq!(
            layer_unrank(4, 2, 6),
            Err(Error::RankOutOfRange { rank: 6, bound: 6 })
        );
    }

    #[test]
    fn parity_rank_examples() {
        assert_eq!(parity_rank(v(&[]), 3).unwrap(), 0);
        assert_eq!(parity_rank(v(&[1, 3]), 3).unwrap(), 2);
        assert_eq!(parity_rank(v(&[1, 2, 3]), 3).unwrap(), 3);
    }

    #[test]
    fn parity_unrank_examples() {
        assert_eq!(parity_unrank(3, Parity::Odd, 3).unwrap(), v(&[1, 2, 3]));
        assert_eq!(parity_unrank(3, Parity::Even, 0).unwrap(), v(&[]));
        assert_eq!(parity_unrank(4, Parity::Odd, 7).unwrap(), v(&[2, 3, 4]));
        assert!(matches!(
            parity_unrank(4, Parity::Odd, 8),
            Err(Error::RankOutOfRange { rank: 8, bound: 8 })
        ));
    }

    #[test]
    fn parity_class_size_examples() {
        assert_eq!(parity_class_size(1).unwrap(), 1);
        assert_eq!(parity_class_size(3).unwrap(), 4);
        assert_eq!(parity_class_size(10).unwrap(), 512);
        assert_eq!(parity_class_size(64).unwrap(), 1 << 63);
        assert!(parity_class_size(0).is_err());
        assert!(parity_class_size(65).is_err());
    }

    #[test]
    fn extreme_ground_size() {
        let all = VertexSet::from_bits(u64::MAX);
        assert_eq!(parity_rank(all, 64).unwrap(), (1u64 << 63) - 1);
        assert_eq!(
            parity_unrank(64, Parity::Even, (1u64 << 63) - 1).unwrap(),
            all
        );
        let mid = layer_unrank(64, 32, binom(64, 32) - 1).unwrap();
        assert_eq!(mid.bits(), u64::MAX << 32);
    }

    #[test]
    fn text_forms() {
        let x = v(&[1, 3, 4]);
        assert_eq!(x.to_string(), "{1,3,4}");
        assert_eq!(x.to_hex(), "0xD");
        assert_eq!("0xD".parse::<VertexSet>().unwrap(), x);
        assert_eq!("{1, 3,4}".parse::<VertexSet>().unwrap(), x);
        assert_eq!("{}".parse::<VertexSet>().unwrap(), VertexSet::EMPTY);
        assert_eq!(VertexSet::EMPTY.to_hex(), "0x0");
        assert!("{0}".parse::<VertexSet>().is_err());
        assert!("1,2".parse::<VertexSet>().is_err());
    }

    #[test]
    fn layer_iter_is_lexicographic() {
        let got: Vec<String> = LayerIter::new(VertexSet::EMPTY, 1, 4, 2)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"]);
        assert_eq!(
            LayerIter::new(v(&[1]), 3, 4, 2).collect::<Vec<_>>(),
            [v(&[1, 3, 4])]
        );
        assert_eq!(
            LayerIter::new(v(&[1, 2]), 3, 4, 0).collect::<Vec<_>>(),
            [v(&[1, 2])]
        );
        assert_eq!(LayerIter::new(VertexSet::EMPTY, 2, 1, 1).count(), 0);
    }

    #[test]
    fn layer_iter_agrees_with_unranking() {
        for n in 1..=10 {
            for r in 0..=n {
                let walked: Vec<VertexSet> = LayerIter::new(VertexSet::EMPTY, 1, n, r).collect();
                let unranked: Vec<VertexSet> = (0..binom(n, r))
                    .map(|k| layer_unrank(n, r, k).unwrap())
                    .collect();
                assert_eq!(walked, unranked, "n={n} r={r}");
            }
            // tail intervals: same sets as filtering the full layer
            for lo in 1..=n + 1 {
                for r in 0..=n + 1 - lo {
                    let below = ground_mask(lo - 1);
                    let walked: Vec<VertexSet> =
                        LayerIter::new(VertexSet::EMPTY, lo, n, r).collect();
                    let filtered: Vec<VertexSet> = LayerIter::new(VertexSet::EMPTY, 1, n, r)
                        .filter(|v| v.bits() & below == 0)
                        .collect();
                    assert_eq!(walked, filtered, "n={n} lo={lo} r={r}");
                }
            }
        }
        let top: Vec<VertexSet> = LayerIter::new(VertexSet::EMPTY, 62, 64, 2).collect();
        assert_eq!(top.len(), 3);
        assert_eq!(top[2].bits(), 0b11 << 62);
    }

    #[test]
    fn word_order_visits_the_same_sets() {
        for n in 1..=9 {
            for lo in 1..=n + 1 {
                for r in 0..=n + 1 - lo {
                    let prefix = VertexSet(ground_mask(lo - 1) & 0b1);
                    let mut seen = Vec::new();
                    for_each_in_word_order(prefix, lo, n, r, |v| seen.push(v));
                    assert!(seen.windows(2).all(|w| w[0].bits() < w[1].bits()));
                    let mut lex: Vec<VertexSet> = LayerIter::new(prefix, lo, n, r).collect();
                    lex.sort_by_key(|v| v.bits());
                    assert_eq!(seen, lex, "n={n} lo={lo} r={r}");
                }
            }
        }
        let mut count = 0;
        for_each_in_word_order(VertexSet::EMPTY, 1, 64, 63, |_| count += 1);
        assert_eq!(count, 64);
    }

    #[test]
    fn simplicial_iter_walks_classes() {
        let odd: Vec<String> = SimplicialIter::new(4, Parity::Odd)
            .unwrap()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            odd,
            ["{1}", "{2}", "{3}", "{4}", "{1,2,3}", "{1,2,4}", "{1,3,4}", "{2,3,4}"]
        );
        let tail: Vec<VertexSet> = SimplicialIter::from_rank(4, Parity::Odd, 6)
            .unwrap()
            .collect();
        assert_eq!(tail, [v(&[1, 3, 4]), v(&[2, 3, 4])]);
        assert_eq!(
            SimplicialIter::from_rank(4, Parity::Odd, 8)
                .unwrap()
                .count(),
            0
        );
        assert_eq!(
            SimplicialIter::new(1, Parity::Odd)
                .unwrap()
                .collect::<Vec<_>>(),
            [v(&[1])]
        );
        assert_eq!(
            SimplicialIter::new(3, Parity::Even)
                .unwrap()
                .take_count(2)
                .collect::<Vec<_>>(),
            [v(&[]), v(&[1, 2])]
        );
    }
}
