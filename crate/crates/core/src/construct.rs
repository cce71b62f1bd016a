//! The extremal balanced independent sets, one residue class of `n mod 4` at
//! a time.
//!
//! Each side of the pair is a union of *pieces*: whole layers of `[n]`, or
//! prefix-shifted layers `P + [s, n]^(r)` (a fixed prefix `P` below `s` joined
//! with every `r`-subset of `{s, ..., n}`). The even side is an initial segment
//! of `X_0` and the odd side a terminal segment of `X_1`.

use crate::cube::{
    binom, check_ground, for_each_in_word_order, parity_class_size, parity_unrank, simplicial_cmp,
    Count, LayerIter, Parity, SimplicialIter, VertexSet, MAX_N,
};
use crate::dense::ParitySet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::report::{Check, VerificationReport, Witness};

/// Largest `n` for which the pair is materialized.
pub const CONSTRUCT_MAX_N: u32 = 30;

/// Largest `n` served by the count-only path.
pub const COUNT_MAX_N: u32 = 63;

/// Size of the largest balanced independent set of `Q_n`:
/// `2^(n-1) - 2 C(n-2, (n-2)/2)` for even `n`, `2^(n-1) - C(n-1, (n-1)/2)` for odd `n`.
pub fn extremal_size(n: u32) -> Result<Count> {
    check_ground(n, 1, COUNT_MAX_N)?;
    let half_cube = 1u64 << (n - 1);
    let deficit = if n.is_multiple_of(2) {
        2 * binom(n - 2, (n - 2) / 2)
    } else {
        binom(n - 1, (n - 1) / 2)
    };
    Ok(half_cube - deficit)
}

/// One block of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    /// All `r`-subsets of `[n]`.
    Layer(u32),
    /// `prefix ∪ x` for every `r`-subset `x` of `{start, ..., n}`.
    Prefixed {
        prefix: VertexSet,
        start: u32,
        r: u32,
    },
}

impl Piece {
    fn prefixed(prefix: &[u32], start: u32, r: i64) -> Option<Piece> {
        // negative layer sizes describe no sets
        let r = u32::try_from(r).ok()?;
        let prefix = VertexSet::from_elements(prefix.iter().copied()).expect("small prefix");
        Some(Piece::Prefixed { prefix, start, r })
    }

    /// Exact member count, by binomial arithmetic only.
    pub fn count(&self, n: u32) -> Count {
        match *self {
            Piece::Layer(r) => binom(n, r),
            Piece::Prefixed { start, r, .. } => binom((n + 1).saturating_sub(start), r),
        }
    }

    /// Members in lexicographic order.
    pub fn iter(&self, n: u32) -> LayerIter {
        let (prefix, start, r) = self.parts();
        LayerIter::new(prefix, start, n, r)
    }

    fn parts(&self) -> (VertexSet, u32, u32) {
        match *self {
            Piece::Layer(r) => (VertexSet::EMPTY, 1, r),
            Piece::Prefixed { prefix, start, r } => (prefix, start, r),
        }
    }
}

/// Layers `from, from + 2, ..., to` (empty when `from > to`).
fn layers(from: i64, to: i64) -> impl Iterator<Item = Piece> {
    (from..=to).step_by(2).map(|r| Piece::Layer(r as u32))
}

/// Pieces of the even side `A` and the odd side `B` for ground size `n`.
pub fn case_pieces(n: u32) -> Result<(Vec<Piece>, Vec<Piece>)> {
    check_ground(n, 1, MAX_N)?;
    let k = i64::from(n / 4);
    let n64 = i64::from(n);
    let mut a: Vec<Piece> = Vec::new();
    let mut b: Vec<Piece> = Vec::new();
    match n % 4 {
        0 => {
            a.extend(layers(0, 2 * k - 2));
            a.extend(Piece::prefixed(&[1, 2], 3, 2 * k - 2));
            b.extend(Piece::prefixed(&[1], 3, 2 * k));
            b.extend(Piece::prefixed(&[], 2, 2 * k + 1));
            b.extend(layers(2 * k + 3, n64 - 1));
        }
        1 => {
            a.extend(layers(0, 2 * k - 2));
            a.extend(Piece::prefixed(&[1], 2, 2 * k - 1));
            b.extend(Piece::prefixed(&[], 2, 2 * k + 1));
            b.extend(layers(2 * k + 3, n64));
        }
        2 => {
            a.extend(layers(0, 2 * k - 2));
            a.extend(Piece::prefixed(&[1], 2, 2 * k - 1));
            a.extend(Piece::prefixed(&[2], 3, 2 * k - 1));
            b.extend(Piece::prefixed(&[], 3, 2 * k + 1));
            b.extend(layers(2 * k + 3, n64 - 1));
        }
        _ => {
            a.extend(layers(0, 2 * k));
            b.extend(layers(2 * k + 3, n64));
        }
    }
    Ok((a, b))
}

fn sum_counts(pieces: &[Piece], n: u32) -> Result<Count> {
    pieces.iter().try_fold(0u64, |acc, p| {
        acc.checked_add(p.count(n))
            .ok_or(Error::Overflow("piece count"))
    })
}

/// `(|A|, |B|)` from binomial sums over the pieces, without enumeration.
pub fn pair_sizes(n: u32) -> Result<(Count, Count)> {
    check_ground(n, 1, COUNT_MAX_N)?;
    let (a, b) = case_pieces(n)?;
    Ok((sum_counts(&a, n)?, sum_counts(&b, n)?))
}

/// `{ prefix ∪ x : x ⊆ {start, ..., n}, |x| = r }`.
pub fn prefix_layer(prefix: VertexSet, start: u32, n: u32, r: u32) -> Result<Family> {
    check_ground(n, 1, MAX_N)?;
    if start == 0 || start > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "start {start} outside 1..={}",
            n + 1
        )));
    }
    if prefix.max_element().is_some_and(|m| m >= start) {
        return Err(Error::InvalidArgument(format!(
            "prefix {prefix} reaches the tail starting at {start}"
        )));
    }
    let width = n + 1 - start;
    if r > width {
        return Err(Error::InvalidArgument(format!(
            "layer {r} exceeds the {width} elements of {{{start},...,{n}}}"
        )));
    }
    Family::new(n, LayerIter::new(prefix, start, n, r))
}

/// The constructed pair, with both sides held as dense parity-class sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPair {
    n: u32,
    k: u32,
    a: ParitySet,
    b: ParitySet,
}

impl ExtremalPair {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `n mod 4`.
    pub fn case(&self) -> u32 {
        self.n % 4
    }

    /// The `k` with `n ∈ {4k, 4k+1, 4k+2, 4k+3}`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Even side.
    pub fn a(&self) -> &ParitySet {
        &self.a
    }

    /// Odd side.
    pub fn b(&self) -> &ParitySet {
        &self.b
    }

    pub fn size(&self) -> Count {
        self.a.len() + self.b.len()
    }

    pub fn a_family(&self) -> Family {
        self.a.to_family()
    }

    pub fn b_family(&self) -> Family {
        self.b.to_family()
    }

    /// `A ∪ B` as one family.
    pub fn union_family(&self) -> Family {
        self.a_family()
            .union(&self.b_family())
            .expect("both sides share n")
    }

    /// Members of `A` in simplicial order, streamed.
    pub fn a_iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        stream(&self.a)
    }

    /// Members of `B` in simplicial order, streamed.
    pub fn b_iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        stream(&self.b)
    }
}

fn stream(s: &ParitySet) -> impl Iterator<Item = VertexSet> + '_ {
    SimplicialIter::new(s.n(), s.parity())
        .expect("dense ground size")
        .filter(move |v| s.contains(*v))
}

fn materialize(pieces: &[Piece], n: u32, parity: Parity) -> Result<ParitySet> {
    let mut s = ParitySet::empty(n, parity)?;
    let mut wrong_class = false;
    for piece in pieces {
        let (prefix, start, r) = piece.parts();
        for_each_in_word_order(prefix, start, n, r, |v| {
            if v.parity() == parity {
                s.insert_unchecked(v);
            } else {
                wrong_class = true;
            }
        });
    }
    if wrong_class {
        return Err(Error::MixedParity);
    }
    Ok(s)
}

/// Builds `A` and `B` for `1 <= n <= 30`.
pub fn construct_pair(n: u32) -> Result<ExtremalPair> {
    check_ground(n, 1, CONSTRUCT_MAX_N)?;
    let (a_pieces, b_pieces) = case_pieces(n)?;
    Ok(ExtremalPair {
        n,
        k: n / 4,
        a: materialize(&a_pieces, n, Parity::Even)?,
        b: materialize(&b_pieces, n, Parity::Odd)?,
    })
}

/// A member of `s` outside its `len`-long initial (or terminal) segment.
///
/// With `|s| = len` this is empty exactly when `s` is that segment. Membership
/// in the segment is a comparison against its boundary vertex.
fn member_outside_segment(s: &ParitySet, len: Count, terminal: bool) -> Option<VertexSet> {
    let total = parity_class_size(s.n()).expect("dense ground size");
    if terminal {
        if len == 0 {
            return s.iter().next();
        }
        let first = parity_unrank(s.n(), s.parity(), total - len).expect("rank in range");
        s.iter().find(|&v| simplicial_cmp(v, first).is_lt())
    } else {
        if len == total {
            return None;
        }
        let first_excluded = parity_unrank(s.n(), s.parity(), len).expect("rank in range");
        s.iter()
            .find(|&v| simplicial_cmp(v, first_excluded).is_ge())
    }
}

/// Constructs the pair for `n` and checks every claimed property of it.
pub fn verify_pair(n: u32) -> Result<VerificationReport> {
    let pair = construct_pair(n)?;
    Ok(verify_constructed(&pair))
}

/// Runs the seven checks against an already built pair.
pub fn verify_constructed(pair: &ExtremalPair) -> VerificationReport {
    let n = pair.n();
    let (a, b) = (pair.a(), pair.b());
    let (size_a, size_b) = (a.len(), b.len());
    let mut report = VerificationReport::new(format!("pair n={n} case={}", pair.case()));

    report.push(Check::new("sizes_equal", size_a == size_b).with_values(size_a, size_b));

    let expected = extremal_size(n).expect("construct range lies inside count range");
    report.push(
        Check::new("total_size", size_a + size_b == expected)
            .with_values(size_a + size_b, expected),
    );

    let n_a = a.neighborhood();
    let clash = n_a.first_common(b);
    report.push(
        Check::new("independent", clash.is_none()).with_witness(clash.map(|bv| {
            let av = (1..=n).map(|i| bv.toggle(i)).find(|x| a.contains(*x));
            Witness::Family(Family::new(n, av.into_iter().chain([bv])).expect("valid vertices"))
        })),
    );

    // parities are recounted from the stored vertices themselves
    let even = a
        .iter()
        .chain(b.iter())
        .filter(|v| v.parity() == Parity::Even)
        .count() as u64;
    let odd = size_a + size_b - even;
    report.push(Check::new("balanced", even == odd).with_values(even, odd));

    let segment_gap = member_outside_segment(a, size_a, false)
        .or_else(|| member_outside_segment(b, size_b, true));
    report.push(
        Check::new("segment_identity", segment_gap.is_none())
            .with_witness(segment_gap.map(Witness::Vertex)),
    );

    let free = n_a.complement();
    let mismatch = free
        .first_missing_from(b)
        .or_else(|| b.first_missing_from(&free));
    report.push(
        Check::new("co_neighborhood", mismatch.is_none())
            .with_values(size_b, free.len())
            .with_witness(mismatch.map(Witness::Vertex)),
    );

    let undominated = if clash.is_some() {
        None
    } else {
        a.complement()
            .first_missing_from(&b.neighborhood())
            .or_else(|| b.complement().first_missing_from(&n_a))
    };
    report.push(
        Check::new("maximal", clash.is_none() && undominated.is_none())
            .with_witness(undominated.map(Witness::Vertex)),
    );

    report
}

/// Count-only consistency of the case construction against the size formula.
pub fn check_counts(n: u32) -> Result<VerificationReport> {
    let (size_a, size_b) = pair_sizes(n)?;
    let expected = extremal_size(n)?;
    let mut report = VerificationReport::new(format!("counts n={n} case={}", n % 4));
    report.push(Check::new("sizes_equal", size_a == size_b).with_values(size_a, size_b));
    let doubled = size_a.checked_mul(2).ok_or(Error::Overflow("2|A|"))?;
    report.push(Check::new("total_size", doubled == expected).with_values(doubled, expected));
    Ok(report)
}
