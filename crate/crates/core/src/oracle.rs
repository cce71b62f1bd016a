//! Independent searches for the largest balanced independent set, and
//! computational checks of the isoperimetric ordering of `X_0`.
//!
//! Two search engines exist. The exhaustive one looks at every subset of `X_0`
//! and assumes nothing. The sweep only looks at initial segments of `X_0` in
//! simplicial order, which is complete only because initial segments minimise
//! neighbourhoods; agreement of the two engines for `n <= 5` anchors the sweep.

use std::cmp::Reverse;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cube::{
    check_ground, ground_mask, parity_class_size, parity_rank, parity_unrank, Count, Parity,
    SimplicialIter, VertexSet,
};
use crate::dense::ParitySet;
use crate::error::{Error, Result};
use crate::family::{neighborhood, segment, Family, SegmentSpec};
use crate::report::{Check, VerificationReport, Witness};

pub const EXHAUSTIVE_MAX_N: u32 = 5;
pub const SEGMENT_MAX_N: u32 = 24;
pub const SAMPLED_MIN_N: u32 = 6;
pub const SAMPLED_MAX_N: u32 = 16;
pub const TERMINAL_MAX_N: u32 = 16;

const SWEEP_NOTE: &str =
    "segment sweep: only initial segments of X_0 are examined, relying on the isoperimetric ordering";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMethod {
    Exhaustive,
    Segment,
}

impl SearchMethod {
    pub fn name(self) -> &'static str {
        match self {
            SearchMethod::Exhaustive => "exhaustive",
            SearchMethod::Segment => "segment",
        }
    }
}

/// Optimum of a search, with a balanced independent set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: u32,
    pub optimum: Count,
    pub witness: Family,
    pub method: SearchMethod,
}

/// Both parity classes listed by rank, with each even vertex's neighbours as
/// a bit mask over odd ranks. Only used for `n <= 5`, so masks fit in `u16`.
struct SmallCube {
    n: u32,
    even: Vec<VertexSet>,
    odd: Vec<VertexSet>,
    neighbors: Vec<u16>,
}

impl SmallCube {
    fn new(n: u32) -> Result<Self> {
        check_ground(n, 1, EXHAUSTIVE_MAX_N)?;
        let even: Vec<VertexSet> = SimplicialIter::new(n, Parity::Even)?.collect();
        let odd: Vec<VertexSet> = SimplicialIter::new(n, Parity::Odd)?.collect();
        let neighbors = even
            .iter()
            .map(|&x| {
                (1..=n).try_fold(0u16, |mask, i| {
                    Ok::<_, Error>(mask | 1 << parity_rank(x.toggle(i), n)?)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SmallCube {
            n,
            even,
            odd,
            neighbors,
        })
    }

    fn class_size(&self) -> usize {
        self.even.len()
    }

    /// Mask over odd ranks of `N(A)`, for `A` a mask over even ranks.
    #[inline]
    fn cover(&self, subset: u32) -> u32 {
        let mut rest = subset;
        let mut covered = 0u32;
        while rest != 0 {
            covered |= u32::from(self.neighbors[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        covered
    }

    fn family(&self, side: &[VertexSet], mask: u32) -> Family {
        let members = (0..side.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| side[i]);
        Family::new(self.n, members).expect("cube vertices are valid")
    }

    fn all_subsets(&self) -> std::ops::Range<u32> {
        0..1u32 << self.class_size()
    }
}

/// Best balanced independent set by enumerating every `A ⊆ X_0`, `n <= 5`.
///
/// The optimum is `2 max_A min(|A|, |X_1 ∖ N(A)|)`. Among optimal `A` the one
/// with the smallest rank mask wins, and the witness keeps the first
/// `optimum / 2` members of `A` and of `X_1 ∖ N(A)`.
pub fn max_balanced_exhaustive(n: u32) -> Result<SearchResult> {
    let cube = SmallCube::new(n)?;
    let h = cube.class_size() as u32;
    let full = (1u32 << h) - 1;
    let (value, Reverse(best)) = cube
        .all_subsets()
        .into_par_iter()
        .map(|a| {
            let free = h - cube.cover(a).count_ones();
            (a.count_ones().min(free), Reverse(a))
        })
        .max()
        .expect("at least the empty subset");
    let free = full & !cube.cover(best);
    let keep = |mask: u32| {
        let mut out = 0u32;
        let mut rest = mask;
        for _ in 0..value {
            out |= rest & rest.wrapping_neg();
            rest &= rest - 1;
        }
        out
    };
    let witness = cube
        .family(&cube.even, keep(best))
        .union(&cube.family(&cube.odd, keep(free)))?;
    Ok(SearchResult {
        n,
        optimum: 2 * u64::from(value),
        witness,
        method: SearchMethod::Exhaustive,
    })
}

/// Incremental scan of `X_0` in simplicial order that tracks how much of
/// `X_1` the prefix covers. `X_1` is indexed by the low `n - 1` bits of each
/// vertex, which determine it within the class.
struct Sweep {
    n: u32,
    order: SimplicialIter,
    covered: Vec<u64>,
    covered_count: u64,
    added: u64,
    class_size: u64,
}

impl Sweep {
    fn new(n: u32) -> Result<Self> {
        let class_size = parity_class_size(n)?;
        Ok(Sweep {
            n,
            order: SimplicialIter::new(n, Parity::Even)?,
            covered: vec![0; class_size.div_ceil(64) as usize],
            covered_count: 0,
            added: 0,
            class_size,
        })
    }

    fn uncovered(&self) -> u64 {
        self.class_size - self.covered_count
    }

    /// Adds the next even vertex, calling `on_new` with each odd vertex it
    /// newly covers. Returns `false` once `X_0` is exhausted.
    fn step(&mut self, mut on_new: impl FnMut(VertexSet)) -> bool {
        let Some(x) = self.order.next() else {
            return false;
        };
        let low = ground_mask(self.n - 1);
        let before = self.uncovered();
        for i in 1..=self.n {
            let y = x.toggle(i);
            let code = (y.bits() & low) as usize;
            let word = &mut self.covered[code / 64];
            let bit = 1u64 << (code % 64);
            if *word & bit == 0 {
                *word |= bit;
                self.covered_count += 1;
                on_new(y);
            }
        }
        self.added += 1;
        assert!(
            self.uncovered() <= before,
            "coverage shrank during the sweep"
        );
        true
    }
}

/// Best balanced independent set among `A` = initial segment of `X_0`,
/// `n <= 24`.
pub fn max_balanced_segment(n: u32) -> Result<SearchResult> {
    check_ground(n, 1, SEGMENT_MAX_N)?;
    let mut sweep = Sweep::new(n)?;
    // uncovered(m) - m strictly decreases, so the first failure ends the scan
    let mut best = 0u64;
    while sweep.step(|_| {}) {
        if sweep.uncovered() >= sweep.added {
            best = sweep.added;
        } else {
            break;
        }
    }
    let a = segment(SegmentSpec::initial(n, Parity::Even, best))?;
    let b = segment(SegmentSpec::terminal(n, Parity::Odd, best))?;
    Ok(SearchResult {
        n,
        optimum: 2 * best,
        witness: a.union(&b)?,
        method: SearchMethod::Segment,
    })
}

/// Human-readable caveat for reports built from the sweep.
pub fn segment_method_note() -> &'static str {
    SWEEP_NOTE
}

/// Every `A ⊆ X_0` with `|A| = m` has `|N(A)| >= |N(initial segment of length m)|`,
/// checked by enumeration for `n <= 5`.
pub fn check_isoperimetry_exhaustive(n: u32, m: Count) -> Result<VerificationReport> {
    let cube = SmallCube::new(n)?;
    let h = cube.class_size() as u64;
    if m > h {
        return Err(Error::out_of_range("m", m, 0, h));
    }
    let bound = neighborhood(&segment(SegmentSpec::initial(n, Parity::Even, m))?).len() as u64;
    let (min_boundary, Reverse(argmin)) = cube
        .all_subsets()
        .into_par_iter()
        .filter(|a| u64::from(a.count_ones()) == m)
        .map(|a| (Reverse(cube.cover(a).count_ones()), Reverse(a)))
        .max()
        .map(|(Reverse(size), a)| (u64::from(size), a))
        .expect("some subset has size m");
    let mut report = VerificationReport::new(format!("isoperimetry n={n} m={m} exhaustive"));
    report.push(
        Check::new("isoperimetry", bound <= min_boundary)
            .with_m(m)
            .with_values(min_boundary, bound)
            .with_witness(Some(Witness::Family(cube.family(&cube.even, argmin)))),
    );
    Ok(report)
}

/// Draws `samples` uniform `m`-subsets of `X_0` and checks the same
/// inequality for each, `6 <= n <= 16`.
///
/// Samples are drawn in order from ChaCha8 seeded with `seed`: each one picks
/// `m` distinct parity ranks and unranks them. Evaluation may run in
/// parallel; the report depends only on the arguments.
pub fn check_isoperimetry_sampled(
    n: u32,
    m: Count,
    samples: u64,
    seed: u64,
) -> Result<VerificationReport> {
    check_ground(n, SAMPLED_MIN_N, SAMPLED_MAX_N)?;
    let h = parity_class_size(n)?;
    if m > h {
        return Err(Error::out_of_range("m", m, 0, h));
    }
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let bound = neighborhood(&segment(SegmentSpec::initial(n, Parity::Even, m))?).len() as u64;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Vec<usize>> = (0..samples)
        .map(|_| rand::seq::index::sample(&mut rng, h as usize, m as usize).into_vec())
        .collect();

    let boundaries: Vec<u64> = draws
        .par_iter()
        .map(|ranks| {
            let mut a = ParitySet::empty(n, Parity::Even)?;
            for &r in ranks {
                a.insert(parity_unrank(n, Parity::Even, r as u64)?)?;
            }
            Ok(a.neighborhood().len())
        })
        .collect::<Result<_>>()?;

    let satisfied = boundaries.iter().filter(|&&b| b >= bound).count() as u64;
    let (argmin, min_boundary) = boundaries
        .iter()
        .copied()
        .enumerate()
        .min_by_key(|&(i, b)| (b, i))
        .expect("samples > 0");
    let sample_family = |i: usize| -> Result<Family> {
        let members = draws[i]
            .iter()
            .map(|&r| parity_unrank(n, Parity::Even, r as u64))
            .collect::<Result<Vec<_>>>()?;
        Family::new(n, members)
    };
    let violation = boundaries.iter().position(|&b| b < bound);

    let mut report = VerificationReport::new(format!(
        "isoperimetry n={n} m={m} sampled samples={samples} seed={seed}"
    ));
    report.push(
        Check::new("isoperimetry_sampled", violation.is_none())
            .with_m(m)
            .with_values(min_boundary, bound)
            .with_witness(Some(Witness::Family(sample_family(
                violation.unwrap_or(argmin),
            )?))),
    );
    report.push(
        Check::new("samples_satisfying", satisfied == samples)
            .with_m(m)
            .with_values(satisfied, samples),
    );
    Ok(report)
}

/// For every `m`, `X_1 ∖ N(initial segment of length m)` is a terminal segment
/// of `X_1`, `n <= 16`. One sweep; coverage is tracked by `X_1` rank.
pub fn check_terminal_property(n: u32) -> Result<VerificationReport> {
    check_ground(n, 1, TERMINAL_MAX_N)?;
    let h = parity_class_size(n)?;
    let mut sweep = Sweep::new(n)?;
    let mut covered_by_rank = vec![false; h as usize];
    // covered ranks form a prefix iff X_1 ∖ N is a suffix
    let mut frontier = 0usize;
    let mut first_failure: Option<(Count, VertexSet)> = None;
    let mut passing = 0u64;
    let mut monotone = true;
    let mut previous = sweep.uncovered();
    for m in 0..=h {
        if m > 0 {
            let mut fault = None;
            sweep.step(|y| match parity_rank(y, n) {
                Ok(r) => covered_by_rank[r as usize] = true,
                Err(e) => fault = Some(e),
            });
            if let Some(e) = fault {
                return Err(e);
            }
            while frontier < covered_by_rank.len() && covered_by_rank[frontier] {
                frontier += 1;
            }
        }
        monotone &= sweep.uncovered() <= previous;
        previous = sweep.uncovered();
        if frontier as u64 == sweep.covered_count {
            passing += 1;
        } else if first_failure.is_none() {
            // the lowest-ranked uncovered vertex sits below some covered one
            first_failure = Some((m, parity_unrank(n, Parity::Odd, frontier as u64)?));
        }
    }
    let mut report = VerificationReport::new(format!("terminal segments n={n}"));
    let mut check =
        Check::new("terminal_segment", first_failure.is_none()).with_values(passing, h + 1);
    if let Some((m, v)) = first_failure {
        check = check.with_m(m).with_witness(Some(Witness::Vertex(v)));
    }
    report.push(check);
    report.push(Check::new("monotone_coverage", monotone));
    Ok(report)
}
