//! Families of vertices and the predicates used to reason about them.

use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cube::{
    check_ground, parity_class_size, parity_rank, Count, Parity, SimplicialIter, VertexSet, MAX_N,
};
use crate::dense::{ParitySet, DENSE_MAX_N};
use crate::error::{Error, Result};

/// A set of vertices of `Q_n`, deduplicated and kept in simplicial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: u32,
    members: Vec<VertexSet>,
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Family(n={}) ", self.n)?;
        f.debug_set().entries(&self.members).finish()
    }
}

impl Family {
    /// Validates, sorts and silently deduplicates.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: u32, members: I) -> Result<Self> {
        check_ground(n, 1, MAX_N)?;
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        for v in &members {
            v.check_valid(n)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n, members })
    }

    pub fn empty(n: u32) -> Result<Self> {
        Family::new(n, [])
    }

    pub(crate) fn from_sorted_unchecked(n: u32, members: Vec<VertexSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Family { n, members }
    }

    /// Convenience constructor from element lists, e.g. `&[&[], &[1, 2]]`.
    pub fn from_element_lists(n: u32, sets: &[&[u32]]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| VertexSet::from_elements(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Family::new(n, members)
    }

    /// All of `X_0` or `X_1`.
    pub fn parity_class(n: u32, parity: Parity) -> Result<Self> {
        check_ground(n, 1, DENSE_MAX_N)?;
        Ok(Family {
            n,
            members: SimplicialIter::new(n, parity)?.collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, v: VertexSet) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "union of families over n={} and n={}",
                self.n, other.n
            )));
        }
        Family::new(self.n, self.iter().chain(other.iter()))
    }

    /// Members of the given parity.
    pub fn restrict(&self, parity: Parity) -> Family {
        Family {
            n: self.n,
            members: self.iter().filter(|v| v.parity() == parity).collect(),
        }
    }

    pub fn count_parity(&self, parity: Parity) -> usize {
        self.iter().filter(|v| v.parity() == parity).count()
    }

    /// The common parity of all members; `None` for the empty family.
    pub fn uniform_parity(&self) -> Result<Option<Parity>> {
        let mut it = self.iter();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let p = first.parity();
        if it.all(|v| v.parity() == p) {
            Ok(Some(p))
        } else {
            Err(Error::MixedParity)
        }
    }

    /// Compact record with hex words instead of element lists.
    pub fn to_hex_record(&self) -> HexRecord {
        HexRecord {
            n: self.n,
            hex: self.iter().map(VertexSet::to_hex).collect(),
        }
    }

    pub fn to_sets_record(&self) -> SetsRecord {
        SetsRecord {
            n: self.n,
            sets: self.iter().map(|v| v.elements().collect()).collect(),
        }
    }
}

/// `{n, sets: [[1,2], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetsRecord {
    pub n: u32,
    pub sets: Vec<Vec<u32>>,
}

/// `{n, hex: ["0x3", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexRecord {
    pub n: u32,
    pub hex: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyRecord {
    Sets(SetsRecord),
    Hex(HexRecord),
}

impl TryFrom<SetsRecord> for Family {
    type Error = Error;

    fn try_from(r: SetsRecord) -> Result<Family> {
        let members = r
            .sets
            .into_iter()
            .map(VertexSet::from_elements)
            .collect::<Result<Vec<_>>>()?;
        Family::new(r.n, members)
    }
}

impl TryFrom<HexRecord> for Family {
    type Error = Error;

    fn try_from(r: HexRecord) -> Result<Family> {
        let members = r
            .hex
            .iter()
            .map(|h| VertexSet::from_hex(h))
            .collect::<Result<Vec<_>>>()?;
        Family::new(r.n, members)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_sets_record().serialize(serializer)
    }
}

/// Accepts both the element-list and the hex record.
impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let family = match AnyRecord::deserialize(deserializer)? {
            AnyRecord::Sets(r) => Family::try_from(r),
            AnyRecord::Hex(r) => Family::try_from(r),
        };
        family.map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    Initial,
    Terminal,
}

/// The first or last `len` vertices of one parity class in simplicial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentSpec {
    pub n: u32,
    pub parity: Parity,
    pub kind: SegmentKind,
    pub len: Count,
}

impl SegmentSpec {
    pub fn initial(n: u32, parity: Parity, len: Count) -> Self {
        SegmentSpec {
            n,
            parity,
            kind: SegmentKind::Initial,
            len,
        }
    }

    pub fn terminal(n: u32, parity: Parity, len: Count) -> Self {
        SegmentSpec {
            n,
            parity,
            kind: SegmentKind::Terminal,
            len,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let total = parity_class_size(self.n)?;
        if self.len > total {
            return Err(Error::out_of_range("segment length", self.len, 0, total));
        }
        Ok(())
    }

    /// First parity rank covered by the segment.
    pub fn start_rank(&self) -> Result<Count> {
        self.validate()?;
        Ok(match self.kind {
            SegmentKind::Initial => 0,
            SegmentKind::Terminal => parity_class_size(self.n)? - self.len,
        })
    }

    /// Walks the segment in simplicial order without materializing it.
    pub fn iter(&self) -> Result<SimplicialIter> {
        let start = self.start_rank()?;
        Ok(SimplicialIter::from_rank(self.n, self.parity, start)?.take_count(self.len))
    }
}

/// The segment named by `spec`, located by unranking its first vertex.
pub fn segment(spec: SegmentSpec) -> Result<Family> {
    let members: Vec<VertexSet> = spec.iter()?.collect();
    Ok(Family::from_sorted_unchecked(spec.n, members))
}

/// `N(A)`: every vertex adjacent to some member of `A`.
pub fn neighborhood(a: &Family) -> Family {
    let n = a.n();
    let members = a.iter().flat_map(|x| (1..=n).map(move |i| x.toggle(i)));
    Family::new(n, members).expect("toggles stay inside the ground set")
}

/// `X_{1-p} ∖ N(A)` for a family `A ⊆ X_p`.
///
/// The empty family is read as a subset of `X_0`, so it yields all of `X_1`.
pub fn co_neighborhood(a: &Family) -> Result<Family> {
    let parity = a.uniform_parity()?.unwrap_or(Parity::Even);
    let dense = ParitySet::from_family(a, parity)?;
    Ok(dense.neighborhood().complement().to_family())
}

/// Whether dense bit-parallel checks beat per-member hashing.
fn prefer_dense(s: &Family) -> bool {
    s.n() <= DENSE_MAX_N && (1u64 << (s.n() - 1)) / 64 <= s.len() as u64 * s.n() as u64
}

/// An adjacent pair `(even member, odd member)` of `s`, if any.
pub fn find_adjacent_pair(s: &Family) -> Option<(VertexSet, VertexSet)> {
    if prefer_dense(s) {
        let even = ParitySet::from_family(s, Parity::Even).expect("checked ground size");
        let odd = ParitySet::from_family(s, Parity::Odd).expect("checked ground size");
        let b = even.neighborhood().first_common(&odd)?;
        let a = (1..=s.n())
            .map(|i| b.toggle(i))
            .find(|&x| even.contains(x))?;
        return Some((a, b));
    }
    let bits: HashSet<u64> = s.iter().map(VertexSet::bits).collect();
    s.iter()
        .filter(|v| v.parity() == Parity::Even)
        .find_map(|a| {
            (1..=s.n())
                .map(|i| a.toggle(i))
                .find(|b| bits.contains(&b.bits()))
                .map(|b| (a, b))
        })
}

/// No two members differ in exactly one element.
pub fn is_independent(s: &Family) -> bool {
    find_adjacent_pair(s).is_none()
}

/// As many even members as odd ones.
pub fn is_balanced(s: &Family) -> bool {
    s.count_parity(Parity::Even) == s.count_parity(Parity::Odd)
}

/// A vertex outside the independent family `s` with no neighbour in it.
pub fn find_undominated(s: &Family) -> Result<Option<VertexSet>> {
    if let Some((a, b)) = find_adjacent_pair(s) {
        return Err(Error::NotIndependent { a, b });
    }
    let n = s.n();
    if n > DENSE_MAX_N {
        return Err(Error::out_of_range("n", n as u64, 1, DENSE_MAX_N as u64));
    }
    let even = ParitySet::from_family(s, Parity::Even)?;
    let odd = ParitySet::from_family(s, Parity::Odd)?;
    // X_0 ∖ S must be covered by N(S ∩ X_1), and symmetrically
    Ok(even
        .complement()
        .first_missing_from(&odd.neighborhood())
        .or_else(|| odd.complement().first_missing_from(&even.neighborhood())))
}

/// Every vertex outside `s` has a neighbour in `s`. Errors if `s` is not independent.
pub fn is_maximal_independent(s: &Family) -> Result<bool> {
    Ok(find_undominated(s)?.is_none())
}

fn occupies_rank_range(f: &Family, kind: SegmentKind) -> Result<bool> {
    if f.uniform_parity()?.is_none() {
        return Ok(true);
    }
    let total = parity_class_size(f.n())?;
    let len = f.len() as u64;
    for v in f.iter() {
        let r = parity_rank(v, f.n())?;
        let inside = match kind {
            SegmentKind::Initial => r < len,
            SegmentKind::Terminal => r >= total - len,
        };
        if !inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ranks of `f` are exactly the last `|f|` ranks of its parity class.
pub fn is_terminal_segment(f: &Family) -> Result<bool> {
    occupies_rank_range(f, SegmentKind::Terminal)
}

/// Ranks of `f` are exactly `0..|f|` within its parity class.
pub fn is_initial_segment(f: &Family) -> Result<bool> {
    occupies_rank_range(f, SegmentKind::Initial)
}
