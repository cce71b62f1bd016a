//! Maximum balanced independent sets of the discrete cube `Q_n`.
//!
//! An independent set of `Q_n` is *balanced* when it holds as many even-sized
//! as odd-sized vertices. This crate builds, for every `n <= 30`, a largest
//! balanced independent set from layers and prefix-shifted layers of the cube,
//! gives its exact size for `n <= 63`, and cross-checks everything against
//! brute-force oracles:
//!
//! * [`cube`]: packed vertices, exact binomials, the simplicial order, ranking.
//! * [`family`] and [`dense`]: families of vertices, neighbourhoods, segments,
//!   independence, balance and maximality.
//! * [`construct`]: the size formula and the four residue-class constructions.
//! * [`oracle`]: exhaustive and segment-sweep searches, isoperimetry checks.
//! * [`cli`]: the `balcube` command-line driver.
//!
//! ```
//! use balanced_cube::{construct_pair, extremal_size, verify_pair};
//!
//! let pair = construct_pair(7).unwrap();
//! assert_eq!(pair.size(), extremal_size(7).unwrap());
//! assert!(verify_pair(7).unwrap().passed());
//! ```

pub mod cli;
pub mod construct;
pub mod cube;
pub mod dense;
pub mod error;
pub mod family;
pub mod oracle;
pub mod report;

pub use construct::{
    case_pieces, check_counts, construct_pair, extremal_size, pair_sizes, prefix_layer,
    verify_constructed, verify_pair, ExtremalPair, Piece, CONSTRUCT_MAX_N, COUNT_MAX_N,
};
pub use cube::{
    binomial, layer_rank, layer_unrank, parity_class_size, parity_rank, parity_unrank,
    simplicial_cmp, Count, LayerIter, Parity, SimplicialIter, VertexSet, MAX_N,
};
pub use dense::{ParitySet, DENSE_MAX_N};
pub use error::{Error, Result};
pub use family::{
    co_neighborhood, find_adjacent_pair, find_undominated, is_balanced, is_independent,
    is_initial_segment, is_maximal_independent, is_terminal_segment, neighborhood, segment, Family,
    SegmentKind, SegmentSpec,
};
pub use oracle::{
    check_isoperimetry_exhaustive, check_isoperimetry_sampled, check_terminal_property,
    max_balanced_exhaustive, max_balanced_segment, SearchMethod, SearchResult,
};
pub use report::{Check, VerificationReport, Witness};
