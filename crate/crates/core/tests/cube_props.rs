use std::cmp::Ordering;

use balanced_cube::{
    binomial, layer_rank, layer_unrank, parity_rank, parity_unrank, simplicial_cmp, Parity,
    VertexSet,
};
use proptest::prelude::*;

fn all_vertices(n: u32) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet::from_bits)
}

/// Reference order: size, then the sorted element lists compared left to right.
fn reference_cmp(x: VertexSet, y: VertexSet) -> Ordering {
    let xs: Vec<u32> = x.elements().collect();
    let ys: Vec<u32> = y.elements().collect();
    xs.len().cmp(&ys.len()).then_with(|| xs.cmp(&ys))
}

#[test]
fn simplicial_order_is_a_total_order() {
    for n in 0..=5 {
        let vs: Vec<VertexSet> = all_vertices(n).collect();
        for &x in &vs {
            for &y in &vs {
                let xy = simplicial_cmp(x, y);
                assert_eq!(xy, simplicial_cmp(y, x).reverse());
                assert_eq!(xy == Ordering::Equal, x == y);
                assert_eq!(xy, reference_cmp(x, y), "{x} vs {y}");
                for &z in &vs {
                    if xy == Ordering::Less && simplicial_cmp(y, z) == Ordering::Less {
                        assert_eq!(simplicial_cmp(x, z), Ordering::Less);
                    }
                }
            }
        }
    }
}

#[test]
fn rank_round_trips() {
    for n in 1..=10 {
        for x in all_vertices(n) {
            let r = layer_rank(x, n).unwrap();
            assert_eq!(layer_unrank(n, x.size(), r).unwrap(), x);
            let p = parity_rank(x, n).unwrap();
            assert_eq!(parity_unrank(n, x.parity(), p).unwrap(), x);
        }
    }
}

#[test]
fn ranks_follow_the_simplicial_order() {
    for n in 1..=8 {
        let mut vs: Vec<VertexSet> = all_vertices(n).collect();
        vs.sort_by(|&a, &b| reference_cmp(a, b));
        for w in vs.windows(2) {
            if w[0].size() == w[1].size() {
                assert!(layer_rank(w[0], n).unwrap() < layer_rank(w[1], n).unwrap());
            }
        }
        // within each parity class the ranks are exactly 0, 1, 2, ...
        for parity in [Parity::Even, Parity::Odd] {
            let ranks: Vec<u64> = vs
                .iter()
                .filter(|v| v.parity() == parity)
                .map(|&v| parity_rank(v, n).unwrap())
                .collect();
            assert!(ranks.iter().copied().eq(0..1u64 << (n - 1)));
        }
    }
}

#[test]
fn binomial_identities() {
    for m in 1..=64 {
        for r in 1..=m {
            let lhs = binomial(m, r).unwrap();
            let rhs = binomial(m - 1, r - 1).unwrap() + binomial(m - 1, r).unwrap();
            assert_eq!(lhs, rhs, "Pascal at ({m},{r})");
        }
        for r in 0..=m {
            assert_eq!(binomial(m, r).unwrap(), binomial(m, m - r).unwrap());
        }
    }
    for m in 0..=63 {
        let total: u64 = (0..=m).map(|r| binomial(m, r).unwrap()).sum();
        assert_eq!(total, 1u64 << m);
    }
}

proptest! {
    #[test]
    fn large_ground_round_trips(n in 1u32..=64, raw in any::<u64>()) {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let x = VertexSet::from_bits(raw & mask);
        let r = layer_rank(x, n).unwrap();
        prop_assert!(r < binomial(n, x.size()).unwrap());
        prop_assert_eq!(layer_unrank(n, x.size(), r).unwrap(), x);
        let p = parity_rank(x, n).unwrap();
        prop_assert!(p < 1u64 << (n - 1));
        prop_assert_eq!(parity_unrank(n, x.parity(), p).unwrap(), x);
    }

    #[test]
    fn simplicial_cmp_matches_reference(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
        prop_assert_eq!(simplicial_cmp(x, y), reference_cmp(x, y));
    }

    #[test]
    fn text_forms_round_trip(raw in any::<u64>()) {
        let x = VertexSet::from_bits(raw);
        prop_assert_eq!(x.to_string().parse::<VertexSet>().unwrap(), x);
        prop_assert_eq!(x.to_hex().parse::<VertexSet>().unwrap(), x);
    }
}
