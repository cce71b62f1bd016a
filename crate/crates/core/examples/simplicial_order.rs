//! The simplicial order on `Q_4`, with ranks inside each parity class.

use balanced_cube::{
    parity_rank, parity_unrank, segment, Parity, SegmentSpec, SimplicialIter, VertexSet,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    for parity in [Parity::Even, Parity::Odd] {
        println!("{parity:?} class:");
        for v in SimplicialIter::new(n, parity)? {
            let rank = parity_rank(v, n)?;
            assert_eq!(parity_unrank(n, parity, rank)?, v);
            println!("  {rank:>2}  {v:<10} {}", v.to_hex());
        }
    }

    let a: VertexSet = "{1,3}".parse()?;
    let b: VertexSet = "{2,3}".parse()?;
    println!("{a} < {b}: {}", a < b);

    let first = segment(SegmentSpec::initial(n, Parity::Odd, 5))?;
    let last = segment(SegmentSpec::terminal(n, Parity::Even, 3))?;
    println!("initial 5 of X_1: {first:?}");
    println!("terminal 3 of X_0: {last:?}");
    Ok(())
}
