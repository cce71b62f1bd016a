//! Builds the extremal pair for one `n` and lists its pieces.
//!
//! `cargo run --example construct_pair -- 9`

use balanced_cube::{case_pieces, construct_pair, extremal_size, Piece};

fn describe(piece: &Piece, n: u32) -> String {
    match *piece {
        Piece::Layer(r) => format!("layer {r} of [{n}]  ({} sets)", piece.count(n)),
        Piece::Prefixed { prefix, start, r } => format!(
            "{prefix} + {r}-subsets of {{{start}..{n}}}  ({} sets)",
            piece.count(n)
        ),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(9), |s| s.parse())?;
    let pair = construct_pair(n)?;
    println!("n={n}  n mod 4 = {}  k={}", pair.case(), pair.k());
    println!(
        "|A u B| = {} = extremal size {}",
        pair.size(),
        extremal_size(n)?
    );

    let (a, b) = case_pieces(n)?;
    println!("A (even):");
    for p in &a {
        println!("  {}", describe(p, n));
    }
    println!("B (odd):");
    for p in &b {
        println!("  {}", describe(p, n));
    }

    if pair.size() <= 40 {
        let show = |label: &str, sets: Vec<String>| println!("{label}: {}", sets.join(" "));
        show("A", pair.a_iter().map(|v| v.to_string()).collect());
        show("B", pair.b_iter().map(|v| v.to_string()).collect());
    }
    Ok(())
}
