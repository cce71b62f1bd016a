//! Compares the size formula with the two independent searches.
//!
//! Exhaustive search covers `n <= 5`; the segment sweep goes to `n = 24`
//! (slow near the top, use `--release`).

use balanced_cube::oracle::{segment_method_note, EXHAUSTIVE_MAX_N};
use balanced_cube::{extremal_size, max_balanced_exhaustive, max_balanced_segment};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hi: u32 = std::env::args().nth(1).map_or(Ok(16), |s| s.parse())?;
    println!("{}", segment_method_note());
    println!("n\tformula\texhaustive\tsegment");
    for n in 1..=hi {
        let exhaustive = if n <= EXHAUSTIVE_MAX_N {
            max_balanced_exhaustive(n)?.optimum.to_string()
        } else {
            "-".into()
        };
        let seg = max_balanced_segment(n)?;
        println!("{n}\t{}\t{exhaustive}\t{}", extremal_size(n)?, seg.optimum);
    }

    let best = max_balanced_exhaustive(4)?;
    println!("a maximum for n=4: {:?}", best.witness);
    Ok(())
}
