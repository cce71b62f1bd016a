//! Verifies the constructions over a range of `n` and prints each report.
//!
//! `cargo run --release --example verify_range -- 3 18`

use balanced_cube::verify_pair;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u32>());
    let lo = args.next().transpose()?.unwrap_or(3);
    let hi = args.next().transpose()?.unwrap_or(14);

    let mut bad = 0;
    for n in lo..=hi {
        let report = verify_pair(n)?;
        if report.passed() {
            let size = report
                .check("total_size")
                .and_then(|c| c.measured)
                .unwrap_or(0);
            println!("n={n:>2}  PASS  |A u B| = {size}");
        } else {
            bad += 1;
            print!("{report}");
        }
    }
    println!("{} of {} verified", (hi + 1 - lo) - bad, hi + 1 - lo);
    Ok(())
}
