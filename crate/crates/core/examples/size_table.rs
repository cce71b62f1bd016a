//! Exact extremal sizes up to `n = 63`, by binomial arithmetic alone.

use balanced_cube::{check_counts, extremal_size, pair_sizes, COUNT_MAX_N};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("n\tcase\t|A u B|\tshare of Q_n");
    for n in 1..=COUNT_MAX_N {
        let (a, b) = pair_sizes(n)?;
        assert_eq!(a, b);
        let share = 2.0 * a as f64 / 2f64.powi(n as i32);
        println!("{n}\t{}\t{}\t{share:.4}", n % 4, extremal_size(n)?);
    }
    // piece counts against the closed form
    let report = check_counts(COUNT_MAX_N)?;
    print!("{report}");
    Ok(())
}
