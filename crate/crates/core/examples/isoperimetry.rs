//! Vertex-isoperimetric checks inside one parity class.
//!
//! Exhaustive for tiny cubes, seeded sampling for medium ones, and the
//! terminal-segment property along initial segments of `X_1`.

use balanced_cube::{
    check_isoperimetry_exhaustive, check_isoperimetry_sampled, check_terminal_property,
    parity_class_size,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5;
    for m in 0..=parity_class_size(n)? {
        let report = check_isoperimetry_exhaustive(n, m)?;
        let c = &report.checks[0];
        println!(
            "n={n} m={m:>2}  min |N(S)| = {:>2}  segment = {:>2}  {}",
            c.measured.unwrap_or(0),
            c.bound.unwrap_or(0),
            c.status()
        );
    }

    let report = check_isoperimetry_sampled(8, 12, 2_000, 7)?;
    print!("{report}");

    let report = check_terminal_property(10)?;
    print!("{report}");
    Ok(())
}
