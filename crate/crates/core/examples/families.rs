//! Independence, balance and maximality on hand-made families, plus the JSON
//! record formats.

use balanced_cube::{
    co_neighborhood, find_adjacent_pair, find_undominated, is_balanced, is_maximal_independent,
    neighborhood, Family, Parity,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    let f = Family::from_element_lists(n, &[&[], &[1, 2], &[1, 3, 4], &[2, 3, 4]])?;
    println!("F = {f:?}");
    println!("balanced: {}", is_balanced(&f));
    println!("adjacent pair: {:?}", find_adjacent_pair(&f));
    println!("maximal: {}", is_maximal_independent(&f)?);

    let even = f.restrict(Parity::Even);
    println!("N(A) = {:?}", neighborhood(&even));
    println!("co-N(A) = {:?}", co_neighborhood(&even));

    let small = Family::from_element_lists(n, &[&[]])?;
    println!("{small:?} can take {:?}", find_undominated(&small)?);

    let bad = Family::from_element_lists(n, &[&[1], &[1, 2]])?;
    println!("{bad:?} adjacent pair: {:?}", find_adjacent_pair(&bad));

    let sets = serde_json::to_string(&f.to_sets_record())?;
    let hex = serde_json::to_string(&f.to_hex_record())?;
    println!("{sets}\n{hex}");
    let back: Family = serde_json::from_str(&hex)?;
    assert_eq!(back, f);
    Ok(())
}
