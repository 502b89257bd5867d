//! The reciprocal map b(x) -> x^{-1} b(x^{-1}) mod (x-1)^l as a matrix product,
//! next to the same map done with polynomial arithmetic.
//!
//!     cargo run --example reciprocal_map

use selfdual::omega::{reciprocal_oracle, reciprocal_transform, ReciprocalMap};
use selfdual::{find_irreducible, XPoly};

fn main() -> selfdual::Result<()> {
    let f = find_irreducible(5, 1)?;
    let b = XPoly::from_ints(&f, &[1, 3, 0, 4, 2, 0, 1]);
    let image = reciprocal_transform(&b)?;
    println!("b          = {:?}", show(&b));
    println!("G_7 b      = {:?}", show(&image));
    println!("via x^-1   = {:?}", show(&reciprocal_oracle(&b)));
    assert_eq!(image, reciprocal_oracle(&b));
    assert_eq!(reciprocal_transform(&image)?, b, "the map is an involution");

    // over F_9 the map acts coefficientwise with the same F_3 matrix
    let f9 = find_irreducible(3, 2)?;
    let map = ReciprocalMap::new(3, 4)?;
    let c = XPoly::new(&f9, (0..4).map(|i| f9.from_index(i * 2 + 1)).collect())?;
    println!("over F_9: {:?} -> {:?}", show(&c), show(&map.apply(&c)?));
    Ok(())
}

fn show(b: &XPoly) -> Vec<String> {
    b.coeffs().iter().map(|c| c.to_string()).collect()
}
