//! Streams every self-dual cyclic code of length 9 over F_3 + uF_3, then jumps
//! straight to one code deep inside a much larger family.
//!
//!     cargo run --example enumerate_codes

use num_bigint::BigUint;
use selfdual::enumerator::{code_at, enumerate_codes};
use selfdual::find_irreducible;

fn main() -> selfdual::Result<()> {
    for (i, code) in enumerate_codes(3, 1, 2)?.enumerate() {
        println!("{i:>2}  {code}");
    }

    let f = find_irreducible(5, 2)?;
    let index: BigUint = "123456789012345".parse().unwrap();
    let code = code_at(&f, 3, &index)?.expect("index below the count");
    println!(
        "\ncode #{index} for p = 5, m = 2, s = 3: k = {}, params {:?}",
        code.k(),
        code.params.iter().map(|a| a.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}
