//! How many self-dual cyclic codes of length p^s exist over F_{p^m} + uF_{p^m},
//! family by family.
//!
//!     cargo run --example count_codes

use selfdual::enumerator::{count_self_dual, count_table};

fn main() -> selfdual::Result<()> {
    for (p, m, s) in [(3, 1, 2), (3, 1, 3), (5, 1, 2)] {
        println!("p = {p}, m = {m}, s = {s}");
        for (d, n) in count_table(p, m, s)? {
            println!(
                "  {:<7} nu = {:<2} k = {:<3} {} free parameters -> {n} codes",
                d.sub, d.nu, d.k, d.free_param_count
            );
        }
        println!("  total {}", count_self_dual(p, m, s)?);
    }
    println!("p = 7, m = 4, s = 3: {}", count_self_dual(7, 4, 3)?);
    Ok(())
}
