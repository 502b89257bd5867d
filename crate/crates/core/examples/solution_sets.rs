//! Fixed points of the reciprocal map: the Υ basis of S_l^[δ], checked
//! against a brute-force search that never looks at G.
//!
//!     cargo run --example solution_sets -- 3 8 4

use std::collections::BTreeSet;

use selfdual::gmatrix::g_for_len;
use selfdual::omega::{fixed_point_oracle, s_basis};
use selfdual::FieldSpec;

fn main() -> selfdual::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (p, l, delta) = match args[..] {
        [p, l, d] => (p as u64, l, d),
        _ => (3, 8, 4),
    };
    let f = FieldSpec::prime(p)?;
    println!("G_{l} + I_{l} over F_{p}:\n{}", g_for_len(f.p(), l)?.shift_diagonal(1));

    let basis = s_basis(&f, l, delta)?;
    for v in &basis.vectors {
        println!("Y_{:<3} on [{delta}, {l}): {:?}", v.source_index, v.values);
    }
    println!("dimension {} = ceil(l/2) - ceil(delta/2)", basis.dimension());

    if (p as u128).pow(l as u32) <= 1_000_000 {
        let span: BTreeSet<_> = basis.span().map(|b| b.coeffs().to_vec()).collect();
        let brute: BTreeSet<_> =
            fixed_point_oracle(&f, l)?.into_iter().filter(|v| v[..delta].iter().all(|c| c.is_zero())).collect();
        assert_eq!(span, brute);
        println!("brute force agrees: {} fixed points", span.len());
    }
    Ok(())
}
