//! G_{p^λ} two ways, its Kronecker structure, and the rank pattern of G_l ± I_l.
//!
//!     cargo run --example g_matrices

use selfdual::gmatrix::{build_g_direct, build_g_kron, g_for_len};

fn main() -> selfdual::Result<()> {
    let g3 = build_g_direct(3, 1)?;
    let g9 = build_g_kron(3, 2)?;
    println!("G_3 =\n{g3}");
    println!("G_9 = G_3 (x) G_3 =\n{g9}");
    assert_eq!(g9, build_g_direct(3, 2)?);
    assert_eq!(g9.mul(&g9)?, selfdual::MatrixFp::identity(3, 9));

    println!(" l  rank(G_l - I)  rank(G_l + I)");
    for l in [1, 2, 5, 8, 9, 10, 26, 27, 100] {
        let g = g_for_len(3, l)?;
        println!("{l:>3}  {:>13}  {:>13}", g.shift_diagonal(-1).rank(), g.shift_diagonal(1).rank());
    }
    Ok(())
}
