//! x -> -x turns each self-dual cyclic code into a self-dual negacyclic one.
//!
//!     cargo run --example negacyclic_codes

use selfdual::chainring::is_self_dual;
use selfdual::enumerator::{enumerate_codes, to_negacyclic};
use selfdual::{ChainRing, FieldSpec};

fn main() -> selfdual::Result<()> {
    let ring = ChainRing::new(FieldSpec::prime(3)?);
    for code in enumerate_codes(3, 1, 2)? {
        let image = to_negacyclic(&code);
        let ok = is_self_dual(&ring, &image);
        let a: Vec<String> = image.generators[0].entries.iter().map(|e| format!("{}+{}u", e.a, e.b)).collect();
        println!("{code}\n    phi, first generator (x^0..x^8): {}  self-dual in R[x]/(x^9+1): {ok}", a.join(" "));
        assert!(ok);
    }
    Ok(())
}
