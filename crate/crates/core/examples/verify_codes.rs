//! Checks enumerated codes with the generic verifier: size |R|^{N/2},
//! self-orthogonality, and pairwise distinctness.
//!
//!     cargo run --example verify_codes

use std::collections::HashSet;
use std::time::Instant;

use selfdual::chainring::{canonical_form, is_self_dual, span_dimension};
use selfdual::enumerator::CodeStream;
use selfdual::{find_irreducible, ChainRing};

fn main() -> selfdual::Result<()> {
    for (p, m, s) in [(3, 1, 2), (3, 2, 2), (5, 2, 1), (7, 1, 1), (3, 1, 3)] {
        let start = Instant::now();
        let f = find_irreducible(p, m)?;
        let ring = ChainRing::new(f.clone());
        let mut forms = HashSet::new();
        let mut checked = 0;
        for code in CodeStream::new(&f, s)? {
            assert!(is_self_dual(&ring, &code.generators), "{code}");
            assert_eq!(span_dimension(&ring, &code.generators), code.n());
            forms.insert(canonical_form(&ring, &code.generators));
            checked += 1;
        }
        println!("p={p} m={m} s={s}: {checked} self-dual, {} distinct ({:.2?})", forms.len(), start.elapsed());
    }
    Ok(())
}
