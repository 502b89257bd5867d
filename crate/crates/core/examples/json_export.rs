//! Writes codes as JSON, reads them back, and re-verifies the stored generators.
//!
//!     cargo run --example json_export

use selfdual::chainring::is_self_dual;
use selfdual::enumerator::{enumerate_codes, sample_codes};
use selfdual::export::{count_rows, read_code_records, write_count_csv, CodeRecord};
use selfdual::{find_irreducible, ChainRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let first = enumerate_codes(3, 1, 2)?.nth(3).unwrap();
    println!("{}", serde_json::to_string_pretty(&CodeRecord::from_code(&first))?);

    let f = find_irreducible(7, 2)?;
    let lines: String = sample_codes(&f, 2, 4, 2024)?
        .iter()
        .map(|c| serde_json::to_string(&CodeRecord::negacyclic_from_code(c)).unwrap() + "\n")
        .collect();
    for rec in read_code_records(&lines)? {
        let ring = ChainRing::new(rec.field()?);
        let code = rec.to_code_spec()?;
        println!(
            "k = {:>2}, {} params, negacyclic image self-dual: {}",
            code.k(),
            code.params.len(),
            is_self_dual(&ring, &rec.ideal()?)
        );
    }

    write_count_csv(std::io::stdout(), &count_rows(3, 2, 3)?)?;
    Ok(())
}
