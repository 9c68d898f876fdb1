//! Print the special-pattern lookup tables the fast decoder consults before
//! falling back to its linear scan.
//!
//! ```bash
//! cargo run --example lookup_tables
//! ```

use qcrc::LookupTable;

fn main() -> qcrc::Result<()> {
    // Bursts whose window touches the shift positions c, m - c, or the last
    // block m produce syndromes the scan cannot resolve locally; those are
    // precomputed here. Window starts past position m wrap around, so the
    // cyclic table is slightly larger.
    for (m, c) in [(5usize, 1usize), (9, 2)] {
        let table = LookupTable::build(m, c, true)?;
        println!(
            "base code m = {m}, c = {c}: {} entries ({} distinct syndromes)",
            table.rows().len(),
            table.unique_len()
        );
        for (e, s) in table.rows() {
            let letters: Vec<String> = e
                .to_pauli()
                .0
                .iter()
                .map(|p| p.as_char().to_string())
                .collect();
            let signs: Vec<&str> = (1..=s.len())
                .map(|j| if s.is_minus(j) { "-" } else { "+" })
                .collect();
            println!("  {} | {}", letters.join(", "), signs.join(", "));
        }
        println!();
    }

    // Without wrap-around windows the table is smaller.
    let open = LookupTable::build(9, 2, false)?;
    println!(
        "m = 9, c = 2 without wrapped windows: {} entries",
        open.rows().len()
    );
    Ok(())
}
