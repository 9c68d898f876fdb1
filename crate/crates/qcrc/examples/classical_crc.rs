//! The classical layer: CRC codes over GF(2), their parity-check matrices,
//! polynomial syndromes, and burst-syndrome injectivity.
//!
//! ```bash
//! cargo run --example classical_crc
//! ```

use qcrc::{has_c_property, BinPoly, BurstDecoder, CrcCode, RingElem};

fn main() -> qcrc::Result<()> {
    // g = X^8 + ... + 1 divides X^9 - 1, giving a cyclic [9, 1] code.
    let g: BinPoly = "111111111".parse()?;
    let code = CrcCode::new(g.clone(), 9)?;
    println!(
        "[{}, {}] code from g = {g}, corrects bursts up to {}",
        code.n(),
        code.k(),
        code.burst_bound()
    );

    println!("\nparity-check rows (identity block, then remainder columns):");
    for j in 1..=code.redundancy() {
        println!("  {}", code.h_row(j));
    }

    // The matrix syndrome of an error vector equals the remainder of its
    // polynomial modulo g.
    let e = RingElem::from_positions(9, &[2, 3, 5]);
    let s = code.syndrome(&e);
    let by_division = e.to_poly().rem(&g)?;
    println!("\nerror {e}");
    println!("syndrome {s} (remainder path gives {by_division})");
    assert_eq!(s, by_division);

    // Burst correction rests on injectivity: no two bursts within the bound
    // share a syndrome. It holds for this generator...
    println!(
        "\nbursts <= {} have distinct syndromes at n = 9: {}",
        code.burst_bound(),
        has_c_property(&g, 9)?
    );
    // ...but fails for a shorter generator stretched to twice its natural
    // length, because (1 + X) * (1 + X + X^2 + X^3 + X^4) = 1 + X^5.
    let short: BinPoly = "11111".parse()?;
    println!(
        "bursts <= 4 have distinct syndromes for g = {short} at n = 10: {}",
        has_c_property(&short, 10)?
    );

    // With injectivity, a table decoder recovers any burst within bound.
    let dec = BurstDecoder::build(&code)?;
    let burst = RingElem::from_positions(9, &[7, 8, 9]);
    let back = dec.decode(&code.syndrome(&burst));
    println!("\nburst {burst} recovered: {}", back.as_ref() == Some(&burst));
    Ok(())
}
