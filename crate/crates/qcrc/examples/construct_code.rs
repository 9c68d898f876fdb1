//! Build quantum burst-error-correcting codes from CRC generator
//! polynomials and inspect their stabilizers.
//!
//! ```bash
//! cargo run --example construct_code
//! ```

use qcrc::{symplectic_form, BinPoly, QcrcCode, StructuredCode};

fn main() -> qcrc::Result<()> {
    // A code is defined by a generator polynomial g dividing X^n - 1 over
    // GF(2). The all-ones polynomial of degree 8 yields a [[9, 1]] code.
    let g: BinPoly = "111111111".parse()?;
    let code = QcrcCode::new(g, 9, None)?;
    println!(
        "[[{}, {}]] code, column shift l = {}",
        code.n(),
        code.k(),
        code.l()
    );

    println!("\ngenerator matrix (x half | z half):");
    for row in code.gen_matrix().rows() {
        println!("  {row}");
    }

    println!("\nstabilizer generators:");
    for s in code.stabilizers() {
        println!("  {s}");
    }

    // Every pair of rows commutes: the binary symplectic form vanishes.
    let rows = code.gen_matrix().rows();
    let worst = rows
        .iter()
        .flat_map(|a| rows.iter().map(move |b| symplectic_form(a, b)))
        .filter(|&f| f)
        .count();
    println!("\nanticommuting row pairs: {worst} (must be 0)");

    // The same construction, scaled up by interleaving: k copies of the
    // m-block base code share one set of qubits, giving an [[mk, k]] code
    // that corrects any cyclic error burst of length at most c*k.
    let big = StructuredCode::new(9, 2, 4)?;
    println!(
        "\ninterleaved [[{}, {}]]: corrects bursts up to length {}",
        big.n(),
        big.k(),
        big.code().burst_bound()
    );
    println!("first stabilizer: {}", big.code().stabilizers()[0]);
    Ok(())
}
