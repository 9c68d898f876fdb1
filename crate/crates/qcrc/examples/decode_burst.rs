//! Decode a burst error step by step on an interleaved [[18, 2]] code.
//!
//! ```bash
//! cargo run --example decode_burst
//! ```

use qcrc::{PauliString, StructuredCode};

fn main() -> qcrc::Result<()> {
    let sc = StructuredCode::new(9, 2, 2)?;
    println!(
        "[[{}, {}]] code: corrects cyclic bursts up to length {}\n",
        sc.n(),
        sc.k(),
        sc.code().burst_bound()
    );

    // A burst touching qubits 7..9 with mixed letters.
    let error: PauliString = "IIIIIIYXXIIIIIIIII".parse()?;
    let syndrome = sc.code().syndrome(&error.to_symplectic());
    println!("error     {error}");
    println!("syndrome  {syndrome}");

    // The decoder splits the syndrome into one sub-syndrome per subcode,
    // resolves each against the shared base code, and interleaves the
    // per-subcode errors back into a global correction.
    let (correction, traces) = sc.decode_traced(&syndrome);
    for t in &traces {
        println!("\nsubcode {} sees {}", t.subcode, t.sub_syndrome);
        if t.table_hit {
            println!("  resolved from the special-pattern lookup table");
        }
        for f in &t.forks {
            println!(
                "  flags {} and {} straddle position {} -> X there, leaving {}",
                pos_down(&sc, f.position),
                pos_up(&sc, f.position),
                f.position,
                f.remaining
            );
        }
        for &z in &t.z_positions {
            println!("  unpaired flag at {z} -> Z at position {z}");
        }
        println!("  subcode error: {}", t.error.to_pauli());
    }

    println!("\ncorrection {}", correction.to_pauli());
    assert_eq!(correction, error.to_symplectic());
    println!("matches the injected error exactly");
    Ok(())
}

fn pos_down(sc: &StructuredCode, p: usize) -> usize {
    (p + sc.m() - sc.c() - 1) % sc.m() + 1
}

fn pos_up(sc: &StructuredCode, p: usize) -> usize {
    (p + sc.c() - 1) % sc.m() + 1
}
