//! Times the fork-scan decoder across doubling code sizes to show the cost
//! per decode grows linearly with the number of qubits.
//!
//! ```bash
//! cargo run --release --example decode_scaling
//! ```

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcrc::{StructuredCode, Syndrome};

fn main() -> qcrc::Result<()> {
    println!("{:>6} {:>7} {:>14} {:>6}", "k", "n", "per_decode_ns", "ratio");
    let mut prev: Option<f64> = None;
    let mut k = 64;
    while k <= 4096 {
        let sc = StructuredCode::new(5, 1, k)?;
        let pool = syndrome_pool(&sc, 32, 0);
        let ns = time_decodes(&sc, &pool, Duration::from_millis(10));
        let ratio = prev
            .map(|p| format!("{:.2}", ns / p))
            .unwrap_or_else(|| "-".into());
        println!("{k:>6} {:>7} {ns:>14.0} {ratio:>6}", sc.n());
        prev = Some(ns);
        k *= 2;
    }
    println!("\nlinear scaling doubles the cost when the size doubles,");
    println!("so each ratio should sit near 2 (well under 3).");
    Ok(())
}

/// Uniform random syndromes, reproducible from the seed.
fn syndrome_pool(sc: &StructuredCode, count: usize, seed: u64) -> Vec<Syndrome> {
    let len = sc.code().crc().redundancy();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut s = Syndrome::zero(len);
            for j in 1..=len {
                s.set_minus(j, rng.random::<bool>());
            }
            s
        })
        .collect()
}

/// Nanoseconds per decode: repetitions sized to fill `target`, best of three.
fn time_decodes(sc: &StructuredCode, pool: &[Syndrome], target: Duration) -> f64 {
    let t0 = Instant::now();
    for s in pool {
        std::hint::black_box(sc.decode(s));
    }
    let per = (t0.elapsed().as_nanos() as f64 / pool.len() as f64).max(1.0);
    let reps = ((target.as_nanos() as f64 / per) as usize).max(pool.len());

    let mut best = f64::INFINITY;
    for _ in 0..3 {
        let t = Instant::now();
        for i in 0..reps {
            std::hint::black_box(sc.decode(&pool[i % pool.len()]));
        }
        best = best.min(t.elapsed().as_nanos() as f64 / reps as f64);
    }
    best
}
