//! Monte Carlo sweeps over the correlated depolarizing channel, written as
//! CSV to stdout.
//!
//! ```bash
//! cargo run --release --example channel_sweep
//! ```

use std::io;

use qcrc::{sweep, write_csv, ChannelParams, StructuredCode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The 35-qubit code corrects cyclic bursts of up to 7 qubits.
    let sc = StructuredCode::new(5, 1, 7)?;
    let code = sc.code();
    let (trials, seed) = (20_000, 0);
    eprintln!(
        "[[{}, {}]] code, {trials} trials per point, seed {seed}",
        code.n(),
        code.k()
    );

    // Sweep the correlation at a fixed error rate: clustered errors form
    // bursts, which is exactly what the decoder is built for.
    eprintln!("\ncorrelation sweep at p = 0.03:");
    let mu_points: Vec<ChannelParams> = (0..=5)
        .map(|i| ChannelParams::new(0.03, i as f64 / 5.0))
        .collect::<qcrc::Result<_>>()?;
    let rows = sweep(code, &sc, &mu_points, trials, seed)?;
    write_csv(&mut io::stdout(), seed, &rows)?;

    // Sweep the error rate at a fixed correlation: success falls as the
    // channel gets noisier.
    eprintln!("\nerror-rate sweep at mu = 0.5:");
    let p_points: Vec<ChannelParams> = [1e-3, 3e-3, 1e-2, 3e-2, 1e-1]
        .iter()
        .map(|&p| ChannelParams::new(p, 0.5))
        .collect::<qcrc::Result<_>>()?;
    let rows = sweep(code, &sc, &p_points, trials, seed)?;
    write_csv(&mut io::stdout(), seed, &rows)?;
    Ok(())
}
