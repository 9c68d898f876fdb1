//! Correlated depolarizing noise and Monte Carlo estimation of decoding
//! performance.
//!
//! Errors follow a two-state Markov chain along the qubit line: qubit 1 is
//! hit with the stationary probability `p`, and each later qubit is hit
//! with probability `p(1-mu) + mu` after a hit or `p(1-mu)` after a miss.
//! The correlation parameter `mu` interpolates between independent noise
//! (`mu = 0`) and fully correlated all-or-nothing noise (`mu = 1`) while
//! keeping the per-qubit marginal at exactly `p`. Each hit applies X, Y, or
//! Z with equal probability.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decoder::StructuredCode;
use crate::pauli::SympVec;
use crate::quantum::{GenericDecoder, QcrcCode, Syndrome};
use crate::{Error, Result};

/// Parameters of the correlated channel, with the transition probabilities
/// laid out so each conditional pair sums to exactly 1.0 in floating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Stationary per-qubit error probability.
    pub p: f64,
    /// Correlation between neighbouring qubits, 0 (independent) to 1.
    pub mu: f64,
    /// P(hit | previous qubit missed) = `p * (1 - mu)`.
    pub p_hit_after_miss: f64,
    /// P(hit | previous qubit hit) = `p * (1 - mu) + mu`.
    pub p_hit_after_hit: f64,
}

impl ChannelParams {
    pub fn new(p: f64, mu: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(Error::BadParameter(format!(
                "error rate p = {p} outside [0, 1]"
            )));
        }
        if !(0.0..=1.0).contains(&mu) || !mu.is_finite() {
            return Err(Error::BadParameter(format!(
                "correlation mu = {mu} outside [0, 1]"
            )));
        }
        let p_hit_after_miss = p * (1.0 - mu);
        let p_hit_after_hit = p_hit_after_miss + mu;
        Ok(ChannelParams {
            p,
            mu,
            p_hit_after_miss,
            p_hit_after_hit,
        })
    }

    /// Draws one error pattern on `n` qubits.
    pub fn sample(&self, n: usize, rng: &mut impl Rng) -> SympVec {
        let mut e = SympVec::zero(n);
        let mut prev_hit = false;
        for i in 0..n {
            let p_hit = if i == 0 {
                self.p
            } else if prev_hit {
                self.p_hit_after_hit
            } else {
                self.p_hit_after_miss
            };
            prev_hit = rng.random::<f64>() < p_hit;
            if prev_hit {
                match rng.random_range(0..3u8) {
                    0 => e.set_x(i, true),
                    1 => {
                        e.set_x(i, true);
                        e.set_z(i, true);
                    }
                    _ => e.set_z(i, true),
                }
            }
        }
        e
    }
}

/// Anything that proposes a correction from a syndrome. `None` means the
/// decoder has no candidate, which the simulation treats as applying no
/// correction at all.
pub trait Decoder {
    fn decode_syndrome(&self, s: &Syndrome) -> Option<SympVec>;
}

impl Decoder for StructuredCode {
    fn decode_syndrome(&self, s: &Syndrome) -> Option<SympVec> {
        Some(self.decode(s))
    }
}

impl Decoder for GenericDecoder {
    fn decode_syndrome(&self, s: &Syndrome) -> Option<SympVec> {
        self.decode(s)
    }
}

/// Outcome counts of a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimStats {
    pub trials: u64,
    /// Trials where the correction times the true error lay in the
    /// generator row space (decoding left the code space untouched).
    pub successes: u64,
    /// Seed the run was keyed by, kept for reproducibility records.
    pub seed: u64,
}

impl SimStats {
    /// Estimated probability of successful decoding.
    pub fn ef(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }

    /// Half-width of the 95% normal-approximation confidence interval.
    pub fn ci95(&self) -> f64 {
        let ef = self.ef();
        1.96 * (ef * (1.0 - ef) / self.trials as f64).sqrt()
    }
}

/// Runs `trials` decoding attempts and counts successes.
///
/// Trial `t` uses a ChaCha8 generator seeded with `seed` on stream `t`, so
/// results are reproducible and independent of threading or trial order,
/// and different parameter points can reuse the same random numbers.
pub fn run_trials(
    code: &QcrcCode,
    decoder: &impl Decoder,
    params: &ChannelParams,
    trials: u64,
    seed: u64,
) -> Result<SimStats> {
    if trials == 0 {
        return Err(Error::BadParameter("need at least one trial".into()));
    }
    let n = code.n();
    let mut successes = 0u64;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let e = params.sample(n, &mut rng);
        let s = code.syndrome(&e);
        let residual = match decoder.decode_syndrome(&s) {
            Some(correction) => e.xor(&correction),
            None => e.clone(),
        };
        if code.rowspace_contains(&residual) {
            successes += 1;
        }
    }
    Ok(SimStats {
        trials,
        successes,
        seed,
    })
}

/// [`run_trials`] over a grid of parameter points, same seed per point.
pub fn sweep(
    code: &QcrcCode,
    decoder: &impl Decoder,
    points: &[ChannelParams],
    trials: u64,
    seed: u64,
) -> Result<Vec<(ChannelParams, SimStats)>> {
    points
        .iter()
        .map(|params| Ok((*params, run_trials(code, decoder, params, trials, seed)?)))
        .collect()
}

/// Formats a float to six significant digits, trailing zeros trimmed.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Writes sweep results as CSV: a seed comment, a header, then one line per
/// parameter point.
pub fn write_csv<W: Write>(
    out: &mut W,
    seed: u64,
    rows: &[(ChannelParams, SimStats)],
) -> io::Result<()> {
    writeln!(out, "# seed={seed}")?;
    writeln!(out, "p,mu,trials,successes,ef,ci95")?;
    for (params, stats) in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            sig6(params.p),
            sig6(params.mu),
            stats.trials,
            stats.successes,
            sig6(stats.ef()),
            sig6(stats.ci95()),
        )?;
    }
    Ok(())
}
