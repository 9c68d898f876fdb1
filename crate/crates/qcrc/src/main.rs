use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcrc::{
    sweep, write_csv, BinPoly, ChannelParams, GenMatrix, GenericDecoder, LookupTable, PauliString,
    QcrcCode, StructuredCode, SympVec, Syndrome,
};

#[derive(Parser)]
#[command(
    name = "qcrc",
    version,
    about = "Quantum CRC stabilizer codes: construction, burst decoding, and channel simulation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Code selection shared by most subcommands: either a raw generator
/// polynomial (`--g`, `--n`, optional `--l`) or a structured interleaved
/// family instance (`--m`, `--c`, `--k`).
#[derive(Args)]
struct CodeArgs {
    /// Generator polynomial: bit string "111111111" or exponent list "8,7,..,0"
    #[arg(long)]
    g: Option<String>,
    /// Code length (with --g)
    #[arg(long)]
    n: Option<usize>,
    /// Column shift for the Z block; defaults to (n-k)/4
    #[arg(long)]
    l: Option<usize>,
    /// Structured family: blocks per subcode (m >= 4c+1)
    #[arg(long)]
    m: Option<usize>,
    /// Structured family: correctable burst length per subcode
    #[arg(long)]
    c: Option<usize>,
    /// Structured family: number of interleaved subcodes
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code; print its generator matrix rows and stabilizers
    Construct {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Check generator rows (x|z lines from a file or stdin) for validity
    Validate {
        /// File of matrix rows; stdin when omitted
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Print the special-case sub-syndrome lookup table for (m, c)
    Table {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        c: usize,
        /// Include windows that wrap past position m
        #[arg(long)]
        cyclic: bool,
    },
    /// Decode a syndrome to a Pauli correction
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Syndrome as a +/- string, e.g. "++---+-+++---+++"
        #[arg(long)]
        syndrome: String,
        /// Print per-subcode decoding steps
        #[arg(long)]
        trace: bool,
    },
    /// Print the syndrome of a Pauli error, as signs and as a polynomial
    Syndrome {
        #[command(flatten)]
        code: CodeArgs,
        /// Pauli string, e.g. "IIIIIIYXXIIIIIIIII"
        #[arg(long)]
        error: String,
    },
    /// Estimate decoding success over the correlated channel; CSV output
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// Stationary error probability (single-point run)
        #[arg(long)]
        p: Option<f64>,
        /// Correlation degree (single-point run)
        #[arg(long)]
        mu: Option<f64>,
        /// Grid of points "p:mu,p:mu,..." overriding --p/--mu
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Decoder choice; defaults to fast for structured codes, generic otherwise
        #[arg(long)]
        decoder: Option<DecoderKind>,
    },
    /// Time the fast decoder across doubling code sizes [[mk, k]]
    Bench {
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, default_value_t = 64)]
        k_min: usize,
        #[arg(long, default_value_t = 4096)]
        k_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderKind {
    /// Linear-time fork-scan decoder (structured codes only)
    Fast,
    /// Table decoder over all bursts within the design bound
    Generic,
}

enum CliError {
    Usage(String),
    Domain(String),
    /// Stdout reader went away (e.g. piped into `head`): stop quietly.
    Pipe,
}

impl From<qcrc::Error> for CliError {
    fn from(e: qcrc::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError::Pipe
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

fn main() {
    // Clap itself exits 2 on unparseable flags.
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) | Err(CliError::Pipe) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

/// A code built from either flavor of CodeArgs.
enum BuiltCode {
    Generic(QcrcCode),
    Structured(StructuredCode),
}

impl BuiltCode {
    fn code(&self) -> &QcrcCode {
        match self {
            BuiltCode::Generic(c) => c,
            BuiltCode::Structured(sc) => sc.code(),
        }
    }
}

fn build_code(args: &CodeArgs) -> Result<BuiltCode, CliError> {
    let structured = args.m.is_some() || args.c.is_some() || args.k.is_some();
    let generic = args.g.is_some() || args.n.is_some() || args.l.is_some();
    match (structured, generic) {
        (true, true) => Err(CliError::Usage(
            "give either --g/--n/--l or --m/--c/--k, not both".into(),
        )),
        (false, false) => Err(CliError::Usage(
            "no code specified: use --g <poly> --n <len> or --m <int> --c <int> --k <int>".into(),
        )),
        (true, false) => {
            let (Some(m), Some(c), Some(k)) = (args.m, args.c, args.k) else {
                return Err(CliError::Usage(
                    "structured codes need all of --m, --c, --k".into(),
                ));
            };
            Ok(BuiltCode::Structured(StructuredCode::new(m, c, k)?))
        }
        (false, true) => {
            let (Some(g), Some(n)) = (&args.g, args.n) else {
                return Err(CliError::Usage("generic codes need --g and --n".into()));
            };
            let g: BinPoly = g.parse()?;
            let code = QcrcCode::new(g, n, args.l)?;
            if let Some(l) = args.l {
                let default_l = code.crc().redundancy() / 4;
                if l != default_l {
                    eprintln!(
                        "note: shift l = {l} differs from the default (n-k)/4 = {default_l}; \
                         burst-correction guarantees may not hold"
                    );
                }
            }
            Ok(BuiltCode::Generic(code))
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Construct { code } => construct(&build_code(&code)?),
        Cmd::Validate { file } => validate(file),
        Cmd::Table { m, c, cyclic } => table(m, c, cyclic),
        Cmd::Decode {
            code,
            syndrome,
            trace,
        } => decode(&build_code(&code)?, &syndrome, trace),
        Cmd::Syndrome { code, error } => syndrome_cmd(&build_code(&code)?, &error),
        Cmd::Simulate {
            code,
            p,
            mu,
            grid,
            trials,
            seed,
            out,
            decoder,
        } => simulate(&build_code(&code)?, p, mu, grid, trials, seed, out, decoder),
        Cmd::Bench {
            m,
            c,
            k_min,
            k_max,
            seed,
        } => bench(m, c, k_min, k_max, seed),
    }
}

fn construct(built: &BuiltCode) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    let code = built.code();
    for row in code.gen_matrix().rows() {
        writeln!(out, "{row}")?;
    }
    writeln!(out)?;
    for s in code.stabilizers() {
        writeln!(out, "{s}")?;
    }
    Ok(())
}

fn validate(file: Option<PathBuf>) -> Result<(), CliError> {
    let text = match file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let mut rows: Vec<SympVec> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if !line.is_empty() && line.chars().all(|ch| ch == '0' || ch == '1' || ch == '|') {
            rows.push(line.parse()?);
        }
    }
    if rows.is_empty() {
        return Err(CliError::Domain("no generator rows found in input".into()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Domain("rows have differing lengths".into()));
    }
    if rows.len() > n {
        return Err(CliError::Domain(format!(
            "{} rows exceed the {} qubits",
            rows.len(),
            n
        )));
    }
    let count = rows.len();
    let gm = GenMatrix::from_rows(n, rows);
    if gm.is_valid() {
        writeln!(
            io::stdout(),
            "valid: {count} rows, {n} qubits, k = {}",
            n - count
        )?;
        Ok(())
    } else {
        Err(CliError::Domain(
            "rows are not pairwise commuting and linearly independent".into(),
        ))
    }
}

fn table(m: usize, c: usize, cyclic: bool) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    let t = LookupTable::build(m, c, cyclic)?;
    for (e, s) in t.rows() {
        let letters: Vec<String> = e
            .to_pauli()
            .0
            .iter()
            .map(|p| p.as_char().to_string())
            .collect();
        let signs: Vec<&str> = (1..=s.len())
            .map(|j| if s.is_minus(j) { "-" } else { "+" })
            .collect();
        writeln!(out, "{} | {}", letters.join(", "), signs.join(", "))?;
    }
    Ok(())
}

fn decode(built: &BuiltCode, syndrome: &str, trace: bool) -> Result<(), CliError> {
    let s: Syndrome = syndrome.parse()?;
    let expect = built.code().crc().redundancy();
    if s.len() != expect {
        return Err(CliError::Domain(format!(
            "syndrome has {} signs, code has {expect} generators",
            s.len()
        )));
    }
    let mut out = io::stdout().lock();
    match built {
        BuiltCode::Structured(sc) => {
            let (e, traces) = sc.decode_traced(&s);
            if trace {
                for t in &traces {
                    writeln!(out, "subcode {}: syndrome {}", t.subcode, t.sub_syndrome)?;
                    if t.table_hit {
                        writeln!(out, "  lookup table hit")?;
                    }
                    for f in &t.forks {
                        writeln!(out, "  fork at {} -> X, remaining {}", f.position, f.remaining)?;
                    }
                    for z in &t.z_positions {
                        writeln!(out, "  leftover flag {z} -> Z")?;
                    }
                    writeln!(out, "  subcode error {}", t.error.to_pauli())?;
                }
            }
            writeln!(out, "{}", e.to_pauli())?;
        }
        BuiltCode::Generic(code) => {
            let dec = GenericDecoder::build(code)?;
            match dec.decode(&s) {
                Some(e) => writeln!(out, "{}", e.to_pauli())?,
                None => {
                    return Err(CliError::Domain(format!(
                        "uncorrectable: no burst of length <= {} matches this syndrome",
                        code.burst_bound()
                    )));
                }
            }
        }
    }
    Ok(())
}

fn syndrome_cmd(built: &BuiltCode, error: &str) -> Result<(), CliError> {
    let e: PauliString = error.parse()?;
    let code = built.code();
    if e.len() != code.n() {
        return Err(CliError::Domain(format!(
            "error acts on {} qubits, code has {}",
            e.len(),
            code.n()
        )));
    }
    let s = code.syndrome(&e.to_symplectic());
    let mut out = io::stdout().lock();
    writeln!(out, "{s}")?;
    writeln!(out, "{}", s.to_poly())?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn simulate(
    built: &BuiltCode,
    p: Option<f64>,
    mu: Option<f64>,
    grid: Option<String>,
    trials: u64,
    seed: u64,
    out: Option<PathBuf>,
    decoder: Option<DecoderKind>,
) -> Result<(), CliError> {
    let points: Vec<ChannelParams> = match (grid, p, mu) {
        (Some(spec), _, _) => parse_grid(&spec)?,
        (None, Some(p), Some(mu)) => vec![ChannelParams::new(p, mu)?],
        _ => {
            return Err(CliError::Usage(
                "give --p and --mu, or a --grid of p:mu points".into(),
            ))
        }
    };

    let kind = decoder.unwrap_or(match built {
        BuiltCode::Structured(_) => DecoderKind::Fast,
        BuiltCode::Generic(_) => DecoderKind::Generic,
    });
    let code = built.code();
    let rows = match (kind, built) {
        (DecoderKind::Fast, BuiltCode::Structured(sc)) => {
            sweep(code, sc, &points, trials, seed)?
        }
        (DecoderKind::Fast, BuiltCode::Generic(_)) => {
            return Err(CliError::Usage(
                "--decoder fast needs a structured code (--m/--c/--k)".into(),
            ))
        }
        (DecoderKind::Generic, _) => {
            let dec = GenericDecoder::build(code)?;
            sweep(code, &dec, &points, trials, seed)?
        }
    };

    match out {
        Some(path) => {
            let mut f = fs::File::create(path)?;
            write_csv(&mut f, seed, &rows)?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_csv(&mut lock, seed, &rows)?;
        }
    }
    Ok(())
}

fn parse_grid(spec: &str) -> Result<Vec<ChannelParams>, CliError> {
    let mut points = Vec::new();
    for pair in spec.split([',', ';']) {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let (ps, ms) = pair.split_once(':').ok_or_else(|| {
            CliError::Usage(format!("grid point {pair:?} is not of the form p:mu"))
        })?;
        let p: f64 = ps
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad p in {pair:?}: {e}")))?;
        let mu: f64 = ms
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad mu in {pair:?}: {e}")))?;
        points.push(ChannelParams::new(p, mu)?);
    }
    if points.is_empty() {
        return Err(CliError::Usage("empty grid".into()));
    }
    Ok(points)
}

fn bench(m: usize, c: usize, k_min: usize, k_max: usize, seed: u64) -> Result<(), CliError> {
    if k_min == 0 || k_max < k_min {
        return Err(CliError::Usage("need 0 < k_min <= k_max".into()));
    }
    let mut out = io::stdout().lock();
    writeln!(out, "fast decoder timing, m={m} c={c} seed={seed}")?;
    let mut prev: Option<f64> = None;
    let mut k = k_min;
    while k <= k_max {
        let sc = StructuredCode::new(m, c, k)?;
        let pool = syndrome_pool(&sc, 32, seed);
        let ns = time_decodes(&sc, &pool, Duration::from_millis(10));
        let ratio = prev
            .map(|p| format!("{:.2}", ns / p))
            .unwrap_or_else(|| "-".into());
        writeln!(out, "k={k} n={} per_decode_ns={ns:.0} ratio={ratio}", sc.n())?;
        out.flush()?;
        prev = Some(ns);
        k *= 2;
    }
    Ok(())
}

/// Uniform random syndromes for timing, reproducible from the seed.
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

/// Nanoseconds per decode: repetitions sized to fill `target`, best of three
/// rounds.
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
