//! Black-box tests of the command-line interface: output formats, round
//! trips, reproducibility, and exit codes.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn qcrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qcrc_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcrc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_prints_matrix_and_stabilizers() {
    let out = qcrc(&["construct", "--g", "111111111", "--n", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("100000001|011000110\n"), "{text}");
    assert!(text.contains("000000011|110001100\n"), "{text}");
    assert!(text.contains("\nXZZIIIZZX\n"), "{text}");
    assert!(text.trim_end().ends_with("ZZIIIZZXX"), "{text}");
}

#[test]
fn construct_round_trips_through_validate() {
    let out = qcrc(&["construct", "--m", "9", "--c", "2", "--k", "2"]);
    assert!(out.status.success());
    let check = qcrc_with_stdin(&["validate"], &stdout(&out));
    assert!(check.status.success(), "{}", stderr(&check));
    assert_eq!(stdout(&check), "valid: 16 rows, 18 qubits, k = 2\n");
}

#[test]
fn structured_flags_match_generator_polynomial_flags() {
    let a = qcrc(&["construct", "--m", "9", "--c", "2", "--k", "1"]);
    let b = qcrc(&["construct", "--g", "111111111", "--n", "9"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn validate_rejects_anticommuting_rows() {
    let out = qcrc_with_stdin(&["validate"], "10|00\n00|10\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("commuting"), "{}", stderr(&out));
}

#[test]
fn table_prints_golden_rows() {
    let out = qcrc(&["table", "--m", "5", "--c", "1", "--cyclic"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "X, I, I, I, I | -, +, -, -\n\
         Y, I, I, I, I | +, +, -, -\n\
         I, I, I, X, I | -, -, +, -\n\
         I, I, I, Y, I | -, -, +, +\n\
         I, I, I, I, Z | -, -, -, -\n\
         I, I, I, I, Y | +, -, -, +\n"
    );
}

#[test]
fn decode_recovers_the_worked_example() {
    let out = qcrc(&[
        "decode",
        "--m",
        "9",
        "--c",
        "2",
        "--k",
        "2",
        "--syndrome",
        "++---+-+++---+++",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "IIIIIIYXXIIIIIIIII\n");
}

#[test]
fn decode_trace_shows_per_subcode_steps() {
    let out = qcrc(&[
        "decode",
        "--m",
        "9",
        "--c",
        "2",
        "--k",
        "2",
        "--syndrome",
        "++---+-+++---+++",
        "--trace",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("subcode 1: syndrome +---+--+"), "{text}");
    assert!(text.contains("fork at 4 -> X, remaining ++--++-+"), "{text}");
    assert!(text.contains("leftover flag 4 -> Z"), "{text}");
    assert!(text.contains("subcode 2: syndrome +-+++-++"), "{text}");
    assert!(text.trim_end().ends_with("IIIIIIYXXIIIIIIIII"), "{text}");
}

#[test]
fn syndrome_command_round_trips_with_decode() {
    let out = qcrc(&[
        "syndrome",
        "--m",
        "9",
        "--c",
        "2",
        "--k",
        "2",
        "--error",
        "IIIIIIYXXIIIIIIIII",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("++---+-+++---+++"));
    // Second line is the same syndrome as a binary polynomial.
    assert_eq!(lines.next(), Some("1110001011100"));
}

#[test]
fn simulate_output_is_byte_identical_across_runs() {
    let args = [
        "simulate", "--m", "5", "--c", "1", "--k", "2", "--grid", "0.01:0.2,0.05:0.8", "--trials",
        "500", "--seed", "9",
    ];
    let a = qcrc(&args);
    let b = qcrc(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.starts_with("# seed=9\np,mu,trials,successes,ef,ci95\n"), "{text}");
    assert_eq!(text.lines().count(), 4, "{text}");
    assert!(text.lines().nth(2).unwrap().starts_with("0.01,0.2,500,"), "{text}");
}

#[test]
fn simulate_writes_csv_file() {
    let dir = std::env::temp_dir().join(format!("qcrc-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let out = qcrc(&[
        "simulate", "--m", "5", "--c", "1", "--k", "1", "--p", "0.02", "--mu", "0.5", "--trials",
        "200", "--seed", "4", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# seed=4\n"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn nondefault_shift_warns_on_stderr() {
    let out = qcrc(&["construct", "--g", "111111111", "--n", "9", "--l", "3"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("differs from the default"), "{}", stderr(&out));
}

#[test]
fn domain_errors_exit_one() {
    // Not a divisor of X^9 - 1.
    let out = qcrc(&["construct", "--g", "1011", "--n", "9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr(&out).is_empty());

    // Syndrome length does not match the code.
    let out = qcrc(&["decode", "--m", "5", "--c", "1", "--k", "1", "--syndrome", "+++--+"]);
    assert_eq!(out.status.code(), Some(1));

    // Block count below the burst-bound threshold.
    let out = qcrc(&["construct", "--m", "7", "--c", "2", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("m >= 4c + 1"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag: rejected by the argument parser.
    let out = qcrc(&["construct", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));

    // No code given at all.
    let out = qcrc(&["construct"]);
    assert_eq!(out.status.code(), Some(2));

    // Mixing the two ways of naming a code.
    let out = qcrc(&["construct", "--g", "11111", "--n", "5", "--m", "5", "--c", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed grid.
    let out = qcrc(&[
        "simulate", "--m", "5", "--c", "1", "--k", "1", "--grid", "nonsense", "--trials", "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closed_stdout_pipe_ends_the_run_quietly() {
    // `qcrc construct ... | head` closes our stdout early; the binary must
    // stop without a panic message or a failure code. The code is sized so
    // its output far exceeds the pipe buffer.
    use std::io::Read as _;
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcrc"))
        .args(["construct", "--m", "5", "--c", "1", "--k", "512"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    let mut out = child.stdout.take().unwrap();
    let mut first = [0u8; 256];
    let n = out.read(&mut first).unwrap();
    assert!(n > 0);
    drop(out); // reader hangs up mid-stream
    let status = child.wait().unwrap();
    let mut errs = String::new();
    child.stderr.take().unwrap().read_to_string(&mut errs).unwrap();
    assert!(status.success(), "exit {status:?}, stderr: {errs}");
    assert!(errs.is_empty(), "stderr should be quiet, got: {errs}");
}
