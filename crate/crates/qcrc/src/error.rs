use thiserror::Error;

/// Errors raised by code construction, parsing, and decoding.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid polynomial: {0}")]
    InvalidPoly(String),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("degree of g must satisfy 0 < deg(g) < n, got deg(g) = {deg}, n = {n}")]
    BadDegree { deg: i64, n: usize },

    #[error("g has zero constant term")]
    ZeroConstantTerm,

    #[error("g does not divide X^{n} - 1")]
    NotCycleDivisor { n: usize },

    #[error("shift l = {l} out of range for n = {n}")]
    BadShift { l: usize, n: usize },

    #[error("block count m = {m} violates the burst bound m >= 4c + 1 for c = {c}")]
    ReigerBound { m: usize, c: usize },

    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("enumeration needs {needed} candidates, above the cap {cap}")]
    Infeasible { needed: u128, cap: u64 },

    #[error("two inequivalent errors share syndrome {syndrome}: {first} vs {second}")]
    AmbiguousSyndrome {
        syndrome: String,
        first: String,
        second: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
