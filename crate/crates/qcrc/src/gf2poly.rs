//! Polynomials over GF(2) and elements of the cyclic ring GF(2)[X]/(X^n - 1).
//!
//! A [`BinPoly`] is an arbitrary-degree polynomial with XOR addition; a
//! [`RingElem`] is a length-`n` coefficient vector with cyclic shifts.
//! Coordinate `i` of a ring element (1-based) holds the coefficient of
//! `X^{i-1}`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::bits::Bits;
use crate::{Error, Result};

/// A polynomial over GF(2). Bit `i` of the backing words is the coefficient
/// of `X^i`; trailing zero words are trimmed so equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BinPoly {
    words: Vec<u64>,
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        BinPoly { words: vec![1] }
    }

    /// The monomial `X^k`.
    pub fn x_pow(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        BinPoly { words }
    }

    /// Builds a polynomial from a list of exponents. Repeats are rejected.
    pub fn from_exponents(exps: &[usize]) -> Result<Self> {
        let mut p = BinPoly::zero();
        for &e in exps {
            if p.coeff(e) {
                return Err(Error::InvalidPoly(format!("repeated exponent {e}")));
            }
            p.set_coeff(e, true);
        }
        Ok(p)
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        let w = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, v: bool) {
        if i / 64 >= self.words.len() {
            if !v {
                return;
            }
            self.words.resize(i / 64 + 1, 0);
        }
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let d = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let mut r = self.clone();
        let mut q = BinPoly::zero();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            q.set_coeff(shift, true);
            r.xor_shifted(divisor, shift);
        }
        Ok((q, r))
    }

    /// Remainder of `self` modulo `divisor`.
    pub fn rem(&self, divisor: &BinPoly) -> Result<BinPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// True when `self` divides `X^n - 1` (equivalently `X^n + 1` over GF(2)).
    pub fn divides_xn_minus_1(&self, n: usize) -> bool {
        assert!(!self.is_zero(), "zero polynomial divides nothing");
        let mut xn1 = BinPoly::x_pow(n);
        xn1.set_coeff(0, true);
        xn1.rem(self).expect("divisor is nonzero").is_zero()
    }

    /// `self ^= other * X^shift`.
    fn xor_shifted(&mut self, other: &BinPoly, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs > 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.normalize();
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;

    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = if self.words.len() >= rhs.words.len() {
            self.clone()
        } else {
            rhs.clone()
        };
        let small = if self.words.len() >= rhs.words.len() {
            rhs
        } else {
            self
        };
        for (i, &w) in small.words.iter().enumerate() {
            out.words[i] ^= w;
        }
        out.normalize();
        out
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: &BinPoly) -> BinPoly {
        let mut out = BinPoly::zero();
        for e in self.exponents() {
            out.xor_shifted(rhs, e);
        }
        out
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Accepts a big-endian bit string (`"10011"` is `X^4 + X + 1`) or a
    /// comma-separated exponent list (`"4,1,0"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.contains(',') {
            let exps = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad exponent {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            BinPoly::from_exponents(&exps)
        } else if s.chars().all(|c| c == '0' || c == '1') {
            let mut p = BinPoly::zero();
            let deg = s.len() - 1;
            for (i, ch) in s.chars().enumerate() {
                if ch == '1' {
                    p.set_coeff(deg - i, true);
                }
            }
            Ok(p)
        } else {
            Err(Error::Parse(format!(
                "polynomial {s:?} is neither a 0/1 bit string nor an exponent list"
            )))
        }
    }
}

impl fmt::Display for BinPoly {
    /// Big-endian bit string; the zero polynomial prints as `"0"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => f.write_str("0"),
            Some(d) => {
                for i in (0..=d).rev() {
                    f.write_str(if self.coeff(i) { "1" } else { "0" })?;
                }
                Ok(())
            }
        }
    }
}

/// An element of GF(2)[X]/(X^n - 1): exactly `n` coefficient bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    bits: Bits,
}

impl RingElem {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "ring length must be positive");
        RingElem {
            bits: Bits::zeros(n),
        }
    }

    /// Embeds a polynomial of degree `< n`.
    pub fn from_poly(p: &BinPoly, n: usize) -> Result<Self> {
        if let Some(d) = p.degree() {
            if d >= n {
                return Err(Error::BadParameter(format!(
                    "degree {d} does not fit in ring of length {n}"
                )));
            }
        }
        let mut e = RingElem::zero(n);
        for exp in p.exponents() {
            e.bits.set(exp, true);
        }
        Ok(e)
    }

    pub fn from_positions(n: usize, coords: &[usize]) -> Self {
        let mut e = RingElem::zero(n);
        for &c in coords {
            assert!((1..=n).contains(&c), "coordinate {c} out of 1..={n}");
            e.bits.set(c - 1, true);
        }
        e
    }

    pub fn to_poly(&self) -> BinPoly {
        let mut p = BinPoly::zero();
        for i in self.bits.ones() {
            p.set_coeff(i, true);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    /// Coefficient of `X^i`, `0 <= i < n`.
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn set(&mut self, i: usize, v: bool) {
        self.bits.set(i, v);
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    /// Coefficient indices with value 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Cyclic shift: coefficient `i` moves to `(i + s) mod n`. Negative `s`
    /// shifts the other way. In polynomial terms this multiplies by `X^s`.
    pub fn shifted(&self, s: i64) -> RingElem {
        let n = self.len() as i64;
        let s = s.rem_euclid(n) as usize;
        RingElem {
            bits: self.bits.rotl(s),
        }
    }

    pub fn xor_assign(&mut self, other: &RingElem) {
        self.bits.xor_assign(&other.bits);
    }

    /// Length of the shortest cyclic window containing every nonzero
    /// coefficient; 0 for the zero element.
    pub fn cyclic_burst_len(&self) -> usize {
        cyclic_span(self.len(), self.bits.ones())
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn from_bits(bits: Bits) -> Self {
        RingElem { bits }
    }
}

impl Add for &RingElem {
    type Output = RingElem;

    fn add(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl fmt::Display for RingElem {
    /// Coordinates 1..n left to right, so the constant term prints first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Shortest cyclic window (out of `n` positions) covering all given indices.
pub(crate) fn cyclic_span(n: usize, ones: impl Iterator<Item = usize>) -> usize {
    let pos: Vec<usize> = ones.collect();
    if pos.is_empty() {
        return 0;
    }
    // Drop the largest cyclic gap between consecutive set positions; what is
    // left plus the final position is the minimal window.
    let mut max_gap = 0;
    for (i, &p) in pos.iter().enumerate() {
        let next = pos[(i + 1) % pos.len()];
        let gap = (next + n - p) % n;
        let gap = if gap == 0 { n } else { gap };
        max_gap = max_gap.max(gap);
    }
    n - max_gap + 1
}
