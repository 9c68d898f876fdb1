//! Classical cyclic-redundancy-check codes over GF(2).
//!
//! A generator polynomial `g` of degree `n - k` that divides `X^n - 1`
//! defines a cyclic `[n, k]` code with parity-check matrix
//! `H = [I_{n-k} | r_1 .. r_k]`, where column `n - k + i` holds the
//! coefficients of `r_i = X^{n-k+i-1} mod g`. The syndrome of an error
//! vector `e` is then the polynomial `e(X) mod g`.

use std::collections::HashMap;

use crate::gf2poly::{BinPoly, RingElem};
use crate::{Error, Result};

/// Work cap for burst-table enumeration; beyond this many table entries the
/// call returns [`Error::Infeasible`] instead of grinding.
pub const DEFAULT_BURST_CAP: u64 = 1 << 26;

/// A classical cyclic code defined by a CRC generator polynomial.
#[derive(Debug, Clone)]
pub struct CrcCode {
    g: BinPoly,
    n: usize,
    k: usize,
    h_rows: Vec<RingElem>,
}

impl CrcCode {
    /// Validates the generator and builds the parity-check rows.
    ///
    /// Requires `g(0) = 1`, `0 < deg g < n`, and `g | X^n - 1`.
    pub fn new(g: BinPoly, n: usize) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::InvalidPoly("generator must be nonzero".into()));
        }
        let deg = g.degree().expect("nonzero");
        if deg == 0 || deg >= n {
            return Err(Error::BadDegree {
                deg: deg as i64,
                n,
            });
        }
        if !g.coeff(0) {
            return Err(Error::ZeroConstantTerm);
        }
        if !g.divides_xn_minus_1(n) {
            return Err(Error::NotCycleDivisor { n });
        }
        let k = n - deg;

        let mut h_rows = vec![RingElem::zero(n); deg];
        for (j, row) in h_rows.iter_mut().enumerate() {
            row.set(j, true);
        }
        // r_1 = X^{n-k} mod g, then r_{i+1} = X * r_i mod g.
        let x = BinPoly::x_pow(1);
        let mut r = BinPoly::x_pow(deg).rem(&g).expect("nonzero");
        for i in 0..k {
            for j in r.exponents() {
                h_rows[j].set(deg + i, true);
            }
            r = &r * &x;
            if r.degree() == Some(deg) {
                r = &r + &g;
            }
        }
        Ok(CrcCode { g, n, k, h_rows })
    }

    pub fn g(&self) -> &BinPoly {
        &self.g
    }

    /// Codeword length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Message length.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of parity checks, `n - k = deg g`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// Parity-check row `j`, 1-based.
    pub fn h_row(&self, j: usize) -> &RingElem {
        &self.h_rows[j - 1]
    }

    pub fn h_rows(&self) -> &[RingElem] {
        &self.h_rows
    }

    /// Syndrome of an error vector, as a polynomial of degree `< deg g`.
    /// Bit `j - 1` is the parity of row `j` AND `e`; the result equals
    /// `e(X) mod g`.
    pub fn syndrome(&self, e: &RingElem) -> BinPoly {
        assert_eq!(e.len(), self.n);
        let mut s = BinPoly::zero();
        for (j, row) in self.h_rows.iter().enumerate() {
            if row.bits().and_parity(e.bits()) {
                s.set_coeff(j, true);
            }
        }
        s
    }

    /// Maximum cyclic burst length the syndrome can pin down uniquely:
    /// half the redundancy, rounded down.
    pub fn burst_bound(&self) -> usize {
        self.redundancy() / 2
    }
}

/// Enumerates every vector whose cyclic burst length is at most `max_len`
/// (the zero vector first), feeding each to `visit` exactly once. Refuses
/// with [`Error::Infeasible`] when the candidate count exceeds `cap`.
pub fn for_each_burst(
    n: usize,
    max_len: usize,
    cap: u64,
    mut visit: impl FnMut(RingElem) -> Result<()>,
) -> Result<()> {
    let mut needed: u128 = 1;
    for len in 1..=max_len {
        let patterns = 1u128 << len.saturating_sub(2);
        needed += (n as u128) * patterns;
    }
    if needed > cap as u128 {
        return Err(Error::Infeasible { needed, cap });
    }
    visit(RingElem::zero(n))?;
    for len in 1..=max_len {
        let interior = len.saturating_sub(2);
        for start in 0..n {
            for fill in 0u64..(1 << interior) {
                let mut e = RingElem::zero(n);
                e.set(start, true);
                e.set((start + len - 1) % n, true);
                for b in 0..interior {
                    if fill >> b & 1 == 1 {
                        e.set((start + 1 + b) % n, true);
                    }
                }
                visit(e)?;
            }
        }
    }
    Ok(())
}

/// Whether all cyclic bursts up to half the redundancy have pairwise
/// distinct syndromes under `g` at length `n` — the property that makes
/// syndrome decoding of such bursts unambiguous.
pub fn has_c_property(g: &BinPoly, n: usize) -> Result<bool> {
    has_c_property_with_cap(g, n, DEFAULT_BURST_CAP)
}

/// [`has_c_property`] with an explicit work cap on the number of enumerated
/// bursts.
pub fn has_c_property_with_cap(g: &BinPoly, n: usize, cap: u64) -> Result<bool> {
    let code = CrcCode::new(g.clone(), n)?;
    let mut seen: HashMap<BinPoly, RingElem> = HashMap::new();
    let mut injective = true;
    for_each_burst(n, code.burst_bound(), cap, |e| {
        if !injective {
            return Ok(());
        }
        let s = code.syndrome(&e);
        if let Some(prev) = seen.get(&s) {
            if *prev != e {
                injective = false;
            }
        } else {
            seen.insert(s, e);
        }
        Ok(())
    })?;
    Ok(injective)
}

/// Table-driven decoder for cyclic bursts of length up to half the
/// redundancy.
pub struct BurstDecoder {
    table: HashMap<BinPoly, RingElem>,
    n: usize,
}

impl BurstDecoder {
    /// Builds the syndrome table. Fails with [`Error::AmbiguousSyndrome`] if
    /// two distinct bursts inside the bound share a syndrome (i.e. the
    /// generator lacks the injectivity property at this length).
    pub fn build(code: &CrcCode) -> Result<Self> {
        Self::build_with_cap(code, DEFAULT_BURST_CAP)
    }

    pub fn build_with_cap(code: &CrcCode, cap: u64) -> Result<Self> {
        let mut table: HashMap<BinPoly, RingElem> = HashMap::new();
        for_each_burst(code.n(), code.burst_bound(), cap, |e| {
            let s = code.syndrome(&e);
            if let Some(prev) = table.get(&s) {
                if *prev != e {
                    return Err(Error::AmbiguousSyndrome {
                        syndrome: s.to_string(),
                        first: prev.to_string(),
                        second: e.to_string(),
                    });
                }
            } else {
                table.insert(s, e);
            }
            Ok(())
        })?;
        Ok(BurstDecoder {
            table,
            n: code.n(),
        })
    }

    /// Number of distinct correctable error vectors in the table.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Looks up the burst with the given syndrome, if any.
    pub fn decode(&self, syndrome: &BinPoly) -> Option<RingElem> {
        self.table.get(syndrome).cloned()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}
