//! Quantum stabilizer codes built from classical CRC generators.
//!
//! Starting from the parity-check matrix `H` of a cyclic `[n, k]` CRC code,
//! the generator matrix `G = [H | B]` with `B = H<<l XOR H>>l` (column-wise
//! cyclic shifts by `l`) defines an `[[n, k]]` stabilizer code: rows always
//! commute because the shift operator is orthogonal, and the identity block
//! inside `H` keeps them independent. The syndrome of a Pauli error with
//! symplectic halves `(e1 | e2)` equals the classical syndrome of
//! `X^l e1 + X^{-l} e1 + e2`, so quantum decoding reduces to classical
//! polynomial arithmetic modulo `g`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::binmat::EchelonBasis;
use crate::bits::Bits;
use crate::crc::{CrcCode, DEFAULT_BURST_CAP};
use crate::gf2poly::{BinPoly, RingElem};
use crate::pauli::{GenMatrix, Pauli, PauliString, SympVec};
use crate::{Error, Result};

/// A measured syndrome: one sign per stabilizer generator, `-` (bit 1)
/// meaning the generator anticommutes with the error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: Bits,
}

impl Syndrome {
    pub fn zero(len: usize) -> Self {
        Syndrome {
            bits: Bits::zeros(len),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// Sign of generator `j` (1-based): true means `-`.
    pub fn is_minus(&self, j: usize) -> bool {
        self.bits.get(j - 1)
    }

    pub fn set_minus(&mut self, j: usize, v: bool) {
        self.bits.set(j - 1, v);
    }

    /// 1-based indices of all `-` signs.
    pub fn minus_positions(&self) -> Vec<usize> {
        self.bits.ones().map(|i| i + 1).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    /// The syndrome as a polynomial: generator `j` contributes `X^{j-1}`.
    pub fn to_poly(&self) -> BinPoly {
        let mut p = BinPoly::zero();
        for i in self.bits.ones() {
            p.set_coeff(i, true);
        }
        p
    }

    pub fn xor_assign(&mut self, other: &Syndrome) {
        self.bits.xor_assign(&other.bits);
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub(crate) fn from_bits(bits: Bits) -> Self {
        Syndrome { bits }
    }
}

impl FromStr for Syndrome {
    type Err = Error;

    /// Parses a sign string such as `"++--+"`. Whitespace, commas, and
    /// parentheses are ignored; `0`/`1` are accepted as aliases for `+`/`-`.
    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::new();
        for c in s.chars() {
            match c {
                '+' | '0' => signs.push(false),
                '-' | '1' => signs.push(true),
                c if c.is_whitespace() || c == ',' || c == '(' || c == ')' => {}
                other => return Err(Error::Parse(format!("invalid sign {other:?}"))),
            }
        }
        if signs.is_empty() {
            return Err(Error::Parse("empty syndrome".into()));
        }
        let mut bits = Bits::zeros(signs.len());
        for (i, v) in signs.into_iter().enumerate() {
            bits.set(i, v);
        }
        Ok(Syndrome { bits })
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.bits.len() {
            f.write_str(if self.bits.get(i) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

/// An `[[n, k]]` stabilizer code derived from a CRC generator polynomial and
/// a shift parameter `l`.
#[derive(Debug, Clone)]
pub struct QcrcCode {
    crc: CrcCode,
    l: usize,
    gen: GenMatrix,
    rowspace: OnceLock<EchelonBasis>,
}

impl QcrcCode {
    /// Builds the code. `l` defaults to a quarter of the redundancy; it must
    /// satisfy `1 <= l < n`.
    pub fn new(g: BinPoly, n: usize, l: Option<usize>) -> Result<Self> {
        let crc = CrcCode::new(g, n)?;
        let l = l.unwrap_or(crc.redundancy() / 4);
        if l == 0 || l >= n {
            return Err(Error::BadShift { l, n });
        }
        let rows = crc
            .h_rows()
            .iter()
            .map(|h| {
                let b = &h.shifted(l as i64) + &h.shifted(-(l as i64));
                SympVec::from_halves(h.bits().clone(), b.bits().clone())
            })
            .collect();
        let gen = GenMatrix::from_rows(n, rows);
        debug_assert!(
            gen.rows().len() > GenMatrix::PAIRWISE_CHECK_LIMIT || gen.is_valid(),
            "construction must yield commuting independent rows"
        );
        Ok(QcrcCode {
            crc,
            l,
            gen,
            rowspace: OnceLock::new(),
        })
    }

    /// Number of physical qubits.
    pub fn n(&self) -> usize {
        self.crc.n()
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.crc.k()
    }

    /// The shift parameter used to form the Z-half block.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn g(&self) -> &BinPoly {
        self.crc.g()
    }

    /// The underlying classical code.
    pub fn crc(&self) -> &CrcCode {
        &self.crc
    }

    pub fn gen_matrix(&self) -> &GenMatrix {
        &self.gen
    }

    pub fn stabilizers(&self) -> Vec<PauliString> {
        self.gen.stabilizers()
    }

    /// Longest cyclic burst the code is designed to correct.
    pub fn burst_bound(&self) -> usize {
        self.l
    }

    /// Syndrome of an error given by its symplectic image.
    pub fn syndrome(&self, e: &SympVec) -> Syndrome {
        Syndrome::from_bits(self.gen.syndrome_bits(e))
    }

    /// The syndrome computed through ring arithmetic instead of the matrix:
    /// the classical syndrome of `X^l e1 + X^{-l} e1 + e2`, reduced modulo
    /// `g`, where `e1` and `e2` are the X and Z halves of the error.
    pub fn syndrome_poly(&self, e1: &RingElem, e2: &RingElem) -> BinPoly {
        assert_eq!(e1.len(), self.n());
        assert_eq!(e2.len(), self.n());
        let mut v = e1.shifted(self.l as i64);
        v.xor_assign(&e1.shifted(-(self.l as i64)));
        v.xor_assign(&e2);
        self.crc.syndrome(&v)
    }

    /// [`QcrcCode::syndrome_poly`] on a combined symplectic vector.
    pub fn syndrome_poly_of(&self, e: &SympVec) -> BinPoly {
        let e1 = RingElem::from_bits(e.x.clone());
        let e2 = RingElem::from_bits(e.z.clone());
        self.syndrome_poly(&e1, &e2)
    }

    /// True when the error anticommutes with at least one generator.
    pub fn detects(&self, e: &SympVec) -> bool {
        !self.syndrome(e).is_zero()
    }

    /// True when `e` is a product of generators, i.e. acts trivially on the
    /// code space. The basis is built on first use and cached.
    pub fn rowspace_contains(&self, e: &SympVec) -> bool {
        assert_eq!(e.len(), self.n());
        self.rowspace
            .get_or_init(|| self.gen.rowspace_basis())
            .contains(&e.concat_bits())
    }

    /// Whether a residual error `actual * corrected` is harmless: the
    /// decoder output times the true error lies in the generator row space.
    pub fn corrects(&self, actual: &SympVec, correction: &SympVec) -> bool {
        self.rowspace_contains(&actual.xor(correction))
    }
}

/// Enumerates every nonzero Pauli error whose cyclic burst length is at most
/// `max_len`, feeding each to `visit`. Errors whose support fits several
/// windows (identity letters next to an endpoint) are visited once per
/// window. Refuses with [`Error::Infeasible`] when the number of enumeration
/// slots exceeds `cap`.
pub fn for_each_pauli_burst(
    n: usize,
    max_len: usize,
    cap: u64,
    mut visit: impl FnMut(SympVec) -> Result<()>,
) -> Result<()> {
    const END: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];
    let mut needed: u128 = 0;
    for len in 1..=max_len {
        let per_start = if len == 1 {
            3u128
        } else {
            9u128 << (2 * (len - 2))
        };
        needed += n as u128 * per_start;
    }
    if needed > cap as u128 {
        return Err(Error::Infeasible { needed, cap });
    }
    for len in 1..=max_len {
        let interior = len.saturating_sub(2);
        for start in 0..n {
            if len == 1 {
                for p in END {
                    let mut e = SympVec::zero(n);
                    set_letter(&mut e, start, p);
                    visit(e)?;
                }
                continue;
            }
            for first in END {
                for last in END {
                    for fill in 0u64..(1 << (2 * interior)) {
                        let mut e = SympVec::zero(n);
                        set_letter(&mut e, start, first);
                        set_letter(&mut e, (start + len - 1) % n, last);
                        for b in 0..interior {
                            let letter = Pauli::ALL[(fill >> (2 * b) & 3) as usize];
                            set_letter(&mut e, (start + 1 + b) % n, letter);
                        }
                        visit(e)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn set_letter(e: &mut SympVec, i: usize, p: Pauli) {
    let (x, z) = p.xz();
    e.set_x(i, x);
    e.set_z(i, z);
}

/// Table-driven decoder for any QCRC code: maps each syndrome reachable by a
/// correctable burst to a fixed representative error.
pub struct GenericDecoder {
    table: HashMap<Syndrome, SympVec>,
    n: usize,
    syndrome_len: usize,
}

impl GenericDecoder {
    /// Enumerates all Pauli bursts up to the code's burst bound and indexes
    /// them by syndrome. Two bursts may share a syndrome only if they are
    /// equivalent up to generators; otherwise the build fails with
    /// [`Error::AmbiguousSyndrome`].
    pub fn build(code: &QcrcCode) -> Result<Self> {
        Self::build_with_cap(code, DEFAULT_BURST_CAP)
    }

    pub fn build_with_cap(code: &QcrcCode, cap: u64) -> Result<Self> {
        let mut table: HashMap<Syndrome, SympVec> = HashMap::new();
        table.insert(
            Syndrome::zero(code.crc().redundancy()),
            SympVec::zero(code.n()),
        );
        for_each_pauli_burst(code.n(), code.burst_bound(), cap, |e| {
            let s = code.syndrome(&e);
            if let Some(prev) = table.get(&s) {
                if *prev != e && !code.corrects(&e, prev) {
                    return Err(Error::AmbiguousSyndrome {
                        syndrome: s.to_string(),
                        first: prev.to_pauli().to_string(),
                        second: e.to_pauli().to_string(),
                    });
                }
            } else {
                table.insert(s, e);
            }
            Ok(())
        })?;
        Ok(GenericDecoder {
            table,
            n: code.n(),
            syndrome_len: code.crc().redundancy(),
        })
    }

    /// Number of stored syndrome entries (including the trivial one).
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syndrome_len(&self) -> usize {
        self.syndrome_len
    }

    /// Returns the stored representative for this syndrome, if any burst
    /// inside the bound produces it.
    pub fn decode(&self, s: &Syndrome) -> Option<SympVec> {
        self.table.get(s).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nines() -> QcrcCode {
        QcrcCode::new("111111111".parse().unwrap(), 9, None).unwrap()
    }

    #[test]
    fn syndrome_parse_display() {
        let s: Syndrome = "++--+".parse().unwrap();
        assert_eq!(s.to_string(), "++--+");
        assert_eq!(s.minus_positions(), vec![3, 4]);
        assert_eq!("( +, + , -,-,+ )".parse::<Syndrome>().unwrap(), s);
        assert_eq!("00110".parse::<Syndrome>().unwrap(), s);
        assert!("+*-".parse::<Syndrome>().is_err());
        assert!("".parse::<Syndrome>().is_err());
        assert_eq!(s.to_poly().exponents(), vec![2, 3]);
    }

    #[test]
    fn default_shift_is_quarter_redundancy() {
        let code = nines();
        assert_eq!((code.n(), code.k(), code.l()), (9, 1, 2));
        let five = QcrcCode::new("11111".parse().unwrap(), 5, None).unwrap();
        assert_eq!(five.l(), 1);
    }

    #[test]
    fn shift_bounds_enforced() {
        // deg g = 1 gives a default shift of 0, which is rejected.
        assert!(matches!(
            QcrcCode::new("11".parse().unwrap(), 5, None),
            Err(Error::BadShift { .. })
        ));
        assert!(matches!(
            QcrcCode::new("11111".parse().unwrap(), 5, Some(5)),
            Err(Error::BadShift { l: 5, n: 5 })
        ));
        assert!(QcrcCode::new("11".parse().unwrap(), 5, Some(1)).is_ok());
    }

    #[test]
    fn nine_qubit_first_row_and_stabilizer() {
        let code = nines();
        let rows = code.gen_matrix().rows();
        assert_eq!(rows[0].to_string(), "100000001|011000110");
        assert_eq!(rows[0].to_pauli().to_string(), "XZZIIIZZX");
        assert!(code.gen_matrix().is_valid());
    }

    #[test]
    fn syndrome_two_paths_agree() {
        let code = nines();
        // A spread of errors, including wrap-around bursts.
        for e in [
            "XIIIIIIII",
            "IIIIYIIII",
            "ZIIIIIIIZ",
            "XYIIIIIIZ",
            "YYYYYYYYY",
            "IIIXZIIII",
        ] {
            let v = e.parse::<PauliString>().unwrap().to_symplectic();
            assert_eq!(
                code.syndrome(&v).to_poly(),
                code.syndrome_poly_of(&v),
                "error {e}"
            );
        }
    }

    #[test]
    fn single_x_syndrome_on_five_qubits() {
        // Closed form: X on qubit 1 flags generators 1 - l and 1 + l.
        let code = QcrcCode::new("11111".parse().unwrap(), 5, None).unwrap();
        let e = "XIIII".parse::<PauliString>().unwrap().to_symplectic();
        assert_eq!(code.syndrome(&e).to_string(), "-+--");
    }

    #[test]
    fn rowspace_membership() {
        let code = nines();
        let zero = SympVec::zero(9);
        assert!(code.rowspace_contains(&zero));
        for row in code.gen_matrix().rows() {
            assert!(code.rowspace_contains(row));
        }
        let mut prod = code.gen_matrix().rows()[0].clone();
        prod.xor_assign(&code.gen_matrix().rows()[3]);
        assert!(code.rowspace_contains(&prod));
        let x1 = "XIIIIIIII".parse::<PauliString>().unwrap().to_symplectic();
        assert!(!code.rowspace_contains(&x1));
    }

    #[test]
    fn generic_decoder_covers_all_short_bursts() {
        let code = nines();
        let dec = GenericDecoder::build(&code).unwrap();
        // 1 trivial + 27 single-letter + 81 two-letter windows.
        assert_eq!(dec.len(), 109);
        let mut count = 0;
        for_each_pauli_burst(9, 2, u64::MAX, |e| {
            let got = dec.decode(&code.syndrome(&e)).expect("in table");
            assert!(code.corrects(&e, &got), "burst {}", e.to_pauli());
            count += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(count, 108);
        // A lone minus on the last generator is the signature of Z on
        // qubit 8.
        let z8 = dec.decode(&"+++++++-".parse().unwrap()).unwrap();
        assert_eq!(z8.to_pauli().to_string(), "IIIIIIIZI");
        // Five consecutive flags cannot come from any burst this short.
        assert_eq!(dec.decode(&"-----+++".parse().unwrap()), None);
    }

    #[test]
    fn burst_enumeration_is_capped() {
        let code = nines();
        assert!(matches!(
            GenericDecoder::build_with_cap(&code, 10),
            Err(Error::Infeasible { .. })
        ));
    }
}
