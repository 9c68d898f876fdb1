//! Pauli strings, their binary symplectic images, and stabilizer generator
//! matrices.
//!
//! A length-`n` Pauli string maps to a vector in GF(2)^{2n} split into an
//! X half and a Z half: I -> (0|0), X -> (1|0), Z -> (0|1), Y -> (1|1).
//! Phases are dropped; addition of vectors matches multiplication of
//! operators up to phase. Two operators commute exactly when the symplectic
//! form of their images is zero.

use std::fmt;
use std::str::FromStr;

use crate::binmat::EchelonBasis;
use crate::bits::Bits;
use crate::gf2poly::cyclic_span;
use crate::{Error, Result};

/// A single-qubit Pauli operator, phase ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// The (x, z) bit pair of the symplectic image.
    pub fn xz(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn from_xz(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::Parse(format!("invalid Pauli letter {other:?}"))),
        }
    }

    /// Product of two single-qubit Paulis, phase dropped.
    pub fn mul(self, other: Pauli) -> Pauli {
        let (ax, az) = self.xz();
        let (bx, bz) = other.xz();
        Pauli::from_xz(ax ^ bx, az ^ bz)
    }

    pub fn anticommutes(self, other: Pauli) -> bool {
        self != Pauli::I && other != Pauli::I && self != other
    }
}

/// A multi-qubit Pauli operator as a sequence of letters; qubit 1 is the
/// first letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString(pub Vec<Pauli>);

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString(vec![Pauli::I; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&p| p != Pauli::I).count()
    }

    /// Qubit index (1-based) -> letter, for building sparse errors.
    pub fn from_letters(n: usize, letters: &[(usize, Pauli)]) -> Self {
        let mut s = PauliString::identity(n);
        for &(q, p) in letters {
            assert!((1..=n).contains(&q), "qubit {q} out of 1..={n}");
            s.0[q - 1] = p;
        }
        s
    }

    /// Letter-wise product, phase dropped.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        assert_eq!(self.len(), other.len());
        PauliString(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.mul(b))
                .collect(),
        )
    }

    /// Shortest cyclic window of qubits containing every non-identity
    /// letter; 0 for the identity.
    pub fn cyclic_burst_len(&self) -> usize {
        cyclic_span(
            self.len(),
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != Pauli::I)
                .map(|(i, _)| i),
        )
    }

    pub fn to_symplectic(&self) -> SympVec {
        let mut v = SympVec::zero(self.len());
        for (i, &p) in self.0.iter().enumerate() {
            let (x, z) = p.xz();
            v.x.set(i, x);
            v.z.set(i, z);
        }
        v
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(Pauli::from_char)
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        Ok(PauliString(letters))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.0 {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

/// The binary symplectic image of an n-qubit Pauli operator: an X half and a
/// Z half, each `n` bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SympVec {
    pub(crate) x: Bits,
    pub(crate) z: Bits,
}

impl SympVec {
    pub fn zero(n: usize) -> Self {
        SympVec {
            x: Bits::zeros(n),
            z: Bits::zeros(n),
        }
    }

    /// Number of qubits.
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn x_bit(&self, i: usize) -> bool {
        self.x.get(i)
    }

    pub fn z_bit(&self, i: usize) -> bool {
        self.z.get(i)
    }

    pub fn set_x(&mut self, i: usize, v: bool) {
        self.x.set(i, v);
    }

    pub fn set_z(&mut self, i: usize, v: bool) {
        self.z.set(i, v);
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (0..self.len())
            .filter(|&i| self.x.get(i) || self.z.get(i))
            .count()
    }

    /// GF(2) addition; corresponds to operator product up to phase.
    pub fn xor_assign(&mut self, other: &SympVec) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn xor(&self, other: &SympVec) -> SympVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn to_pauli(&self) -> PauliString {
        PauliString(
            (0..self.len())
                .map(|i| Pauli::from_xz(self.x.get(i), self.z.get(i)))
                .collect(),
        )
    }

    /// Shortest cyclic window of qubits containing the non-identity support.
    pub fn cyclic_burst_len(&self) -> usize {
        cyclic_span(
            self.len(),
            (0..self.len()).filter(|&i| self.x.get(i) || self.z.get(i)),
        )
    }

    /// The full 2n-bit concatenation `x | z` as one packed row.
    pub(crate) fn concat_bits(&self) -> Bits {
        let n = self.len();
        let mut b = Bits::zeros(2 * n);
        for i in self.x.ones() {
            b.set(i, true);
        }
        for i in self.z.ones() {
            b.set(n + i, true);
        }
        b
    }

    pub(crate) fn from_halves(x: Bits, z: Bits) -> Self {
        assert_eq!(x.len(), z.len());
        SympVec { x, z }
    }
}

impl FromStr for SympVec {
    type Err = Error;

    /// Parses `"xbits|zbits"`, e.g. `"10010|01100"`.
    fn from_str(s: &str) -> Result<Self> {
        let (xs, zs) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse("expected 'xbits|zbits'".into()))?;
        let parse_half = |h: &str| -> Result<Bits> {
            let mut b = Bits::zeros(h.len());
            for (i, c) in h.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => b.set(i, true),
                    other => return Err(Error::Parse(format!("invalid bit {other:?}"))),
                }
            }
            Ok(b)
        };
        let x = parse_half(xs.trim())?;
        let z = parse_half(zs.trim())?;
        if x.len() != z.len() || x.len() == 0 {
            return Err(Error::Parse(format!(
                "halves must be equal nonzero length, got {} and {}",
                x.len(),
                z.len()
            )));
        }
        Ok(SympVec { x, z })
    }
}

impl fmt::Display for SympVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |f: &mut fmt::Formatter<'_>, b: &Bits| -> fmt::Result {
            for i in 0..b.len() {
                f.write_str(if b.get(i) { "1" } else { "0" })?;
            }
            Ok(())
        };
        half(f, &self.x)?;
        f.write_str("|")?;
        half(f, &self.z)
    }
}

/// The binary symplectic form: 0 when the underlying operators commute,
/// 1 when they anticommute.
pub fn symplectic_form(u: &SympVec, w: &SympVec) -> bool {
    assert_eq!(u.len(), w.len());
    u.x.and_parity(&w.z) ^ u.z.and_parity(&w.x)
}

/// A stabilizer generator matrix: `n - k` symplectic rows over `n` qubits.
#[derive(Debug, Clone)]
pub struct GenMatrix {
    n: usize,
    rows: Vec<SympVec>,
}

impl GenMatrix {
    pub fn from_rows(n: usize, rows: Vec<SympVec>) -> Self {
        assert!(!rows.is_empty() && rows.len() <= n, "need 1..=n rows");
        for r in &rows {
            assert_eq!(r.len(), n, "row width mismatch");
        }
        GenMatrix { n, rows }
    }

    /// Number of physical qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical qubits, `n` minus the row count.
    pub fn k(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn rows(&self) -> &[SympVec] {
        &self.rows
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &SympVec {
        &self.rows[j - 1]
    }

    /// The generators as Pauli strings, in row order.
    pub fn stabilizers(&self) -> Vec<PauliString> {
        self.rows.iter().map(SympVec::to_pauli).collect()
    }

    /// Syndrome of an error image: bit `j` is the symplectic form of row
    /// `j + 1` with `e` (1 means the generator anticommutes with the error).
    pub(crate) fn syndrome_bits(&self, e: &SympVec) -> Bits {
        assert_eq!(e.len(), self.n);
        let mut s = Bits::zeros(self.rows.len());
        for (j, row) in self.rows.iter().enumerate() {
            s.set(j, symplectic_form(row, e));
        }
        s
    }

    /// Checks that the rows are GF(2)-independent and pairwise commuting.
    ///
    /// The commutation check compares all row pairs and is quadratic in the
    /// row count, so it is skipped above [`GenMatrix::PAIRWISE_CHECK_LIMIT`]
    /// rows; independence is always verified.
    pub fn is_valid(&self) -> bool {
        let mut basis = EchelonBasis::new(2 * self.n);
        for r in &self.rows {
            if !basis.insert(&r.concat_bits()) {
                return false;
            }
        }
        if self.rows.len() <= Self::PAIRWISE_CHECK_LIMIT {
            for (i, a) in self.rows.iter().enumerate() {
                for b in &self.rows[i + 1..] {
                    if symplectic_form(a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Above this many rows, [`GenMatrix::is_valid`] skips the quadratic
    /// pairwise commutation scan.
    pub const PAIRWISE_CHECK_LIMIT: usize = 1024;

    /// Lazily built row-space basis for membership queries.
    pub(crate) fn rowspace_basis(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(2 * self.n);
        for r in &self.rows {
            basis.insert(&r.concat_bits());
        }
        basis
    }
}
