//! Linear-time burst decoding for the structured QCRC family.
//!
//! The family takes `g = 1 + X^k + X^{2k} + ... + X^{(m-1)k}` at length
//! `n = mk` with shift `l = ck`, giving an `[[mk, k]]` code that is `k`
//! interleaved copies of the base `[[m, 1]]` code (generator all-ones,
//! shift `c`). A global syndrome splits by row residue into `k` base-code
//! syndromes; each is decoded independently and the corrections are
//! interleaved back.
//!
//! Per subcode, decoding is a two-stage affair:
//!
//! 1. a precomputed lookup table handles the handful of bursts touching the
//!    special positions `c`, `m - c`, and `m` whose syndromes are irregular;
//! 2. everything else has a regular signature — an X at position `p` flags
//!    rows `p - c` and `p + c` (a "fork"), a Z at `p` flags row `p` — and is
//!    recovered by one greedy sweep: anchor at the flag following the
//!    longest flag-free stretch, walk the positions once in cyclic order,
//!    fire an X wherever both fork flags are currently set (clearing them),
//!    then convert leftover flags to Z's and merge overlaps into Y's.
//!
//! Anchoring at the longest gap matters: a correctable burst leaves one
//! flag-free stretch strictly longer than any gap inside its flag cluster,
//! so the sweep always enters the cluster from the low side and true forks
//! fire before any spurious wrap-around pattern could.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::gf2poly::BinPoly;
use crate::pauli::{Pauli, SympVec};
use crate::quantum::{QcrcCode, Syndrome};
use crate::{Error, Result};

/// Precomputed corrections for bursts that touch a special position.
///
/// Positions `c` and `m - c` are special for X/Y events (one prong of the
/// fork would land on the nonexistent row `m`), and position `m` is special
/// for Z/Y events (row `m` does not exist to flag). The table enumerates, in
/// a fixed order, every burst of length at most `c` in which such a position
/// carries such a letter: for each special position and event letter, each
/// window of `c` qubits containing the position, and each assignment of
/// I/X/Z/Y to the window's remaining qubits.
pub struct LookupTable {
    m: usize,
    c: usize,
    cyclic: bool,
    rows: Vec<(SympVec, Syndrome)>,
    map: HashMap<Syndrome, SympVec>,
}

/// Letter cycle used for the free window positions, last position fastest.
const FREE_CYCLE: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Z, Pauli::Y];

impl LookupTable {
    /// Builds the special-case table for the base `[[m, 1]]` code with shift
    /// `c`. With `cyclic` false, windows that wrap past position `m` are
    /// omitted (bursts confined to the block interior).
    pub fn build(m: usize, c: usize, cyclic: bool) -> Result<Self> {
        check_family_params(m, c)?;
        let base = base_code(m, c)?;
        let specials: [(usize, [Pauli; 2]); 3] = [
            (c, [Pauli::X, Pauli::Y]),
            (m - c, [Pauli::X, Pauli::Y]),
            (m, [Pauli::Z, Pauli::Y]),
        ];
        let mut rows = Vec::new();
        let mut map: HashMap<Syndrome, SympVec> = HashMap::new();
        for (q, events) in specials {
            // Window starts are ascending; each window [s, s+c-1] contains q.
            for s in (q + 1 - c)..=q {
                if !cyclic && s + c - 1 > m {
                    continue;
                }
                let free: Vec<usize> = (0..c)
                    .map(|o| (s + o - 1) % m + 1)
                    .filter(|&pos| pos != q)
                    .collect();
                for event in events {
                    for fill in 0..4u32.pow(c as u32 - 1) {
                        let mut e = SympVec::zero(m);
                        set_letter(&mut e, q, event);
                        for (i, &pos) in free.iter().enumerate() {
                            let idx = fill / 4u32.pow((free.len() - 1 - i) as u32) % 4;
                            set_letter(&mut e, pos, FREE_CYCLE[idx as usize]);
                        }
                        let syn = base.syndrome(&e);
                        if let Some(prev) = map.get(&syn) {
                            if *prev != e && !base.corrects(&e, prev) {
                                return Err(Error::AmbiguousSyndrome {
                                    syndrome: syn.to_string(),
                                    first: prev.to_pauli().to_string(),
                                    second: e.to_pauli().to_string(),
                                });
                            }
                        } else {
                            map.insert(syn.clone(), e.clone());
                        }
                        rows.push((e, syn));
                    }
                }
            }
        }
        Ok(LookupTable {
            m,
            c,
            cyclic,
            rows,
            map,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    /// All enumerated rows in construction order, duplicates included.
    pub fn rows(&self) -> &[(SympVec, Syndrome)] {
        &self.rows
    }

    /// Number of enumerated rows: `6c * 4^(c-1)` cyclic, `(4c+2) * 4^(c-1)`
    /// otherwise.
    pub fn raw_len(&self) -> usize {
        self.rows.len()
    }

    /// Number of distinct stored syndromes.
    pub fn unique_len(&self) -> usize {
        self.map.len()
    }

    /// The stored correction for a special-burst syndrome, if present.
    pub fn lookup(&self, s: &Syndrome) -> Option<&SympVec> {
        self.map.get(s)
    }
}

fn set_letter(e: &mut SympVec, pos_1based: usize, p: Pauli) {
    let (x, z) = p.xz();
    e.set_x(pos_1based - 1, x);
    e.set_z(pos_1based - 1, z);
}

fn check_family_params(m: usize, c: usize) -> Result<()> {
    if c == 0 {
        return Err(Error::BadParameter("burst bound c must be positive".into()));
    }
    if m < 4 * c + 1 {
        return Err(Error::ReigerBound { m, c });
    }
    Ok(())
}

/// The base `[[m, 1]]` code: all-ones generator of degree `m - 1`, shift `c`.
fn base_code(m: usize, c: usize) -> Result<QcrcCode> {
    let g = BinPoly::from_exponents(&(0..m).collect::<Vec<_>>())?;
    QcrcCode::new(g, m, Some(c))
}

/// One fork fired during the greedy sweep.
#[derive(Debug, Clone)]
pub struct ForkEvent {
    /// Position (1-based) where an X was placed.
    pub position: usize,
    /// Flags still standing after this fork cleared its pair.
    pub remaining: Syndrome,
}

/// Decoding record for one subcode, mostly useful for demonstrations.
#[derive(Debug, Clone)]
pub struct SubcodeTrace {
    /// Which interleaved copy this is, 1-based.
    pub subcode: usize,
    pub sub_syndrome: Syndrome,
    /// True when the special-case table supplied the answer directly.
    pub table_hit: bool,
    /// Forks fired by the sweep, in firing order.
    pub forks: Vec<ForkEvent>,
    /// Positions (1-based) whose leftover flags became Z events.
    pub z_positions: Vec<usize>,
    /// The recovered error on the `m` qubits of this subcode.
    pub error: SympVec,
}

/// Greedy fork sweep on a base-code syndrome with parameters `(m, c)`.
/// Returns the recovered error plus the fork and Z events. The output always
/// reproduces the input syndrome exactly.
fn fork_scan(m: usize, c: usize, syndrome: &Syndrome) -> (SympVec, Vec<ForkEvent>, Vec<usize>) {
    debug_assert_eq!(syndrome.len(), m - 1);
    let mut flags: Bits = syndrome.bits().clone();
    let mut e = SympVec::zero(m);
    if flags.is_zero() {
        return (e, Vec::new(), Vec::new());
    }

    // Anchor: the flag that follows the longest flag-free cyclic stretch of
    // positions 1..m (position m never carries a flag). Ties go to the
    // stretch with the smallest starting position.
    let flagged: Vec<usize> = flags.ones().map(|i| i + 1).collect();
    let mut anchor = flagged[0];
    let mut best = (0usize, usize::MAX);
    for (i, &f) in flagged.iter().enumerate() {
        let next = flagged[(i + 1) % flagged.len()];
        // Cyclic distance in 1..=m (a lone flag is m positions from itself).
        let dist = (next + m - f - 1) % m + 1;
        let gap_len = dist - 1; // unflagged positions strictly between
        let start = f + 1;
        if gap_len > best.0 || (gap_len == best.0 && start < best.1) {
            best = (gap_len, start);
            anchor = next;
        }
    }

    let mut forks = Vec::new();
    for off in 0..m {
        let p = (anchor - 1 + off) % m + 1;
        if p == c || p == m - c {
            continue; // an X here is a table case, not a fork signature
        }
        let down = (p + m - c - 1) % m + 1;
        let up = (p + c - 1) % m + 1;
        if flags.get(down - 1) && flags.get(up - 1) {
            flags.set(down - 1, false);
            flags.set(up - 1, false);
            e.set_x(p - 1, true);
            forks.push(ForkEvent {
                position: p,
                remaining: Syndrome::from_bits(flags.clone()),
            });
        }
    }
    let z_positions: Vec<usize> = flags.ones().map(|i| i + 1).collect();
    for &q in &z_positions {
        e.set_z(q - 1, true);
    }
    (e, forks, z_positions)
}

/// Splits a global syndrome of an `[[mk, k]]` structured code into the `k`
/// base-code syndromes: subcode `j` collects the rows congruent to `j`
/// modulo `k`, in ascending order.
pub fn split_syndrome(s: &Syndrome, k: usize) -> Result<Vec<Syndrome>> {
    if k == 0 || s.len() % k != 0 {
        return Err(Error::BadParameter(format!(
            "syndrome length {} is not divisible by k = {k}",
            s.len()
        )));
    }
    let rows_per = s.len() / k;
    let mut subs = Vec::with_capacity(k);
    for j in 1..=k {
        let mut bits = Bits::zeros(rows_per);
        for p in 0..rows_per {
            if s.is_minus(j + p * k) {
                bits.set(p, true);
            }
        }
        subs.push(Syndrome::from_bits(bits));
    }
    Ok(subs)
}

/// Inverse of the interleaving map: subcode errors of length `m` combine
/// into a global error of length `mk`, subcode `j` position `p` landing on
/// qubit `k(p-1) + j`.
pub fn interleave(parts: &[SympVec]) -> SympVec {
    let k = parts.len();
    assert!(k > 0, "need at least one subcode");
    let m = parts[0].len();
    let mut e = SympVec::zero(m * k);
    for (j0, part) in parts.iter().enumerate() {
        assert_eq!(part.len(), m, "subcode length mismatch");
        for p in 0..m {
            e.set_x(p * k + j0, part.x_bit(p));
            e.set_z(p * k + j0, part.z_bit(p));
        }
    }
    e
}

/// A structured `[[mk, k]]` QCRC code bundled with its linear-time decoder.
pub struct StructuredCode {
    m: usize,
    c: usize,
    k: usize,
    code: QcrcCode,
    base: QcrcCode,
    table: LookupTable,
}

impl StructuredCode {
    /// Builds the code with generator `1 + X^k + ... + X^{(m-1)k}` at length
    /// `mk` and shift `ck`. Requires `m >= 4c + 1` (the burst bound) and
    /// `k >= 1`.
    pub fn new(m: usize, c: usize, k: usize) -> Result<Self> {
        check_family_params(m, c)?;
        if k == 0 {
            return Err(Error::BadParameter("k must be positive".into()));
        }
        let g = BinPoly::from_exponents(&(0..m).map(|j| j * k).collect::<Vec<_>>())?;
        let code = QcrcCode::new(g, m * k, Some(c * k))?;
        let base = base_code(m, c)?;
        let table = LookupTable::build(m, c, true)?;
        Ok(StructuredCode {
            m,
            c,
            k,
            code,
            base,
            table,
        })
    }

    /// Blocks per subcode (base-code length).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Correctable burst length per subcode.
    pub fn c(&self) -> usize {
        self.c
    }

    /// Number of interleaved subcodes (= logical qubits).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Physical qubits, `mk`.
    pub fn n(&self) -> usize {
        self.m * self.k
    }

    /// The full `[[mk, k]]` code.
    pub fn code(&self) -> &QcrcCode {
        &self.code
    }

    /// The `[[m, 1]]` code each subcode instantiates.
    pub fn base(&self) -> &QcrcCode {
        &self.base
    }

    pub fn table(&self) -> &LookupTable {
        &self.table
    }

    /// Decodes one base-code syndrome: table first, fork sweep otherwise.
    pub fn decode_subcode(&self, sub: &Syndrome) -> SympVec {
        assert_eq!(sub.len(), self.m - 1, "subcode syndrome length");
        if let Some(hit) = self.table.lookup(sub) {
            return hit.clone();
        }
        fork_scan(self.m, self.c, sub).0
    }

    /// Decodes a full syndrome. Total: every syndrome yields a correction
    /// with exactly that syndrome; for bursts within the design bound the
    /// correction matches the error up to generators.
    pub fn decode(&self, s: &Syndrome) -> SympVec {
        let subs = split_syndrome(s, self.k).expect("syndrome length must be (m-1)k");
        let parts: Vec<SympVec> = subs.iter().map(|ss| self.decode_subcode(ss)).collect();
        interleave(&parts)
    }

    /// [`StructuredCode::decode`] with a per-subcode record of table hits,
    /// forks, and Z conversions.
    pub fn decode_traced(&self, s: &Syndrome) -> (SympVec, Vec<SubcodeTrace>) {
        let subs = split_syndrome(s, self.k).expect("syndrome length must be (m-1)k");
        let mut parts = Vec::with_capacity(self.k);
        let mut traces = Vec::with_capacity(self.k);
        for (j0, sub) in subs.iter().enumerate() {
            let (error, table_hit, forks, z_positions) = match self.table.lookup(sub) {
                Some(hit) => (hit.clone(), true, Vec::new(), Vec::new()),
                None => {
                    let (e, forks, zs) = fork_scan(self.m, self.c, sub);
                    (e, false, forks, zs)
                }
            };
            traces.push(SubcodeTrace {
                subcode: j0 + 1,
                sub_syndrome: sub.clone(),
                table_hit,
                forks,
                z_positions,
                error: error.clone(),
            });
            parts.push(error);
        }
        (interleave(&parts), traces)
    }
}
