//! Row-echelon arithmetic over GF(2), used for independence and row-space
//! membership checks on packed bit rows.

use crate::bits::Bits;

/// A set of rows kept in reduced row-echelon form.
#[derive(Debug, Clone)]
pub(crate) struct EchelonBasis {
    width: usize,
    /// Rows sorted by pivot column; `pivots[i]` is the leading column of
    /// `rows[i]`.
    rows: Vec<Bits>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; returns the residue.
    fn reduce(&self, row: &Bits) -> Bits {
        let mut r = row.clone();
        for (b, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(b);
            }
        }
        r
    }

    /// Inserts `row` if independent of the current basis. Returns whether the
    /// rank grew.
    pub fn insert(&mut self, row: &Bits) -> bool {
        assert_eq!(row.len(), self.width);
        let r = self.reduce(row);
        let Some(pivot) = r.ones().next() else {
            return false;
        };
        // Back-substitute so existing rows are clear at the new pivot.
        for b in &mut self.rows {
            if b.get(pivot) {
                b.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, r);
        self.pivots.insert(at, pivot);
        true
    }

    /// True when `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &Bits) -> bool {
        self.reduce(row).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Bits {
        let mut b = Bits::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            b.set(i, c == '1');
        }
        b
    }

    #[test]
    fn rank_and_membership() {
        let mut basis = EchelonBasis::new(4);
        assert!(basis.insert(&bits("1100")));
        assert!(basis.insert(&bits("0110")));
        assert!(!basis.insert(&bits("1010"))); // sum of the first two
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&bits("1010")));
        assert!(basis.contains(&bits("0000")));
        assert!(!basis.contains(&bits("0001")));
        assert!(basis.insert(&bits("0001")));
        assert_eq!(basis.rank(), 3);
    }

    #[test]
    fn full_rank_spans_everything() {
        let mut basis = EchelonBasis::new(3);
        for s in ["110", "011", "111"] {
            basis.insert(&bits(s));
        }
        assert_eq!(basis.rank(), 3);
        for v in 0..8u32 {
            let s: String = (0..3).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect();
            assert!(basis.contains(&bits(&s)));
        }
    }
}
