//! Fixed-length bit vectors packed into `u64` words, LSB first.

/// A bit vector of fixed length. Unused high bits of the last word stay zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the AND of two equal-length vectors.
    pub fn and_parity(&self, other: &Bits) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Cyclic rotation towards higher indices: bit `i` moves to `(i + s) % len`.
    pub fn rotl(&self, s: usize) -> Bits {
        let n = self.len;
        if n == 0 {
            return self.clone();
        }
        let s = s % n;
        if s == 0 {
            return self.clone();
        }
        let mut out = Bits::zeros(n);
        // out = (self << s | self >> (n - s)) masked to n bits
        shl_or(&mut out.words, &self.words, s);
        shr_or(&mut out.words, &self.words, n - s, n);
        out.trim();
        out
    }

    fn trim(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

/// `dst |= src << s`, where words beyond `dst.len()` are dropped.
fn shl_or(dst: &mut [u64], src: &[u64], s: usize) {
    let (ws, bs) = (s / 64, s % 64);
    for i in (0..dst.len()).rev() {
        if i < ws {
            continue;
        }
        let mut w = src.get(i - ws).copied().unwrap_or(0) << bs;
        if bs > 0 && i > ws {
            w |= src.get(i - ws - 1).copied().unwrap_or(0) >> (64 - bs);
        }
        dst[i] |= w;
    }
}

/// `dst |= (src >> s)` for an `nbits`-long `src`.
fn shr_or(dst: &mut [u64], src: &[u64], s: usize, nbits: usize) {
    let (ws, bs) = (s / 64, s % 64);
    let out_bits = nbits - s;
    let out_words = out_bits.div_ceil(64);
    for i in 0..out_words.min(dst.len()) {
        let mut w = src.get(i + ws).copied().unwrap_or(0) >> bs;
        if bs > 0 {
            w |= src.get(i + ws + 1).copied().unwrap_or(0) << (64 - bs);
        }
        dst[i] |= w;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(s: &str) -> Bits {
        let mut b = Bits::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            b.set(i, ch == '1');
        }
        b
    }

    fn to_str(b: &Bits) -> String {
        (0..b.len())
            .map(|i| if b.get(i) { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn set_and_get() {
        let mut b = Bits::zeros(100);
        b.set(0, true);
        b.set(99, true);
        b.set(50, true);
        assert!(b.get(0) && b.get(50) && b.get(99));
        assert_eq!(b.count_ones(), 3);
        b.set(50, false);
        assert!(!b.get(50));
        assert_eq!(b.count_ones(), 2);
    }

    #[test]
    fn rotl_small() {
        let b = from_str("10001");
        assert_eq!(to_str(&b.rotl(1)), "11000");
        assert_eq!(to_str(&b.rotl(4)), "00011");
        assert_eq!(to_str(&b.rotl(5)), "10001");
        assert_eq!(to_str(&b.rotl(0)), "10001");
    }

    #[test]
    fn rotl_across_words() {
        for n in [63, 64, 65, 130, 200] {
            let mut b = Bits::zeros(n);
            b.set(0, true);
            b.set(n / 2, true);
            for s in [1, 63, 64, 65, n - 1] {
                let r = b.rotl(s);
                let mut expect = Bits::zeros(n);
                expect.set(s % n, true);
                expect.set((n / 2 + s) % n, true);
                assert_eq!(r, expect, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn ones_iterator() {
        let b = from_str("0100100001");
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![1, 4, 9]);
    }

    #[test]
    fn and_parity_matches_naive() {
        let a = from_str("110101110");
        let b = from_str("011101011");
        let naive = (0..9).filter(|&i| a.get(i) && b.get(i)).count() % 2 == 1;
        assert_eq!(a.and_parity(&b), naive);
    }
}
