//! Fixed-capacity bitsets over point indices.
//!
//! Range membership, color classes, and catalog deduplication all key on
//! these. Ordering is lexicographic on the underlying words, which gives the
//! canonical catalog iteration order.

/// A set of point indices `0..len`, packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::new(len);
        for i in indices {
            b.insert(i);
        }
        b
    }

    /// Capacity (number of addressable indices), not the popcount.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    /// Lowercase hex, most significant nibble first, `ceil(len/4)` digits.
    /// Bit i of the set is bit i of the big-endian-printed integer.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4).max(1);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let nibble = (self.words[d / 16] >> (4 * (d % 16))) & 0xf;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    pub fn from_hex(len: usize, hex: &str) -> Option<Self> {
        let mut b = Self::new(len);
        for (pos, c) in hex.chars().rev().enumerate() {
            let nibble = c.to_digit(16)? as u64;
            if nibble == 0 {
                continue;
            }
            if pos * 4 >= b.words.len() * 64 {
                return None;
            }
            b.words[pos / 16] |= nibble << (4 * (pos % 16));
        }
        // reject bits past len
        if b.iter().any(|i| i >= len) {
            return None;
        }
        Some(b)
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let b = BitSet::from_indices(130, [0, 3, 64, 129]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 3, 64, 129]);
        assert_eq!(b.count(), 4);
        assert!(b.contains(64));
        assert!(!b.contains(65));
    }

    #[test]
    fn hex_roundtrip() {
        let b = BitSet::from_indices(10, [0, 1, 9]);
        let h = b.to_hex();
        assert_eq!(h, "203");
        assert_eq!(BitSet::from_hex(10, &h).unwrap(), b);
        assert!(BitSet::from_hex(8, "100").is_none());
    }

    #[test]
    fn subset_and_intersection() {
        let a = BitSet::from_indices(70, [1, 2, 68]);
        let b = BitSet::from_indices(70, [1, 2, 3, 68]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert!(a.intersects(&b));
        assert!(!a.intersects(&BitSet::from_indices(70, [0, 69])));
    }
}
