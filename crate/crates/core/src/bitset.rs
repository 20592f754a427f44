//! Dense square bit matrices with word-level row operations.

/// `n` rows of `n` bits, stored row-major in 64-bit words. Bits past `n`
/// in the last word of each row are always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Words per row.
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        self.data[row * self.words + col / 64] |= 1 << (col % 64);
    }

    #[inline]
    pub fn clear(&mut self, row: usize, col: usize) {
        self.data[row * self.words + col / 64] &= !(1 << (col % 64));
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[u64] {
        &self.data[row * self.words..(row + 1) * self.words]
    }

    pub fn row_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.data[row * self.words..(row + 1) * self.words]
    }

    /// Mutable rows for parallel fills.
    pub fn par_rows_mut(&mut self) -> rayon::slice::ChunksMut<'_, u64> {
        use rayon::prelude::*;
        self.data.par_chunks_mut(self.words)
    }

    pub fn row_count(&self, row: usize) -> usize {
        popcount(self.row(row))
    }

    pub fn total_count(&self) -> usize {
        popcount(&self.data)
    }

    /// Mask with the low `n` bits of a row set.
    pub fn full_row(&self) -> Vec<u64> {
        let mut mask = vec![!0u64; self.words];
        let rem = self.n % 64;
        if rem != 0 {
            mask[self.words - 1] = (1u64 << rem) - 1;
        } else if self.n == 0 {
            mask[0] = 0;
        }
        mask
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({})", self.n)?;
        for r in 0..self.n {
            let line: String = (0..self.n)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[inline]
pub fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Popcount of `a & !b`.
#[inline]
pub fn and_not_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & !y).count_ones() as usize)
        .sum()
}

/// Popcount of `a & b` restricted to bit indices `>= start`.
#[inline]
pub fn and_count_from(a: &[u64], b: &[u64], start: usize) -> usize {
    let first = start / 64;
    if first >= a.len() {
        return 0;
    }
    let head = (a[first] & b[first] & (!0u64 << (start % 64))).count_ones() as usize;
    head + and_count(&a[first + 1..], &b[first + 1..])
}

/// Iterator over the set bit indices of a row.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_and_counts() {
        let mut m = BitMatrix::new(130);
        m.set(3, 0);
        m.set(3, 64);
        m.set(3, 129);
        assert!(m.get(3, 129));
        assert_eq!(m.row_count(3), 3);
        assert_eq!(ones(m.row(3)).collect::<Vec<_>>(), vec![0, 64, 129]);
        m.clear(3, 64);
        assert_eq!(m.total_count(), 2);
    }

    #[test]
    fn and_count_from_respects_start() {
        let a = [!0u64, !0u64];
        let b = [0xF0u64, 1];
        assert_eq!(and_count_from(&a, &b, 0), 5);
        assert_eq!(and_count_from(&a, &b, 5), 4);
        assert_eq!(and_count_from(&a, &b, 64), 1);
        assert_eq!(and_count_from(&a, &b, 65), 0);
        assert_eq!(and_count_from(&a, &b, 500), 0);
    }

    #[test]
    fn full_row_masks_padding() {
        let m = BitMatrix::new(70);
        let mask = m.full_row();
        assert_eq!(popcount(&mask), 70);
    }
}
