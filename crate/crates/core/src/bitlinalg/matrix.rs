use std::fmt;

pub const WORD_BITS: usize = u64::BITS as usize;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Row-major 0/1 matrix, each row packed into `u64` words.
///
/// Bits past column `cols` in the last word of a row are always zero, so
/// whole-word operations (OR, AND, popcount) never see garbage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Words per row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "bit ({i}, {j}) out of bounds");
        let word = &mut self.data[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn words(&self) -> &[u64] {
        &self.data
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.data
    }

    pub fn count_ones(&self) -> u64 {
        self.data.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Column indices of the set bits of row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(i))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Columns `[start, start + width)` as a new matrix. `start` must be
    /// word aligned.
    pub(crate) fn column_block(&self, start: usize, width: usize) -> BitMatrix {
        debug_assert_eq!(start % WORD_BITS, 0);
        let width = width.min(self.cols - start);
        let mut out = BitMatrix::zeros(self.rows, width);
        let first = start / WORD_BITS;
        for i in 0..self.rows {
            let src = &self.row(i)[first..first + out.stride];
            out.data[i * out.stride..(i + 1) * out.stride].copy_from_slice(src);
        }
        out.clear_padding();
        out
    }

    /// Writes `block` into columns starting at the word-aligned `start`.
    pub(crate) fn put_column_block(&mut self, start: usize, block: &BitMatrix) {
        debug_assert_eq!(start % WORD_BITS, 0);
        debug_assert_eq!(block.rows, self.rows);
        let first = start / WORD_BITS;
        for i in 0..self.rows {
            let dst = &mut self.data[i * self.stride + first..i * self.stride + first + block.stride];
            dst.copy_from_slice(block.row(i));
        }
    }

    fn clear_padding(&mut self) {
        let tail = self.cols % WORD_BITS;
        if tail == 0 || self.stride == 0 {
            return;
        }
        let mask = (1u64 << tail) - 1;
        for i in 0..self.rows {
            self.data[i * self.stride + self.stride - 1] &= mask;
        }
    }

    /// True when no row carries a bit beyond column `cols`.
    pub fn padding_is_clear(&self) -> bool {
        let tail = self.cols % WORD_BITS;
        if tail == 0 || self.stride == 0 {
            return true;
        }
        let mask = !((1u64 << tail) - 1);
        (0..self.rows).all(|i| self.data[i * self.stride + self.stride - 1] & mask == 0)
    }
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD_BITS + bit)
        })
    })
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
