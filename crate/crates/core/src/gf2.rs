//! Dense linear algebra over GF(2).
//!
//! Rows are bit-packed into `u64` words; bit `j % 64` of word `j / 64` holds
//! column `j`. Padding bits past `ncols` are kept at zero so that derived
//! equality and hashing compare matrices by value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{parse_err, Lines};

const WORD: usize = 64;

fn words_for(ncols: usize) -> usize {
    ncols.div_ceil(WORD)
}

/// A dense `nrows x ncols` matrix over the two-element field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    nrows: usize,
    ncols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        let stride = words_for(ncols);
        Self {
            nrows,
            ncols,
            stride,
            words: vec![0; nrows * stride],
        }
    }

    pub fn ones(nrows: usize, ncols: usize) -> Self {
        Self::from_fn(nrows, ncols, |_, _| true)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Build from rows of 0/1 values. All rows must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(
            rows.iter().all(|r| r.as_ref().len() == ncols),
            "ragged rows"
        );
        Self::from_fn(rows.len(), ncols, |i, j| rows[i].as_ref()[j] != 0)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_empty(&self) -> bool {
        self.nrows == 0 || self.ncols == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.nrows && j < self.ncols);
        (self.words[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.nrows && j < self.ncols);
        let w = &mut self.words[i * self.stride + j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    /// The packed words of row `i`.
    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// Row `i` as a single word. Only valid when `ncols <= 64`.
    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        debug_assert!(self.ncols <= WORD);
        if self.stride == 0 {
            0
        } else {
            self.words[i * self.stride]
        }
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let ncols = self.ncols;
        self.row_words(i)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * WORD + b))
            .take_while(move |&j| j < ncols)
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn row(&self, i: usize) -> Vec<bool> {
        (0..self.ncols).map(|j| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<bool> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |i, j| self.get(j, i))
    }

    /// Entrywise negation.
    pub fn complement(&self) -> Self {
        Self::from_fn(self.nrows, self.ncols, |i, j| !self.get(i, j))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn without_row(&self, r: usize) -> Self {
        let rows: Vec<usize> = (0..self.nrows).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..self.ncols).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn without_col(&self, c: usize) -> Self {
        let rows: Vec<usize> = (0..self.nrows).collect();
        let cols: Vec<usize> = (0..self.ncols).filter(|&j| j != c).collect();
        self.submatrix(&rows, &cols)
    }

    /// Entrywise XOR; errors if the shapes differ.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: other.nrows,
                right_cols: other.ncols,
            });
        }
        Ok(())
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: other.nrows,
                right_cols: other.ncols,
            });
        }
        let mut out = Self::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in self.row_ones(i).collect::<Vec<_>>() {
                let (dst, src) = (i * out.stride, k * other.stride);
                for w in 0..out.stride {
                    out.words[dst + w] ^= other.words[src + w];
                }
            }
        }
        Ok(out)
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        if self.stride == 1 {
            return rank_of_words(self.words.iter().copied());
        }
        let mut rows = self.words.clone();
        let stride = self.stride;
        let mut rank = 0;
        for col in 0..self.ncols {
            let (w, bit) = (col / WORD, 1u64 << (col % WORD));
            let Some(p) = (rank..self.nrows).find(|&r| rows[r * stride + w] & bit != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..stride {
                    rows.swap(p * stride + k, rank * stride + k);
                }
            }
            for r in rank + 1..self.nrows {
                if rows[r * stride + w] & bit != 0 {
                    for k in w..stride {
                        rows[r * stride + k] ^= rows[rank * stride + k];
                    }
                }
            }
            rank += 1;
            if rank == self.nrows {
                break;
            }
        }
        rank
    }

    /// Eliminate column `y` using row `x`, leaving row `x` and column `y`
    /// untouched: every other entry becomes `m[i][j] ^ (m[i][y] & m[x][j])`.
    ///
    /// Applying it twice at the same position restores the matrix.
    pub fn matrix_pivot(&self, x: usize, y: usize) -> Result<Self> {
        if x >= self.nrows {
            return Err(Error::IndexOutOfRange {
                index: x,
                bound: self.nrows,
            });
        }
        if y >= self.ncols {
            return Err(Error::IndexOutOfRange {
                index: y,
                bound: self.ncols,
            });
        }
        if !self.get(x, y) {
            return Err(Error::PivotOnZero { row: x, col: y });
        }
        let mut out = self.clone();
        let stride = self.stride;
        for i in 0..self.nrows {
            if i == x || !self.get(i, y) {
                continue;
            }
            for k in 0..stride {
                out.words[i * stride + k] ^= self.words[x * stride + k];
            }
            // the XOR cleared (i, y); the column itself is preserved
            out.set(i, y, true);
        }
        Ok(out)
    }

    /// Write the matrix in the `matrix <nrows> <ncols>` text format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<Self> {
        let h = lines.header("matrix", 2)?;
        let (nrows, ncols) = (h[0], h[1]);
        let mut m = Self::zeros(nrows, ncols);
        if ncols == 0 {
            return Ok(m);
        }
        for i in 0..nrows {
            let (line, text) = lines.expect_line("matrix row")?;
            if text.len() != ncols {
                return Err(parse_err(line, format!("row must have {ncols} characters")));
            }
            for (j, ch) in text.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    _ => return Err(parse_err(line, "matrix entries must be 0 or 1")),
                }
            }
        }
        Ok(m)
    }
}

/// Rank of XOR-combinations of single-word vectors.
pub fn rank_of_words(vectors: impl IntoIterator<Item = u64>) -> usize {
    // basis[b] holds a vector whose highest set bit is b
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let b = 63 - v.leading_zeros() as usize;
            if basis[b] == 0 {
                basis[b] = v;
                rank += 1;
                break;
            }
            v ^= basis[b];
        }
    }
    rank
}

/// Rank of `m1 XOR m2`.
pub fn xor_rank(m1: &BitMatrix, m2: &BitMatrix) -> Result<usize> {
    Ok(m1.xor(m2)?.rank())
}

pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

pub fn matrix_pivot(m: &BitMatrix, x: usize, y: usize) -> Result<BitMatrix> {
    m.matrix_pivot(x, y)
}

/// Iterator over set bit positions of a word, lowest first.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows, self.ncols)?;
        for i in 0..self.nrows {
            let row: String = (0..self.ncols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matrix {} {}", self.nrows, self.ncols)?;
        if self.ncols == 0 {
            return Ok(());
        }
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let m = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "trailing input after matrix"));
        }
        Ok(m)
    }
}
