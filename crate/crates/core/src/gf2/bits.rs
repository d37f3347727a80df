//! Bit-packed vectors and matrices over GF(2).
//!
//! Rows are stored as runs of `u64` words, least significant bit first. Bits
//! past the logical length of a row are always zero, so word-level equality
//! and popcounts are exact.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A dense vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// Builds a vector from `0`/`1` flags.
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of length `len` with ones at `support`.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub(crate) fn from_words(words: Vec<u64>, len: usize) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { words, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Adds `other` in place (symmetric difference of supports).
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the overlap with `other`.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        dot_words(&self.words, &other.words)
    }

    /// Indices of set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        iter_ones(&self.words).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + bit)
            }
        })
    })
}

/// A dense, row-major, bit-packed matrix over GF(2).
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
        Self {
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

    /// Builds a matrix from rows of `0`/`1` bytes. All rows must share a length.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::dim(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(r, c, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_bitvecs(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(0, cols);
        for v in rows {
            m.push_row(v)?;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD);
        let w = &mut self.data[r * self.stride + c / WORD];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.row_words(r).to_vec(), self.cols)
    }

    pub fn row_iter(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.rows).map(|r| self.row(r))
    }

    /// Ascending column indices of the ones in row `r`.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        iter_ones(self.row_words(r)).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    /// Ascending row indices of the ones in column `c`.
    pub fn col_support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.row_words(r).iter().all(|&w| w == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Row `dst` += row `src`.
    #[inline]
    pub fn add_row(&mut self, dst: usize, src: usize) {
        assert!(dst < self.rows && src < self.rows);
        if dst == src {
            self.row_words_mut(dst).fill(0);
            return;
        }
        let s = self.stride;
        let (d, sr) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (a, b) in d.iter_mut().zip(sr) {
            *a ^= b;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.data.swap(a * s + w, b * s + w);
        }
    }

    pub fn push_row(&mut self, v: &BitVec) -> Result<()> {
        if v.len() != self.cols {
            return Err(Error::dim(format!(
                "row of length {} pushed onto matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        self.data.extend_from_slice(v.words());
        self.rows += 1;
        Ok(())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::dim(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::dim(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut m = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in iter_ones(self.row_words(r)) {
                m.set(r, c, true);
            }
            for c in iter_ones(other.row_words(r)) {
                m.set(r, self.cols + c, true);
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in iter_ones(self.row_words(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Column restriction: keeps `columns` in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, columns.len());
        for (new_c, &c) in columns.iter().enumerate() {
            assert!(c < self.cols, "column {c} out of range");
            let (w, b) = (c / WORD, c % WORD);
            let (nw, nb) = (new_c / WORD, new_c % WORD);
            for r in 0..self.rows {
                let bit = (self.data[r * self.stride + w] >> b) & 1;
                m.data[r * m.stride + nw] |= bit << nb;
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut data = Vec::with_capacity(rows.len() * self.stride);
        for &r in rows {
            data.extend_from_slice(self.row_words(r));
        }
        BitMatrix {
            rows: rows.len(),
            cols: self.cols,
            stride: self.stride,
            data,
        }
    }

    /// `self · otherᵀ` over GF(2); entry (i, j) is the overlap parity of row i
    /// of `self` and row j of `other`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::dim(format!(
                "A·Bᵀ with {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                if dot_words(self.row_words(i), other.row_words(j)) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in iter_ones(self.row_words(i)) {
                let (o, src) = (i * out.stride, k * other.stride);
                for w in 0..out.stride {
                    out.data[o + w] ^= other.data[src + w];
                }
            }
        }
        Ok(out)
    }

    /// `self · v` over GF(2), one bit per row.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::dim(format!(
                "matrix with {} columns applied to vector of length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if dot_words(self.row_words(r), v.words()) {
                out.set(r, true);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_stays_zero() {
        let mut m = BitMatrix::zeros(2, 70);
        m.set(0, 69, true);
        m.set(1, 0, true);
        m.add_row(1, 0);
        assert_eq!(m.row_support(1), vec![0, 69]);
        assert_eq!(m.row_weight(1), 2);
        let t = m.transpose();
        assert_eq!(t.rows(), 70);
        assert_eq!(t.col_support(0), vec![69]);
        assert!(t.get(69, 1));
    }

    #[test]
    fn symmetric_difference_example() {
        // {e1,e4,e5} Δ {e2,e3,e4} = {e1,e2,e3,e5}
        let mut w1 = BitVec::from_support(5, &[0, 3, 4]);
        let w2 = BitVec::from_support(5, &[1, 2, 3]);
        w1.xor_assign(&w2);
        assert_eq!(w1.support(), vec![0, 1, 2, 4]);
    }

    #[test]
    fn add_row_twice_restores() {
        let mut m = BitMatrix::from_rows(4, &[[1u8, 0, 1, 1], [0, 1, 1, 0]]).unwrap();
        let orig = m.clone();
        m.add_row(0, 1);
        assert_ne!(m, orig);
        m.add_row(0, 1);
        assert_eq!(m, orig);
    }

    #[test]
    fn select_and_stack() {
        let m = BitMatrix::from_rows(3, &[[1u8, 0, 1], [0, 1, 1]]).unwrap();
        let s = m.select_columns(&[2, 0]);
        assert_eq!(s, BitMatrix::from_rows(2, &[[1u8, 1], [1, 0]]).unwrap());
        let v = m.vstack(&m).unwrap();
        assert_eq!(v.rows(), 4);
        let h = m.hstack(&s).unwrap();
        assert_eq!(h.row_support(0), vec![0, 2, 3, 4]);
        assert!(m.vstack(&s).is_err());
    }

    #[test]
    fn products() {
        let a = BitMatrix::from_rows(3, &[[1u8, 1, 0], [0, 1, 1]]).unwrap();
        let p = a.mul_transpose(&a).unwrap();
        assert_eq!(p, BitMatrix::from_rows(2, &[[0u8, 1], [1, 0]]).unwrap());
        assert_eq!(a.mul(&a.transpose()).unwrap(), p);
        let v = BitVec::from_support(3, &[1]);
        assert_eq!(a.mul_vec(&v).unwrap().support(), vec![0, 1]);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows: Vec<Vec<u8>> = vec![vec![1, 0], vec![1]];
        assert!(BitMatrix::from_rows(2, &rows).is_err());
    }
}
