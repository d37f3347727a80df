//! Gaussian elimination over GF(2).

use super::bits::{BitMatrix, BitVec};
use crate::error::{Error, Result};

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    /// Same shape as the input; nonzero rows first, zero rows last.
    pub matrix: BitMatrix,
    /// Strictly increasing; `pivot_cols[i]` is the leading column of row `i`.
    pub pivot_cols: Vec<usize>,
    /// `row_perm_applied[i]` is the input row whose slot ended up at position `i`
    /// after the pivoting swaps.
    pub row_perm_applied: Vec<usize>,
}

impl RrefResult {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

#[inline]
fn bit(m: &BitMatrix, r: usize, w: usize, mask: u64) -> bool {
    m.row_words(r)[w] & mask != 0
}

fn eliminate(m: &mut BitMatrix, full: bool, mut perm: Option<&mut Vec<usize>>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows {
            break;
        }
        let (w, mask) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (next..rows).find(|&r| bit(m, r, w, mask)) else {
            continue;
        };
        m.swap_rows(p, next);
        if let Some(perm) = perm.as_deref_mut() {
            perm.swap(p, next);
        }
        let start = if full { 0 } else { next + 1 };
        for r in start..rows {
            if r != next && bit(m, r, w, mask) {
                m.add_row(r, next);
            }
        }
        pivots.push(c);
        next += 1;
    }
    pivots
}

/// Dimension of the row space over GF(2).
pub fn rank(m: &BitMatrix) -> usize {
    let mut work = m.clone();
    eliminate(&mut work, false, None).len()
}

/// Reduced row-echelon form. Pivots are chosen by scanning columns left to
/// right and taking the lowest-index remaining row with a one there.
pub fn rref(m: &BitMatrix) -> RrefResult {
    let mut work = m.clone();
    let mut perm: Vec<usize> = (0..m.rows()).collect();
    let pivot_cols = eliminate(&mut work, true, Some(&mut perm));
    RrefResult {
        matrix: work,
        pivot_cols,
        row_perm_applied: perm,
    }
}

/// Basis of `{z : m·z = 0}`, one basis vector per row. Row `i` is the vector
/// that sets the `i`-th free column (ascending) and solves for the pivots.
pub fn nullspace_basis(m: &BitMatrix) -> BitMatrix {
    let cols = m.cols();
    let red = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivot_cols {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut basis = BitMatrix::zeros(free.len(), cols);
    for (i, &f) in free.iter().enumerate() {
        basis.set(i, f, true);
        for (r, &p) in red.pivot_cols.iter().enumerate() {
            if red.matrix.get(r, f) {
                basis.set(i, p, true);
            }
        }
    }
    basis
}

/// True iff `v` is a GF(2) combination of the rows of `m`.
pub fn in_row_space(m: &BitMatrix, v: &BitVec) -> Result<bool> {
    RowSpace::new(m).contains(v)
}

/// A row space kept in reduced echelon form for repeated membership queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BitMatrix) -> Self {
        let red = rref(m);
        let keep: Vec<usize> = (0..red.rank()).collect();
        Self {
            basis: red.matrix.select_rows(&keep),
            pivots: red.pivot_cols,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn width(&self) -> usize {
        self.basis.cols()
    }

    /// Reduces `v` modulo the row space; the result is zero iff `v` was in it.
    pub fn reduce(&self, v: &mut BitVec) -> Result<()> {
        if v.len() != self.width() {
            return Err(Error::dim(format!(
                "vector of length {} tested against rows of width {}",
                v.len(),
                self.width()
            )));
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_assign(&self.basis.row(r));
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        let mut w = v.clone();
        self.reduce(&mut w)?;
        Ok(w.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> BitMatrix {
        BitMatrix::from_rows(
            7,
            &[
                [1u8, 1, 1, 0, 1, 0, 0],
                [1, 1, 0, 1, 0, 1, 0],
                [1, 0, 1, 1, 0, 0, 1],
            ],
        )
        .unwrap()
    }

    /// Span enumeration: all 2^r combinations of the rows.
    fn span(m: &BitMatrix) -> Vec<BitVec> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << m.rows()) {
            let mut v = BitVec::zeros(m.cols());
            for r in 0..m.rows() {
                if mask >> r & 1 == 1 {
                    v.xor_assign(&m.row(r));
                }
            }
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&BitMatrix::identity(4)), 4);
        assert_eq!(rank(&BitMatrix::zeros(3, 5)), 0);
        assert_eq!(rank(&hamming()), 3);
        // 2^3 distinct combinations confirm independence.
        assert_eq!(span(&hamming()).len(), 8);
        assert_eq!(rank(&BitMatrix::zeros(0, 4)), 0);
        assert_eq!(rank(&BitMatrix::zeros(4, 0)), 0);
    }

    #[test]
    fn rref_examples() {
        let m = BitMatrix::from_rows(2, &[[1u8, 1], [1, 1]]).unwrap();
        let r = rref(&m);
        assert_eq!(
            r.matrix,
            BitMatrix::from_rows(2, &[[1u8, 1], [0, 0]]).unwrap()
        );
        assert_eq!(r.pivot_cols, vec![0]);

        let id = BitMatrix::identity(3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);

        let r = rref(&hamming());
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
        let mut a = span(&r.matrix);
        let mut b = span(&hamming());
        a.sort_by_key(|v| v.support());
        b.sort_by_key(|v| v.support());
        assert_eq!(a, b);
    }

    #[test]
    fn rref_pivot_tie_goes_to_lowest_row() {
        let m = BitMatrix::from_rows(3, &[[0u8, 1, 0], [1, 0, 1], [1, 1, 0]]).unwrap();
        let r = rref(&m);
        assert_eq!(r.row_perm_applied, vec![1, 0, 2]);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace_basis(&BitMatrix::identity(5)).rows(), 0);
        assert_eq!(nullspace_basis(&BitMatrix::zeros(2, 3)).rows(), 3);
        assert_eq!(nullspace_basis(&BitMatrix::zeros(0, 4)), BitMatrix::identity(4));

        let h = hamming();
        let k = nullspace_basis(&h);
        assert_eq!(k.rows(), 4);
        // Every one of the 2^4 combinations is annihilated by all checks.
        for z in span(&k) {
            assert!(h.mul_vec(&z).unwrap().is_zero());
        }
        assert_eq!(span(&k).len(), 16);
    }

    #[test]
    fn membership_examples() {
        let h = hamming();
        assert!(in_row_space(&h, &BitVec::zeros(7)).unwrap());
        assert!(in_row_space(&BitMatrix::identity(3), &BitVec::from_support(3, &[0, 2])).unwrap());
        let v = BitVec::from_bools(&[false, false, true, true, true, true, false]);
        assert!(in_row_space(&h, &v).unwrap());
        assert!(!in_row_space(&h, &BitVec::from_support(7, &[0])).unwrap());
        assert!(matches!(
            in_row_space(&h, &BitVec::zeros(6)),
            Err(Error::Dimension(_))
        ));
    }
}
