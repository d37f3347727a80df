//! Block canonical form of a check matrix relative to a bipartition.
//!
//! Row operations bring `H` to
//!
//! ```text
//! ( I  W̃_A  0    0 )
//! ( 0  W_A  W_B  0 )
//! ( 0  0    W̃_B  I )
//! ```
//!
//! where the columns are ordered as deleted `A` qubits, remaining `A` qubits,
//! remaining `B` qubits, deleted `B` qubits. The middle stripe has
//! independent rows on both sides, so its height is the entropy.

use super::{check_width, Bipartition};
use crate::error::Result;
use crate::gf2::{BitMatrix, BitVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBlocks {
    /// Input row (after row operations) placed at each output row.
    pub row_perm: Vec<usize>,
    /// Qubit placed at each output column.
    pub col_perm: Vec<usize>,
    pub wa: BitMatrix,
    pub wb: BitMatrix,
    pub tilde_wa: BitMatrix,
    pub tilde_wb: BitMatrix,
    /// Qubits of the identity block on the `A` side, in row order.
    pub deleted_a: Vec<usize>,
    /// Qubits of the identity block on the `B` side, in row order.
    pub deleted_b: Vec<usize>,
    matrix: BitMatrix,
    a_width: usize,
}

impl CanonicalBlocks {
    /// The assembled block matrix in `row_perm` × `col_perm` order.
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Number of leading columns that belong to `A`.
    pub fn a_width(&self) -> usize {
        self.a_width
    }

    /// Height of the boundary stripe.
    pub fn entropy(&self) -> usize {
        self.wa.rows()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Open,
    Used,
    Dropped,
}

struct Work {
    rows: Vec<BitVec>,
    slot: Vec<Slot>,
    in_a: Vec<bool>,
    alive: Vec<bool>,
    used_a: Vec<(usize, usize)>,
    used_b: Vec<(usize, usize)>,
}

impl Work {
    fn side_support(&self, r: usize, side_a: bool) -> impl Iterator<Item = usize> + '_ {
        self.rows[r]
            .support()
            .into_iter()
            .filter(move |&q| self.in_a[q] == side_a)
    }

    fn one_sided(&self, r: usize, side_a: bool) -> bool {
        !self.rows[r].is_zero() && self.side_support(r, !side_a).next().is_none()
    }

    /// Uses row `r` to delete qubit `q`, clearing `q` from every other row.
    fn delete(&mut self, r: usize, q: usize) {
        self.alive[q] = false;
        self.slot[r] = Slot::Used;
        let pivot = self.rows[r].clone();
        for (s, row) in self.rows.iter_mut().enumerate() {
            if s != r && row.get(q) {
                row.xor_assign(&pivot);
            }
        }
        if self.in_a[q] {
            self.used_a.push((r, q));
        } else {
            self.used_b.push((r, q));
        }
    }

    fn open(&self) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| self.slot[r] == Slot::Open).collect()
    }

    /// Deletes qubits using one-sided rows until none remain. Returns whether
    /// anything changed.
    fn strip_one_sided(&mut self) -> bool {
        let mut changed = false;
        for side_a in [true, false] {
            while let Some(r) = self.open().into_iter().find(|&r| self.one_sided(r, side_a)) {
                let q = self.side_support(r, side_a).next().expect("nonzero row");
                self.delete(r, q);
                changed = true;
            }
        }
        for r in self.open() {
            if self.rows[r].is_zero() {
                self.slot[r] = Slot::Dropped;
                changed = true;
            }
        }
        changed
    }

    /// Eliminates the open rows restricted to one side. Stops as soon as a row
    /// loses its whole support on that side.
    fn eliminate_side(&mut self, side_a: bool) -> bool {
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for r in self.open() {
            for &(p, col) in &pivots {
                if self.rows[r].get(col) {
                    let pivot = self.rows[p].clone();
                    self.rows[r].xor_assign(&pivot);
                }
            }
            match self.side_support(r, side_a).next() {
                Some(col) => pivots.push((r, col)),
                None => return true,
            }
        }
        false
    }
}

pub fn canonicalize(hz: &BitMatrix, part: &Bipartition) -> Result<CanonicalBlocks> {
    check_width(hz, part)?;
    let n = hz.cols();
    let mut w = Work {
        rows: hz.row_iter().collect(),
        slot: vec![Slot::Open; hz.rows()],
        in_a: part.mask(),
        alive: vec![true; n],
        used_a: Vec::new(),
        used_b: Vec::new(),
    };
    loop {
        w.strip_one_sided();
        if w.eliminate_side(true) || w.eliminate_side(false) {
            continue;
        }
        break;
    }

    let boundary = w.open();
    let deleted_a: Vec<usize> = w.used_a.iter().map(|&(_, q)| q).collect();
    let deleted_b: Vec<usize> = w.used_b.iter().map(|&(_, q)| q).collect();
    let rest_a: Vec<usize> = (0..n).filter(|&q| w.alive[q] && w.in_a[q]).collect();
    let rest_b: Vec<usize> = (0..n).filter(|&q| w.alive[q] && !w.in_a[q]).collect();

    let rows_a: Vec<usize> = w.used_a.iter().map(|&(r, _)| r).collect();
    let rows_b: Vec<usize> = w.used_b.iter().map(|&(r, _)| r).collect();
    let row_perm: Vec<usize> = rows_a.iter().chain(&boundary).chain(&rows_b).copied().collect();
    let col_perm: Vec<usize> = deleted_a
        .iter()
        .chain(&rest_a)
        .chain(&rest_b)
        .chain(&deleted_b)
        .copied()
        .collect();

    let reduced = BitMatrix::from_bitvecs(n, &w.rows)?;
    let block = |rows: &[usize], cols: &[usize]| reduced.select_rows(rows).select_columns(cols);
    Ok(CanonicalBlocks {
        wa: block(&boundary, &rest_a),
        wb: block(&boundary, &rest_b),
        tilde_wa: block(&rows_a, &rest_a),
        tilde_wb: block(&rows_b, &rest_b),
        matrix: block(&row_perm, &col_perm),
        a_width: deleted_a.len() + rest_a.len(),
        row_perm,
        col_perm,
        deleted_a,
        deleted_b,
    })
}
