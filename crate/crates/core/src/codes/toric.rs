//! Toric code on a periodic d×d square lattice, qubits on edges.

use super::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToricParams {
    d: usize,
}

impl ToricParams {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::param(format!("toric lattice side must be at least 2, got {d}")));
        }
        Ok(Self { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// Edge and stabilizer indexing for the toric lattice.
///
/// Horizontal edge `(i, j)` is qubit `i·d + j`, vertical edge `(i, j)` is
/// qubit `d² + i·d + j`; all coordinates wrap. Plaquette `(i, j)` is hz row
/// `i·d + j` and touches `h(i,j), h(i+1,j), v(i,j), v(i,j+1)`. Vertex `(i, j)`
/// is hx row `i·d + j` and touches `h(i,j), h(i,j−1), v(i,j), v(i−1,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ToricLayout {
    d: usize,
}

impl ToricLayout {
    pub fn new(p: ToricParams) -> Self {
        Self { d: p.d }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        2 * self.d * self.d
    }

    fn wrap(&self, x: isize) -> usize {
        x.rem_euclid(self.d as isize) as usize
    }

    pub fn h(&self, i: isize, j: isize) -> usize {
        self.wrap(i) * self.d + self.wrap(j)
    }

    pub fn v(&self, i: isize, j: isize) -> usize {
        self.d * self.d + self.wrap(i) * self.d + self.wrap(j)
    }

    pub fn plaquette(&self, i: isize, j: isize) -> [usize; 4] {
        [self.h(i, j), self.h(i + 1, j), self.v(i, j), self.v(i, j + 1)]
    }

    pub fn vertex(&self, i: isize, j: isize) -> [usize; 4] {
        [self.h(i, j), self.h(i, j - 1), self.v(i, j), self.v(i - 1, j)]
    }

    /// The two Z-type logical operators: a row of horizontal edges and a
    /// column of vertical edges.
    pub fn logical_z(&self) -> BitMatrix {
        let d = self.d as isize;
        let row: Vec<usize> = (0..d).map(|j| self.h(0, j)).collect();
        let col: Vec<usize> = (0..d).map(|i| self.v(i, 0)).collect();
        BitMatrix::from_bitvecs(
            self.n(),
            &[BitVec::from_support(self.n(), &row), BitVec::from_support(self.n(), &col)],
        )
        .expect("widths agree")
    }
}

pub fn build_toric(p: ToricParams) -> Result<CssCode> {
    let lay = ToricLayout::new(p);
    let d = p.d;
    let mut hz = BitMatrix::zeros(d * d, lay.n());
    let mut hx = BitMatrix::zeros(d * d, lay.n());
    for i in 0..d {
        for j in 0..d {
            let (ii, jj) = (i as isize, j as isize);
            for q in lay.plaquette(ii, jj) {
                hz.set(i * d + j, q, true);
            }
            for q in lay.vertex(ii, jj) {
                hx.set(i * d + j, q, true);
            }
        }
    }
    CssCode::new(format!("toric-{d}"), hx, hz)
}
