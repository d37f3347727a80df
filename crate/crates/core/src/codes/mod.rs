//! CSS code families and code-level utilities.

mod bb;
mod io;
mod logical;
mod qc;
mod toric;

use std::collections::BTreeMap;

use rand::Rng;

pub use bb::{build_bb, BbParams};
pub use logical::{estimate_distance_ub, logical_z_operators};
pub use qc::{build_qc, qc_model_matrices, QcParams};
pub use toric::{build_toric, ToricLayout, ToricParams};

use crate::error::{Error, Result};
use crate::gf2::{nullspace_basis, rank, BitMatrix};

/// A CSS code given by its X-type and Z-type check matrices.
///
/// Rows of `hx` / `hz` are stabilizer generators, columns are qubits. The
/// commutation condition `hx·hzᵀ = 0` is not enforced at construction so that
/// broken inputs can still be loaded and reported on by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    name: String,
    hx: BitMatrix,
    hz: BitMatrix,
    k: usize,
}

impl CssCode {
    pub fn new(name: impl Into<String>, hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::dim(format!(
                "hx has {} columns but hz has {}",
                hx.cols(),
                hz.cols()
            )));
        }
        let k = hx.cols().saturating_sub(rank(&hx) + rank(&hz));
        Ok(Self {
            name: name.into(),
            hx,
            hz,
            k,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    /// Number of logical qubits, `n − rank(hx) − rank(hz)`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }
}

/// The [[7,1,3]] Steane code: both check matrices are the 3×7 Hamming matrix.
pub fn hamming_css() -> CssCode {
    let h = BitMatrix::from_rows(
        7,
        &[
            [1u8, 1, 1, 0, 1, 0, 0],
            [1, 1, 0, 1, 0, 1, 0],
            [1, 0, 1, 1, 0, 0, 1],
        ],
    )
    .expect("fixed shape");
    CssCode::new("hamming-7-1-3", h.clone(), h).expect("fixed shape")
}

/// A random CSS code on `n` qubits: `x_rows` uniformly random X checks and
/// `z_rows` Z checks drawn from the kernel of the X checks, so the pair always
/// commutes.
pub fn random_css<R: Rng + ?Sized>(n: usize, x_rows: usize, z_rows: usize, rng: &mut R) -> CssCode {
    let mut hx = BitMatrix::zeros(x_rows, n);
    for r in 0..x_rows {
        for c in 0..n {
            if rng.random_bool(0.5) {
                hx.set(r, c, true);
            }
        }
    }
    let kernel = nullspace_basis(&hx);
    let mut hz = BitMatrix::zeros(z_rows, n);
    for r in 0..z_rows {
        for b in 0..kernel.rows() {
            if rng.random_bool(0.5) {
                for c in kernel.row_support(b) {
                    let cur = hz.get(r, c);
                    hz.set(r, c, !cur);
                }
            }
        }
    }
    CssCode::new(format!("random-{n}"), hx, hz).expect("matching widths")
}

/// Outcome of [`validate`]. Failures are carried, not raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub commutes: bool,
    /// Positions `(x_row, z_row)` with odd overlap.
    pub anticommuting_pairs: Vec<(usize, usize)>,
    pub rank_hx: usize,
    pub rank_hz: usize,
    /// `n − rank(hx) − rank(hz)`, negative when the checks are inconsistent.
    pub k: i64,
    pub hx_row_weights: BTreeMap<usize, usize>,
    pub hx_col_weights: BTreeMap<usize, usize>,
    pub hz_row_weights: BTreeMap<usize, usize>,
    pub hz_col_weights: BTreeMap<usize, usize>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.commutes && self.k >= 0
    }
}

fn histogram(values: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

pub fn validate(code: &CssCode) -> ValidationReport {
    let (hx, hz) = (code.hx(), code.hz());
    let prod = hx.mul_transpose(hz).expect("widths checked at construction");
    let mut anticommuting_pairs = Vec::new();
    for i in 0..prod.rows() {
        for j in prod.row_support(i) {
            anticommuting_pairs.push((i, j));
        }
    }
    let (rank_hx, rank_hz) = (rank(hx), rank(hz));
    ValidationReport {
        commutes: anticommuting_pairs.is_empty(),
        anticommuting_pairs,
        rank_hx,
        rank_hz,
        k: code.n() as i64 - rank_hx as i64 - rank_hz as i64,
        hx_row_weights: histogram((0..hx.rows()).map(|r| hx.row_weight(r))),
        hx_col_weights: histogram((0..hx.cols()).map(|c| hx.col_weight(c))),
        hz_row_weights: histogram((0..hz.rows()).map(|r| hz.row_weight(r))),
        hz_col_weights: histogram((0..hz.cols()).map(|c| hz.col_weight(c))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hamming_code_parameters() {
        let code = hamming_css();
        assert_eq!((code.n(), code.k()), (7, 1));
        assert!(validate(&code).passed());
    }

    #[test]
    fn validate_flags_anticommuting_row() {
        let code = build_toric(ToricParams::new(3).unwrap()).unwrap();
        let report = validate(&code);
        assert!(report.commutes);
        assert_eq!(report.k, 2);
        assert_eq!(report.hz_row_weights, BTreeMap::from([(4, 9)]));

        let mut hz = code.hz().clone();
        hz.push_row(&BitVec::from_support(code.n(), &[0])).unwrap();
        let broken = CssCode::new("broken", code.hx().clone(), hz).unwrap();
        let report = validate(&broken);
        assert!(!report.commutes);
        assert!(!report.passed());
        assert!(report.anticommuting_pairs.iter().all(|&(_, j)| j == 9));
    }

    #[test]
    fn random_codes_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let code = random_css(10, 3, 4, &mut rng);
            assert!(validate(&code).commutes);
        }
    }

    #[test]
    fn width_mismatch_rejected() {
        assert!(CssCode::new("x", BitMatrix::zeros(1, 3), BitMatrix::zeros(1, 4)).is_err());
    }
}
