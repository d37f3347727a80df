//! Brute-force reduced density matrix spectrum for small codes.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{check_width, with_constraints, Bipartition, LogicalConstraint};
use crate::codes::CssCode;
use crate::error::{Error, Result};

/// Largest qubit count accepted by [`dense_oracle`].
pub const ORACLE_MAX_QUBITS: usize = 14;

/// Eigenvalues of a reduced density matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> f64 {
        self.eigenvalues
            .iter()
            .filter(|&&l| l > 1e-12)
            .map(|&l| -l * l.log2())
            .sum()
    }
}

fn gather(z: u32, positions: &[usize]) -> usize {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &q)| acc | (((z >> q) & 1) as usize) << i)
}

/// Spectrum of `ρ_A` for the uniform superposition over all `z` with
/// `H z = 0`, found by enumerating all `2^n` basis states.
pub fn dense_oracle(
    code: &CssCode,
    part: &Bipartition,
    constraints: Option<&LogicalConstraint>,
) -> Result<Spectrum> {
    let n = code.n();
    if n > ORACLE_MAX_QUBITS {
        return Err(Error::Size {
            n,
            max: ORACLE_MAX_QUBITS,
        });
    }
    check_width(code.hz(), part)?;
    let h = with_constraints(code.hz(), constraints)?;
    let checks: Vec<u32> = (0..h.rows())
        .map(|r| h.row_support(r).iter().fold(0u32, |m, &q| m | 1 << q))
        .collect();
    let codewords: Vec<u32> = (0u32..1 << n)
        .filter(|&z| checks.iter().all(|&c| (c & z).count_ones() % 2 == 0))
        .collect();

    let a = part.a().to_vec();
    let b = part.b();
    // Diagonalize on the smaller side.
    let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    let amp = 1.0 / (codewords.len() as f64).sqrt();
    let mut psi = DMatrix::<f64>::zeros(1 << small.len(), 1 << large.len());
    for &z in &codewords {
        psi[(gather(z, small), gather(z, large))] += amp;
    }
    let rho = &psi * psi.transpose();
    let mut eigenvalues: Vec<f64> = SymmetricEigen::new(rho)
        .eigenvalues
        .iter()
        .map(|&l| l.max(0.0))
        .collect();
    eigenvalues.resize(1 << a.len(), 0.0);
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues })
}
