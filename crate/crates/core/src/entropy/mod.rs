//! Entanglement entropy of code states under a bipartition of the qubits.
//!
//! All entry points work on the Z-check matrix alone: the code state is the
//! uniform superposition over `{z : H z = 0}`, with `H` the checks plus any
//! appended logical rows.

mod canonical;
mod oracle;

pub use canonical::{canonicalize, CanonicalBlocks};
pub use oracle::{dense_oracle, Spectrum, ORACLE_MAX_QUBITS};

use crate::codes::{logical_z_operators, CssCode};
use crate::error::{Error, Result};
use crate::gf2::{nullspace_basis, rank, BitMatrix, RowSpace};

/// A split of `n` qubits into a subsystem `A` and its complement `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    n: usize,
    a: Vec<usize>,
}

impl Bipartition {
    /// Indices may come in any order; duplicates and indices `≥ n` are rejected.
    pub fn new(n: usize, a: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut a: Vec<usize> = a.into_iter().collect();
        a.sort_unstable();
        if let Some(w) = a.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("qubit {} listed twice", w[0])));
        }
        if let Some(&q) = a.last().filter(|&&q| q >= n) {
            return Err(Error::param(format!("qubit {q} out of range for n={n}")));
        }
        Ok(Self { n, a })
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self {
            n: mask.len(),
            a: (0..mask.len()).filter(|&q| mask[q]).collect(),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, a: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_a(&self) -> usize {
        self.a.len()
    }

    /// Qubits of `A`, strictly increasing.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// Qubits of `B`, strictly increasing.
    pub fn b(&self) -> Vec<usize> {
        let mask = self.mask();
        (0..self.n).filter(|&q| !mask[q]).collect()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.a.binary_search(&q).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &q in &self.a {
            m[q] = true;
        }
        m
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            a: self.b(),
        }
    }
}

/// Logical Z operators whose eigenvalues are fixed in the code state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalConstraint {
    rows: BitMatrix,
}

impl LogicalConstraint {
    /// Checks that every row commutes with all X checks and is not itself a
    /// Z stabilizer.
    pub fn new(code: &CssCode, rows: BitMatrix) -> Result<Self> {
        if rows.cols() != code.n() {
            return Err(Error::dim(format!(
                "logical rows have width {}, code has {} qubits",
                rows.cols(),
                code.n()
            )));
        }
        let clash = code.hx().mul_transpose(&rows)?;
        if let Some(r) = (0..rows.rows()).find(|&r| (0..clash.rows()).any(|x| clash.get(x, r))) {
            return Err(Error::param(format!("logical row {r} anticommutes with an X check")));
        }
        let stab = RowSpace::new(code.hz());
        for r in 0..rows.rows() {
            if stab.contains(&rows.row(r))? {
                return Err(Error::param(format!("logical row {r} is a Z stabilizer")));
            }
        }
        Ok(Self { rows })
    }

    /// All `k` logical Z operators of the code.
    pub fn all(code: &CssCode) -> Self {
        Self {
            rows: logical_z_operators(code),
        }
    }

    pub fn rows(&self) -> &BitMatrix {
        &self.rows
    }
}

fn check_width(h: &BitMatrix, part: &Bipartition) -> Result<()> {
    if h.cols() != part.n() {
        return Err(Error::dim(format!(
            "matrix has {} columns, bipartition covers {} qubits",
            h.cols(),
            part.n()
        )));
    }
    Ok(())
}

pub(crate) fn with_constraints(hz: &BitMatrix, constraints: Option<&LogicalConstraint>) -> Result<BitMatrix> {
    match constraints {
        None => Ok(hz.clone()),
        Some(c) => hz.vstack(c.rows()),
    }
}

/// `rank(H_A) + rank(H_B) − rank(H)`, with `H` the checks plus constraint rows
/// and `H_A`, `H_B` its column restrictions.
pub fn entropy_rank(
    hz: &BitMatrix,
    part: &Bipartition,
    constraints: Option<&LogicalConstraint>,
) -> Result<usize> {
    check_width(hz, part)?;
    let h = with_constraints(hz, constraints)?;
    Ok(rank_split(&h, part, rank(&h)))
}

pub(crate) fn rank_split(h: &BitMatrix, part: &Bipartition, rank_h: usize) -> usize {
    if part.n_a() == 0 || part.n_a() == part.n() {
        return 0;
    }
    let ra = rank(&h.select_columns(part.a()));
    let rb = rank(&h.select_columns(&part.b()));
    ra + rb - rank_h
}

/// `dim C − dim C_A − dim C_B`, where `C = ker H` and `C_A`, `C_B` are the
/// codewords supported entirely inside `A` or `B`.
pub fn entropy_codespace_identity(hz: &BitMatrix, part: &Bipartition) -> Result<usize> {
    check_width(hz, part)?;
    let dim_c = nullspace_basis(hz).rows();
    let dim_a = nullspace_basis(&hz.select_columns(part.a())).rows();
    let dim_b = nullspace_basis(&hz.select_columns(&part.b())).rows();
    Ok(dim_c - dim_a - dim_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_toric, hamming_css, random_css, ToricLayout, ToricParams};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn toric(d: usize) -> (CssCode, ToricLayout) {
        let p = ToricParams::new(d).unwrap();
        (build_toric(p).unwrap(), ToricLayout::new(p))
    }

    #[test]
    fn bipartition_validation() {
        let p = Bipartition::new(5, [3, 0]).unwrap();
        assert_eq!(p.a(), &[0, 3]);
        assert_eq!(p.b(), vec![1, 2, 4]);
        assert!(Bipartition::new(5, [1, 1]).is_err());
        assert!(Bipartition::new(5, [5]).is_err());
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn single_qubit_and_trivial_subsystems() {
        let (code, _) = toric(3);
        let n = code.n();
        let one = Bipartition::new(n, [0]).unwrap();
        assert_eq!(entropy_rank(code.hz(), &one, None).unwrap(), 1);
        assert_eq!(entropy_codespace_identity(code.hz(), &one).unwrap(), 1);
        for part in [Bipartition::empty(n), Bipartition::new(n, 0..n).unwrap()] {
            assert_eq!(entropy_rank(code.hz(), &part, None).unwrap(), 0);
            assert_eq!(entropy_codespace_identity(code.hz(), &part).unwrap(), 0);
        }
    }

    #[test]
    fn width_mismatch() {
        let (code, _) = toric(3);
        let part = Bipartition::new(5, [0]).unwrap();
        assert!(matches!(entropy_rank(code.hz(), &part, None), Err(Error::Dimension(_))));
        assert!(entropy_codespace_identity(code.hz(), &part).is_err());
    }

    #[test]
    fn constraint_validation() {
        let (code, lay) = toric(3);
        assert!(LogicalConstraint::new(&code, lay.logical_z()).is_ok());
        let stab = code.hz().select_rows(&[0]);
        assert!(LogicalConstraint::new(&code, stab).is_err());
        let single = BitMatrix::from_bitvecs(code.n(), &[crate::gf2::BitVec::from_support(code.n(), &[0])]).unwrap();
        assert!(LogicalConstraint::new(&code, single).is_err());
        assert_eq!(LogicalConstraint::all(&code).rows().rows(), 2);
    }

    #[test]
    fn identity_route_matches_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let code = random_css(6, 2, 2, &mut rng);
            let mask: Vec<bool> = (0..6).map(|_| rand::Rng::random_bool(&mut rng, 0.5)).collect();
            let part = Bipartition::from_mask(&mask);
            assert_eq!(
                entropy_codespace_identity(code.hz(), &part).unwrap(),
                entropy_rank(code.hz(), &part, None).unwrap()
            );
        }
    }

    #[test]
    fn logical_basis_choice_is_irrelevant() {
        let (code, lay) = toric(2);
        let fixed = LogicalConstraint::new(&code, lay.logical_z()).unwrap();
        let found = LogicalConstraint::all(&code);
        for mask in 0u32..256 {
            let part = Bipartition::from_mask(&(0..8).map(|q| mask >> q & 1 == 1).collect::<Vec<_>>());
            assert_eq!(
                entropy_rank(code.hz(), &part, Some(&fixed)).unwrap(),
                entropy_rank(code.hz(), &part, Some(&found)).unwrap()
            );
        }
    }

    #[test]
    fn hamming_bound_holds() {
        let code = hamming_css();
        for mask in 0u32..128 {
            let part = Bipartition::from_mask(&(0..7).map(|q| mask >> q & 1 == 1).collect::<Vec<_>>());
            let s = entropy_rank(code.hz(), &part, None).unwrap();
            assert!(s <= part.n_a().min(7 - part.n_a()));
        }
    }

    proptest! {
        #[test]
        fn symmetric_and_bounded(seed in any::<u64>(), n in 2usize..12, bits in any::<u16>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let code = random_css(n, n / 3, n / 3, &mut rng);
            let part = Bipartition::from_mask(&(0..n).map(|q| bits >> q & 1 == 1).collect::<Vec<_>>());
            let s = entropy_rank(code.hz(), &part, None).unwrap();
            prop_assert_eq!(s, entropy_rank(code.hz(), &part.complement(), None).unwrap());
            prop_assert!(s <= part.n_a().min(n - part.n_a()));
            prop_assert_eq!(s, entropy_codespace_identity(code.hz(), &part).unwrap());
        }
    }
}
