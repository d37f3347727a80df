//! Splitting heavy columns so that every column has weight at most two.

use super::{incidence_graph_labeled, GraphPartition, LabeledGraph};
use crate::entropy::{Bipartition, CanonicalBlocks};
use crate::error::Result;
use crate::gf2::BitMatrix;

/// A column-split matrix together with the qubit behind each column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Duplicated {
    pub matrix: BitMatrix,
    pub qubit_of_column: Vec<usize>,
    /// True for the columns split off an original column.
    pub is_duplicate: Vec<bool>,
}

impl Duplicated {
    pub fn graph(&self) -> Result<LabeledGraph> {
        incidence_graph_labeled(&self.matrix, &self.qubit_of_column, &self.is_duplicate)
    }

    /// Edge `i` of [`Duplicated::graph`] is column `i`, so the partition
    /// follows the qubit labels.
    pub fn partition(&self, g: &LabeledGraph, part: &Bipartition) -> GraphPartition {
        GraphPartition::from_bipartition(g, part)
    }
}

/// Peels the two lowest-row ones off every column of weight above two into a
/// new column placed right after it, until each piece has weight at most two.
/// Panics unless `labels` has one entry per column.
pub fn duplicate_columns(m: &BitMatrix, labels: &[usize]) -> Duplicated {
    let mut columns: Vec<(Vec<usize>, usize, bool)> = Vec::with_capacity(m.cols());
    assert_eq!(labels.len(), m.cols(), "one label per column");
    for (c, &label) in labels.iter().enumerate() {
        let mut rest = m.col_support(c);
        let mut peeled = Vec::new();
        while rest.len() > 2 {
            peeled.push(rest.drain(..2).collect::<Vec<_>>());
        }
        columns.push((rest, label, false));
        columns.extend(peeled.into_iter().map(|p| (p, label, true)));
    }
    let mut matrix = BitMatrix::zeros(m.rows(), columns.len());
    for (c, (support, _, _)) in columns.iter().enumerate() {
        for &r in support {
            matrix.set(r, c, true);
        }
    }
    Duplicated {
        matrix,
        qubit_of_column: columns.iter().map(|c| c.1).collect(),
        is_duplicate: columns.iter().map(|c| c.2).collect(),
    }
}

/// Column splitting applied to the assembled canonical matrix. The canonical
/// form keeps the nonzero rows of each side independent, so the split does not
/// change the entropy.
pub fn duplicate_qubits(blocks: &CanonicalBlocks) -> Duplicated {
    duplicate_columns(blocks.matrix(), &blocks.col_perm)
}
