//! Check matrices with column weight at most two, read as graphs whose edges
//! are qubits.

mod duplicate;

pub use duplicate::{duplicate_columns, duplicate_qubits, Duplicated};

use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;

use crate::entropy::Bipartition;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub qubit: usize,
    /// Set on every edge of a qubit after the first one.
    pub duplicate: bool,
}

/// Multigraph with qubit-labelled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.u >= vertex_count || e.v >= vertex_count) {
            return Err(Error::param(format!(
                "edge ({}, {}) refers to a vertex beyond {vertex_count}",
                e.u, e.v
            )));
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn all_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).collect()
    }

    /// `vertices <count>` followed by one `u v qubit [dup]` line per edge.
    pub fn to_export_string(&self) -> String {
        let mut s = format!("vertices {}\n", self.vertex_count);
        for e in &self.edges {
            let _ = write!(s, "{} {} {}", e.u, e.v, e.qubit);
            s.push_str(if e.duplicate { " dup\n" } else { "\n" });
        }
        s
    }

    fn touched(&self, subset: &[usize]) -> Vec<bool> {
        let mut t = vec![false; self.vertex_count];
        for &i in subset {
            t[self.edges[i].u] = true;
            t[self.edges[i].v] = true;
        }
        t
    }
}

/// Interprets `m` as an incidence matrix: one vertex per row and one edge per
/// column, labelled by the column index.
///
/// A weight-one column is attached to a single extra ground vertex shared by
/// all such columns; a weight-zero column becomes an edge between two fresh
/// vertices.
pub fn incidence_graph(m: &BitMatrix) -> Result<LabeledGraph> {
    let labels: Vec<usize> = (0..m.cols()).collect();
    incidence_graph_labeled(m, &labels, &vec![false; m.cols()])
}

pub(crate) fn incidence_graph_labeled(
    m: &BitMatrix,
    labels: &[usize],
    duplicate: &[bool],
) -> Result<LabeledGraph> {
    let mut vertex_count = m.rows();
    let mut ground = None;
    let mut edges = Vec::with_capacity(m.cols());
    for c in 0..m.cols() {
        let support = m.col_support(c);
        let (u, v) = match support[..] {
            [u, v] => (u, v),
            [u] => {
                let g = *ground.get_or_insert_with(|| {
                    vertex_count += 1;
                    vertex_count - 1
                });
                (u, g)
            }
            [] => {
                vertex_count += 2;
                (vertex_count - 2, vertex_count - 1)
            }
            _ => {
                return Err(Error::Weight {
                    column: c,
                    weight: support.len(),
                })
            }
        };
        edges.push(Edge {
            u,
            v,
            qubit: labels[c],
            duplicate: duplicate[c],
        });
    }
    LabeledGraph::new(vertex_count, edges)
}

fn union_find(g: &LabeledGraph, subset: &[usize]) -> UnionFind<usize> {
    let mut uf = UnionFind::new(g.vertex_count);
    for &i in subset {
        uf.union(g.edges[i].u, g.edges[i].v);
    }
    uf
}

/// Components of the subgraph formed by `subset`; vertices that no edge of
/// the subset touches are ignored.
pub fn connected_components(g: &LabeledGraph, subset: &[usize]) -> usize {
    let uf = union_find(g, subset);
    let touched = g.touched(subset);
    (0..g.vertex_count)
        .filter(|&v| touched[v] && uf.find(v) == v)
        .count()
}

/// A maximal acyclic subset of `subset`, keeping edges in the given order
/// whenever they join two components.
pub fn spanning_forest(g: &LabeledGraph, subset: &[usize]) -> Vec<usize> {
    let mut uf = UnionFind::new(g.vertex_count);
    subset
        .iter()
        .copied()
        .filter(|&i| uf.union(g.edges[i].u, g.edges[i].v))
        .collect()
}

/// Dimension of the cycle space of `subset`: `|E| − |V| + K`.
pub fn cyclomatic_number(g: &LabeledGraph, subset: &[usize]) -> usize {
    let v = g.touched(subset).iter().filter(|&&t| t).count();
    subset.len() + connected_components(g, subset) - v
}

/// Edges assigned to subsystem `A`. All edges of one qubit share a side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPartition {
    a_edges: Vec<usize>,
}

impl GraphPartition {
    pub fn new(g: &LabeledGraph, a_edges: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut a_edges: Vec<usize> = a_edges.into_iter().collect();
        a_edges.sort_unstable();
        a_edges.dedup();
        if let Some(&i) = a_edges.last().filter(|&&i| i >= g.edge_count()) {
            return Err(Error::param(format!("edge {i} out of range")));
        }
        let mut side = std::collections::HashMap::new();
        let in_a = membership(g.edge_count(), &a_edges);
        for (i, e) in g.edges.iter().enumerate() {
            if *side.entry(e.qubit).or_insert(in_a[i]) != in_a[i] {
                return Err(Error::param(format!(
                    "copies of qubit {} are split across the partition",
                    e.qubit
                )));
            }
        }
        Ok(Self { a_edges })
    }

    /// Puts every edge whose qubit lies in `A` on the `A` side.
    pub fn from_bipartition(g: &LabeledGraph, part: &Bipartition) -> Self {
        Self {
            a_edges: (0..g.edge_count())
                .filter(|&i| part.contains(g.edges[i].qubit))
                .collect(),
        }
    }

    pub fn a_edges(&self) -> &[usize] {
        &self.a_edges
    }

    pub fn b_edges(&self, g: &LabeledGraph) -> Vec<usize> {
        let in_a = membership(g.edge_count(), &self.a_edges);
        (0..g.edge_count()).filter(|&i| !in_a[i]).collect()
    }
}

fn membership(len: usize, items: &[usize]) -> Vec<bool> {
    let mut m = vec![false; len];
    for &i in items {
        m[i] = true;
    }
    m
}

/// Vertices touched by both an `A` edge and a `B` edge.
pub fn shared_vertices(g: &LabeledGraph, part: &GraphPartition) -> usize {
    let ta = g.touched(part.a_edges());
    let tb = g.touched(&part.b_edges(g));
    ta.iter().zip(&tb).filter(|(a, b)| **a && **b).count()
}

/// `|V_{A∩B}| − K_A − K_B + K`.
pub fn entropy_graph(g: &LabeledGraph, part: &GraphPartition) -> usize {
    let a = part.a_edges();
    let b = part.b_edges(g);
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let whole = connected_components(g, &g.all_edges());
    shared_vertices(g, part) + whole - connected_components(g, a) - connected_components(g, &b)
}
