//! Classification of single-qubit transfers from `B` to `A` on 4-regular
//! toric-style graphs.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{connected_components, GraphPartition, LabeledGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransferRegime {
    /// `A` small, `B` connected and still connected after the transfer.
    SmallA,
    /// `A` large and connected.
    LargeA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransferClass {
    I,
    II,
    III,
    IV,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TransferCase {
    pub class: TransferClass,
    /// 1 to 14, numbered within the regime.
    pub case_id: u8,
    pub predicted_delta_i: i32,
    pub regime: TransferRegime,
}

// Endpoint-degree pairs in table order, with the predicted change per class.
const SMALL_MERGE: [((usize, usize), i32); 5] = [((1, 1), 0), ((1, 2), 0), ((2, 2), 0), ((1, 3), 1), ((2, 3), 1)];
const SMALL_CYCLE: [i32; 5] = [1, 1, 1, 2, 2];
const LARGE_BRIDGE: [((usize, usize), i32); 5] = [((2, 2), 2), ((2, 3), 2), ((2, 4), 1), ((3, 4), 1), ((4, 4), 1)];
const LARGE_CYCLE: [i32; 5] = [1, 1, 0, 0, 0];

fn case(class: TransferClass, case_id: u8, predicted_delta_i: i32, regime: TransferRegime) -> TransferCase {
    TransferCase {
        class,
        case_id,
        predicted_delta_i,
        regime,
    }
}

fn unlisted(du: usize, dv: usize) -> Error {
    Error::Classification(format!("endpoint degrees ({du}, {dv}) are not a tabulated case"))
}

/// Predicts the change of `n_A − S_A` when the edge of `qubit` moves from `B`
/// to `A`, from the degrees of its endpoints and the component structure.
///
/// Fails when the graph is not 4-regular, when the qubit is not a single
/// `B` edge, or when the regime's preconditions do not hold.
pub fn classify_transfer(
    g: &LabeledGraph,
    part: &GraphPartition,
    qubit: usize,
    regime: TransferRegime,
) -> Result<TransferCase> {
    let mut degree = vec![0usize; g.vertex_count()];
    for e in g.edges() {
        if e.u == e.v {
            return Err(Error::Classification("graph has a self-loop".into()));
        }
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    if degree.iter().any(|&d| d != 4) {
        return Err(Error::Classification("graph is not 4-regular".into()));
    }
    let matches: Vec<usize> = (0..g.edge_count()).filter(|&i| g.edges()[i].qubit == qubit).collect();
    let [edge] = matches[..] else {
        return Err(Error::Classification(format!(
            "qubit {qubit} labels {} edges, expected one",
            matches.len()
        )));
    };
    let a = part.a_edges();
    if a.binary_search(&edge).is_ok() {
        return Err(Error::Classification(format!("qubit {qubit} is already in A")));
    }
    let b = part.b_edges(g);
    let b_rest: Vec<usize> = b.iter().copied().filter(|&i| i != edge).collect();
    let (u, v) = (g.edges()[edge].u, g.edges()[edge].v);
    let incident = |set: &[usize], x: usize| {
        set.iter()
            .filter(|&&i| g.edges()[i].u == x || g.edges()[i].v == x)
            .count()
    };

    match regime {
        TransferRegime::SmallA => {
            if connected_components(g, &b) != 1 || connected_components(g, &b_rest) != 1 {
                return Err(Error::Classification(
                    "B must stay a single component".into(),
                ));
            }
            let (du, dv) = (incident(a, u), incident(a, v));
            let (lo, hi) = (du.min(dv), du.max(dv));
            if hi == 0 {
                return Ok(case(TransferClass::I, 1, 0, regime));
            }
            if lo == 0 {
                let delta = if hi == 3 { 1 } else { 0 };
                return Ok(case(TransferClass::II, 1 + hi as u8, delta, regime));
            }
            let idx = SMALL_MERGE
                .iter()
                .position(|&(p, _)| p == (lo, hi))
                .ok_or_else(|| unlisted(du, dv))?;
            let mut uf = UnionFind::new(g.vertex_count());
            for &i in a {
                uf.union(g.edges()[i].u, g.edges()[i].v);
            }
            if uf.equiv(u, v) {
                Ok(case(TransferClass::IV, 10 + idx as u8, SMALL_CYCLE[idx], regime))
            } else {
                Ok(case(TransferClass::III, 5 + idx as u8, SMALL_MERGE[idx].1, regime))
            }
        }
        TransferRegime::LargeA => {
            if connected_components(g, a) != 1 {
                return Err(Error::Classification("A must be a single component".into()));
            }
            let (du, dv) = (incident(&b, u), incident(&b, v));
            let (lo, hi) = (du.min(dv), du.max(dv));
            if (lo, hi) == (1, 1) {
                return Ok(case(TransferClass::I, 1, 2, regime));
            }
            if lo == 1 {
                let delta = if hi == 4 { 1 } else { 2 };
                return Ok(case(TransferClass::II, hi as u8, delta, regime));
            }
            let idx = LARGE_BRIDGE
                .iter()
                .position(|&(p, _)| p == (lo, hi))
                .ok_or_else(|| unlisted(du, dv))?;
            let mut uf = UnionFind::new(g.vertex_count());
            for &i in &b_rest {
                uf.union(g.edges()[i].u, g.edges()[i].v);
            }
            if uf.equiv(u, v) {
                Ok(case(TransferClass::IV, 10 + idx as u8, LARGE_CYCLE[idx], regime))
            } else {
                Ok(case(TransferClass::III, 5 + idx as u8, LARGE_BRIDGE[idx].1, regime))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_toric, ToricLayout, ToricParams};
    use crate::entropy::{entropy_rank, Bipartition};
    use crate::graph::incidence_graph;

    struct Setup {
        hz: crate::gf2::BitMatrix,
        lay: ToricLayout,
        g: LabeledGraph,
    }

    fn setup(d: usize) -> Setup {
        let p = ToricParams::new(d).unwrap();
        let code = build_toric(p).unwrap();
        let g = incidence_graph(code.hz()).unwrap();
        Setup {
            hz: code.hz().clone(),
            lay: ToricLayout::new(p),
            g,
        }
    }

    fn measured(s: &Setup, a: &[usize], q: usize) -> i32 {
        let n = s.hz.cols();
        let before = Bipartition::new(n, a.iter().copied()).unwrap();
        let after = Bipartition::new(n, a.iter().copied().chain([q])).unwrap();
        let s0 = entropy_rank(&s.hz, &before, None).unwrap() as i32;
        let s1 = entropy_rank(&s.hz, &after, None).unwrap() as i32;
        1 - (s1 - s0)
    }

    fn classify(s: &Setup, a: &[usize], q: usize, regime: TransferRegime) -> Result<TransferCase> {
        let part = GraphPartition::new(&s.g, a.iter().copied()).unwrap();
        classify_transfer(&s.g, &part, q, regime)
    }

    #[test]
    fn isolated_new_edge_is_class_one() {
        let s = setup(6);
        let a = [s.lay.h(0, 0)];
        let q = s.lay.h(3, 3);
        let c = classify(&s, &a, q, TransferRegime::SmallA).unwrap();
        assert_eq!((c.class, c.case_id, c.predicted_delta_i), (TransferClass::I, 1, 0));
        assert_eq!(measured(&s, &a, q), 0);
    }

    #[test]
    fn closing_a_cycle_is_class_four() {
        let s = setup(6);
        // Three sides of a vertex star; the fourth closes a dual cycle.
        let star = s.lay.vertex(2, 2);
        let a = &star[..3];
        let c = classify(&s, a, star[3], TransferRegime::SmallA).unwrap();
        assert_eq!((c.class, c.case_id, c.predicted_delta_i), (TransferClass::IV, 10, 1));
        assert_eq!(measured(&s, a, star[3]), 1);
    }

    #[test]
    fn isolated_b_edge_in_large_regime() {
        let s = setup(6);
        let q = s.lay.h(2, 2);
        let a: Vec<usize> = (0..s.hz.cols()).filter(|&x| x != q).collect();
        let c = classify(&s, &a, q, TransferRegime::LargeA).unwrap();
        assert_eq!((c.class, c.case_id, c.predicted_delta_i), (TransferClass::I, 1, 2));
        assert_eq!(measured(&s, &a, q), 2);
    }

    #[test]
    fn preconditions_enforced() {
        let s = setup(6);
        let a = [s.lay.h(0, 0)];
        assert!(classify(&s, &a, s.lay.h(0, 0), TransferRegime::SmallA).is_err());
        // A with two components is not a large-regime configuration.
        let a = [s.lay.h(0, 0), s.lay.h(3, 3)];
        assert!(classify(&s, &a, s.lay.h(1, 1), TransferRegime::LargeA).is_err());

        let ring = crate::gf2::BitMatrix::from_rows(3, &[[1u8, 0, 1], [1, 1, 0], [0, 1, 1]]).unwrap();
        let g = incidence_graph(&ring).unwrap();
        let part = GraphPartition::new(&g, []).unwrap();
        assert!(classify_transfer(&g, &part, 0, TransferRegime::SmallA).is_err());
    }
}
