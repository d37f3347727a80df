#![allow(dead_code)]

use css_entropy::codes::{build_bb, build_qc, build_toric, BbParams, CssCode, QcParams, ToricLayout, ToricParams};
use css_entropy::entropy::{entropy_rank, Bipartition, LogicalConstraint};
use css_entropy::graph::{incidence_graph, GraphPartition};
use css_entropy::sampling::{
    classify_transfer, grown_subsystem_sequence_with, random_subsystem_with, seeded_rng, TransferRegime,
};
use rand::Rng;

pub fn toric(d: usize) -> (CssCode, ToricLayout) {
    let p = ToricParams::new(d).unwrap();
    (build_toric(p).unwrap(), ToricLayout::new(p))
}

/// Both logical Z rows of the layout: the state `|00⟩`.
pub fn logical_zero(code: &CssCode, lay: &ToricLayout) -> LogicalConstraint {
    LogicalConstraint::new(code, lay.logical_z()).unwrap()
}

fn i(x: usize) -> isize {
    x as isize
}

/// Named toric subsystems with their expected entropy in `|00⟩`.
pub fn edge_cases(lay: &ToricLayout) -> Vec<(&'static str, Vec<usize>, usize)> {
    let d = lay.d();
    let row: Vec<usize> = (0..d).map(|j| lay.h(0, i(j))).collect();
    let ladder: Vec<usize> = (0..d).map(|r| lay.h(i(r), 0)).collect();
    let rungs: Vec<usize> = (0..d).map(|j| lay.v(0, i(j))).collect();
    let vertical: Vec<usize> = (0..d * d).map(|x| d * d + x).collect();
    vec![
        ("single qubit", vec![lay.h(0, 0)], 1),
        ("adjacent pair", vec![lay.h(0, 0), lay.v(0, 0)], 2),
        ("chain", row.clone(), d - 1),
        ("ladder", ladder, d),
        ("cross", row.into_iter().chain(rungs).collect(), 2 * d - 1),
        ("vertical", vertical, (d - 1) * (d - 1)),
    ]
}

/// Every edge of a `w × h` block of plaquettes and the number of plaquettes
/// sharing an edge with it from outside.
pub fn rectangle(lay: &ToricLayout, w: usize, h: usize) -> (Vec<usize>, usize) {
    let mut a: Vec<usize> = (0..h)
        .flat_map(|r| (0..w).flat_map(move |c| lay.plaquette(i(r), i(c))))
        .collect();
    a.sort_unstable();
    a.dedup();
    (a, 2 * (w + h))
}

/// Five plaquette-to-plaquette steps along one row of an 8×8 torus.
pub fn dual_path(lay: &ToricLayout) -> Vec<usize> {
    (1..=5).map(|j| lay.v(0, j)).collect()
}

pub fn entropy_with(code: &CssCode, c: Option<&LogicalConstraint>, a: &[usize]) -> usize {
    let part = Bipartition::new(code.n(), a.iter().copied()).unwrap();
    entropy_rank(code.hz(), &part, c).unwrap()
}

pub fn random_mask<R: Rng>(n: usize, rng: &mut R) -> Bipartition {
    let p = rng.random_range(0.05..0.95);
    Bipartition::from_mask(&(0..n).map(|_| rng.random_bool(p)).collect::<Vec<_>>())
}

pub type BbRow = ((usize, usize, [usize; 6]), (usize, usize));

pub const BB_TABLE: [BbRow; 7] = [
    ((6, 6, [3, 1, 2, 3, 1, 2]), (72, 12)),
    ((15, 3, [9, 1, 2, 0, 2, 7]), (90, 8)),
    ((9, 6, [3, 1, 2, 3, 1, 2]), (108, 8)),
    ((12, 6, [3, 1, 2, 3, 1, 2]), (144, 12)),
    ((12, 12, [3, 2, 7, 3, 1, 2]), (288, 12)),
    ((30, 6, [9, 1, 2, 3, 25, 26]), (360, 12)),
    ((21, 18, [3, 10, 17, 5, 3, 19]), (756, 16)),
];

pub type QcRow = ((u64, u64, u64), (usize, usize));

pub const QC_TABLE: [QcRow; 10] = [
    ((7, 2, 5), (42, 4)),
    ((13, 3, 2), (78, 4)),
    ((19, 7, 2), (114, 4)),
    ((43, 6, 2), (258, 4)),
    ((97, 35, 2), (582, 4)),
    ((13, 5, 2), (104, 6)),
    ((17, 4, 2), (136, 6)),
    ((29, 12, 2), (232, 6)),
    ((53, 23, 2), (424, 6)),
    ((73, 27, 2), (584, 6)),
];

pub fn bb(row: &BbRow) -> CssCode {
    let (l, m, exps) = row.0;
    build_bb(BbParams::new(l, m, exps).unwrap()).unwrap()
}

pub fn qc_params(row: &QcRow) -> QcParams {
    let (p, sigma, tau) = row.0;
    let r = QcParams::new(p, sigma, tau, 1, 1).unwrap().r();
    QcParams::new(p, sigma, tau, r, r).unwrap()
}

pub fn qc(row: &QcRow) -> CssCode {
    build_qc(qc_params(row)).unwrap()
}

pub const QC_EXAMPLE_C: [[u64; 6]; 3] = [[1, 2, 4, 5, 3, 6], [4, 1, 2, 6, 5, 3], [2, 4, 1, 3, 6, 5]];
pub const QC_EXAMPLE_D: [[u64; 6]; 3] = [[2, 1, 4, 6, 3, 5], [4, 2, 1, 5, 6, 3], [1, 4, 2, 3, 5, 6]];

#[derive(Debug, Default)]
pub struct TransferSurvey {
    pub attempts: usize,
    pub classified: usize,
    pub agreed: usize,
    pub by_case: std::collections::BTreeMap<u8, usize>,
}

/// Draws configurations on the d×d toric graph until `target` transfers are
/// classified in `regime`, comparing each prediction with the rank formula.
/// Small-regime subsystems are grown regions or scattered edges; large-regime
/// ones are complements of those.
pub fn transfer_survey(d: usize, regime: TransferRegime, target: usize, seed: u64) -> TransferSurvey {
    let (code, _) = toric(d);
    let n = code.n();
    let hz = code.hz();
    let g = incidence_graph(hz).unwrap();
    let mut survey = TransferSurvey::default();
    let mut rng = seeded_rng(seed, regime as u64);
    while survey.classified < target && survey.attempts < 50 * target {
        survey.attempts += 1;
        let small = if rng.random_bool(0.5) {
            let seq = grown_subsystem_sequence_with(&code, &mut rng);
            seq[rng.random_range(0..seq.len())].clone()
        } else {
            random_subsystem_with(n, rng.random_range(1..n / 4), &mut rng).unwrap()
        };
        let part = match regime {
            TransferRegime::SmallA => small,
            TransferRegime::LargeA => small.complement(),
        };
        let b = part.b();
        if b.is_empty() {
            continue;
        }
        let q = b[rng.random_range(0..b.len())];
        let gp = GraphPartition::from_bipartition(&g, &part);
        let Ok(case) = classify_transfer(&g, &gp, q, regime) else {
            continue;
        };
        let after = Bipartition::new(n, part.a().iter().copied().chain([q])).unwrap();
        let s0 = entropy_rank(hz, &part, None).unwrap() as i32;
        let s1 = entropy_rank(hz, &after, None).unwrap() as i32;
        survey.classified += 1;
        if 1 - (s1 - s0) == case.predicted_delta_i {
            survey.agreed += 1;
        }
        *survey.by_case.entry(case.case_id).or_insert(0) += 1;
    }
    survey
}
