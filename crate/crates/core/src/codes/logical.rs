//! Logical Z operators and randomized distance upper bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CssCode;
use crate::gf2::{nullspace_basis, BitMatrix, BitVec, RowSpace};

/// Returns `k` independent logical Z operators, one per row.
///
/// Candidates commuting with every X check are paired against candidates
/// commuting with every Z check; each Z candidate that finds an
/// anticommuting partner is a logical operator. The representatives are then
/// shortened greedily by adding hz rows while that lowers the weight.
pub fn logical_z_operators(code: &CssCode) -> BitMatrix {
    let n = code.n();
    let mut zs: Vec<BitVec> = nullspace_basis(code.hx()).row_iter().collect();
    let mut xs: Vec<BitVec> = nullspace_basis(code.hz()).row_iter().collect();
    let stabilizers = RowSpace::new(code.hz());

    let mut logicals = Vec::new();
    let mut i = 0;
    while i < zs.len() {
        let z = zs[i].clone();
        let Some(j) = xs.iter().position(|x| z.dot(x)) else {
            i += 1;
            continue;
        };
        let x = xs.remove(j);
        for other in zs.iter_mut().skip(i + 1) {
            if other.dot(&x) {
                other.xor_assign(&z);
            }
        }
        for other in xs.iter_mut() {
            if other.dot(&z) {
                other.xor_assign(&x);
            }
        }
        if !stabilizers.contains(&z).expect("width n") {
            logicals.push(z);
        }
        i += 1;
    }

    for l in &mut logicals {
        reduce_weight(l, code.hz());
    }
    BitMatrix::from_bitvecs(n, &logicals).expect("width n")
}

fn reduce_weight(v: &mut BitVec, hz: &BitMatrix) {
    loop {
        let mut improved = false;
        for r in 0..hz.rows() {
            let mut w = v.clone();
            w.xor_assign(&hz.row(r));
            if w.weight() < v.weight() {
                *v = w;
                improved = true;
            }
        }
        if !improved {
            return;
        }
    }
}

/// Upper bound on the Z distance: the minimum weight over `samples` random
/// differences of two codewords of `ker(hx)` that are not Z stabilizers.
pub fn estimate_distance_ub(code: &CssCode, samples: usize, seed: u64) -> Option<usize> {
    let kernel = nullspace_basis(code.hx());
    let stabilizers = RowSpace::new(code.hz());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let codeword = |rng: &mut ChaCha8Rng| {
        let mut c = BitVec::zeros(code.n());
        for b in 0..kernel.rows() {
            if rng.random_bool(0.5) {
                c.xor_assign(&kernel.row(b));
            }
        }
        c
    };
    let mut best: Option<usize> = None;
    for _ in 0..samples {
        let mut diff = codeword(&mut rng);
        diff.xor_assign(&codeword(&mut rng));
        if diff.is_zero() || stabilizers.contains(&diff).expect("width n") {
            continue;
        }
        let w = diff.weight();
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    best
}
