//! Subsystem generators and single-qubit transfer classification.

mod transfer;

pub use transfer::{classify_transfer, TransferCase, TransferClass, TransferRegime};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::CssCode;
use crate::entropy::Bipartition;
use crate::error::{Error, Result};

/// Seeded generator used by every sampler in the crate. Stream `stream`
/// gives independent sequences for the same master seed.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A uniformly random `n_a`-subset of `n` qubits.
pub fn random_subsystem(n: usize, n_a: usize, seed: u64) -> Result<Bipartition> {
    random_subsystem_with(n, n_a, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_subsystem_with<R: Rng + ?Sized>(n: usize, n_a: usize, rng: &mut R) -> Result<Bipartition> {
    if n_a > n {
        return Err(Error::param(format!("subsystem size {n_a} exceeds {n} qubits")));
    }
    Bipartition::new(n, index::sample(rng, n, n_a))
}

/// Incremental state of the stabilizer-growth procedure.
///
/// Starting from one random Z stabilizer, the supports of the stabilizers in
/// the waiting set are absorbed in ascending row order; every absorption
/// that enlarges `A` is a checkpoint. The next waiting set holds the
/// unvisited stabilizers touching `A`. Growth ends before `A` reaches half of
/// the qubits.
#[derive(Clone, Debug)]
pub struct GrowthState<'a> {
    code: &'a CssCode,
    qubit_checks: Vec<Vec<usize>>,
    waiting: Vec<usize>,
    cursor: usize,
    seen: Vec<bool>,
    visited: Vec<bool>,
    in_a: Vec<bool>,
    n_a: usize,
    done: bool,
}

impl<'a> GrowthState<'a> {
    pub fn new<R: Rng + ?Sized>(code: &'a CssCode, rng: &mut R) -> Self {
        let hz = code.hz();
        let qubit_checks = (0..hz.cols()).map(|q| hz.col_support(q)).collect();
        let mut seen = vec![false; hz.rows()];
        let waiting = if hz.rows() == 0 {
            Vec::new()
        } else {
            let s = rng.random_range(0..hz.rows());
            seen[s] = true;
            vec![s]
        };
        Self {
            code,
            qubit_checks,
            done: waiting.is_empty(),
            waiting,
            cursor: 0,
            seen,
            visited: vec![false; hz.rows()],
            in_a: vec![false; code.n()],
            n_a: 0,
        }
    }

    pub fn waiting_set(&self) -> &[usize] {
        &self.waiting[self.cursor..]
    }

    /// Stabilizers already absorbed.
    pub fn visited(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.visited.len()).filter(|&s| self.visited[s])
    }

    pub fn subsystem(&self) -> Bipartition {
        Bipartition::from_mask(&self.in_a)
    }

    fn refill(&mut self) {
        let mut next = Vec::new();
        for q in (0..self.in_a.len()).filter(|&q| self.in_a[q]) {
            for &s in &self.qubit_checks[q] {
                if !self.seen[s] {
                    self.seen[s] = true;
                    next.push(s);
                }
            }
        }
        next.sort_unstable();
        self.waiting = next;
        self.cursor = 0;
    }

    /// Advances to the next checkpoint, if any.
    pub fn advance(&mut self) -> Option<Bipartition> {
        let n = self.code.n();
        while !self.done {
            if self.cursor == self.waiting.len() {
                self.refill();
                if self.waiting.is_empty() {
                    self.done = true;
                    break;
                }
            }
            let s = self.waiting[self.cursor];
            self.cursor += 1;
            self.visited[s] = true;
            let before = self.n_a;
            for q in self.code.hz().row_support(s) {
                if !self.in_a[q] {
                    self.in_a[q] = true;
                    self.n_a += 1;
                }
            }
            if self.n_a == before {
                continue;
            }
            if 2 * self.n_a >= n {
                self.done = true;
                break;
            }
            return Some(self.subsystem());
        }
        None
    }
}

impl Iterator for GrowthState<'_> {
    type Item = Bipartition;

    fn next(&mut self) -> Option<Bipartition> {
        self.advance()
    }
}

/// All checkpoints of one growth run.
pub fn grown_subsystem_sequence(code: &CssCode, seed: u64) -> Vec<Bipartition> {
    grown_subsystem_sequence_with(code, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn grown_subsystem_sequence_with<R: Rng + ?Sized>(code: &CssCode, rng: &mut R) -> Vec<Bipartition> {
    GrowthState::new(code, rng).collect()
}
