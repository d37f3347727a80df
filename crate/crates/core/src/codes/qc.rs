//! Quasi-cyclic codes from circulant permutation matrices.

use super::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QcParams {
    p: u64,
    sigma: u64,
    tau: u64,
    j: usize,
    k: usize,
    r: usize,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(base: u64, mut e: u64, p: u64) -> u64 {
    let (mut acc, mut b) = (1 % p, base % p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

impl QcParams {
    /// `j` and `k` are the numbers of block rows of the Z and X check matrices.
    /// The order `r` of `sigma` modulo `p` is derived.
    pub fn new(p: u64, sigma: u64, tau: u64, j: usize, k: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::param(format!("circulant size must be at least 2, got {p}")));
        }
        let (sigma, tau) = (sigma % p, tau % p);
        if gcd(sigma, p) != 1 || gcd(tau, p) != 1 {
            return Err(Error::param(format!(
                "sigma={sigma} and tau={tau} must be units modulo {p}"
            )));
        }
        let mut powers = vec![1 % p];
        let mut cur = sigma;
        while cur != 1 % p {
            powers.push(cur);
            cur = mul_mod(cur, sigma, p);
        }
        let r = powers.len();
        if let Some(i) = (1..r).find(|&i| gcd((powers[i] + p - 1) % p, p) != 1) {
            return Err(Error::param(format!("sigma^{i} - 1 is not a unit modulo {p}")));
        }
        if powers.contains(&tau) {
            return Err(Error::param(format!("tau={tau} is a power of sigma={sigma} modulo {p}")));
        }
        if j == 0 || k == 0 || j > r || k > r {
            return Err(Error::param(format!(
                "block row counts J={j}, K={k} must lie in 1..={r}"
            )));
        }
        Ok(Self {
            p,
            sigma,
            tau,
            j,
            k,
            r,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Multiplicative order of sigma modulo P.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of block columns, `2r`.
    pub fn l(&self) -> usize {
        2 * self.r
    }

    /// `LP − (JP + KP − J − K + 2)`.
    pub fn predicted_k(&self) -> i64 {
        let (p, j, k) = (self.p as i64, self.j as i64, self.k as i64);
        self.l() as i64 * p - (j * p + k * p - j - k + 2)
    }
}

/// Exponent model matrices `(C, D)`: `C` is `J × 2r` and builds hz, `D` is
/// `K × 2r` and builds hx. Entry `e` stands for the circulant `S_P^e`.
pub fn qc_model_matrices(p: &QcParams) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    let m = p.p;
    let r = p.r as u64;
    let sigma_pow = |e: i64| pow_mod(p.sigma, e.rem_euclid(r as i64) as u64, m);
    let neg = |x: u64| (m - x) % m;
    let c = (0..p.j as i64)
        .map(|i| {
            (0..p.l() as i64)
                .map(|j| {
                    let s = sigma_pow(j - i);
                    if j < r as i64 {
                        s
                    } else {
                        mul_mod(p.tau, s, m)
                    }
                })
                .collect()
        })
        .collect();
    let d = (0..p.k as i64)
        .map(|i| {
            (0..p.l() as i64)
                .map(|j| {
                    let s = sigma_pow(i - j);
                    if j < r as i64 {
                        neg(mul_mod(p.tau, s, m))
                    } else {
                        neg(s)
                    }
                })
                .collect()
        })
        .collect();
    (c, d)
}

fn expand(model: &[Vec<u64>], p: usize) -> BitMatrix {
    let cols = model.first().map_or(0, Vec::len) * p;
    let mut out = BitMatrix::zeros(model.len() * p, cols);
    for (bi, row) in model.iter().enumerate() {
        for (bj, &e) in row.iter().enumerate() {
            for t in 0..p {
                out.set(bi * p + t, bj * p + (t + e as usize) % p, true);
            }
        }
    }
    out
}

pub fn build_qc(p: QcParams) -> Result<CssCode> {
    let (c, d) = qc_model_matrices(&p);
    let size = p.p as usize;
    CssCode::new(
        format!("qc-{}-{}-{}", p.p, p.sigma, p.tau),
        expand(&d, size),
        expand(&c, size),
    )
}
