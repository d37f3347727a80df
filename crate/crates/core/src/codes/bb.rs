//! Bivariate-bicycle codes.
//!
//! With `x = S_l ⊗ I_m` and `y = I_l ⊗ S_m` the check blocks are
//! `A = x^a + y^b + y^c` and `B = y^d + x^e + x^f`, giving `hx = [A|B]` and
//! `hz = [Bᵀ|Aᵀ]`.

use super::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BbParams {
    pub l: usize,
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

impl BbParams {
    /// Reduces `a` and `e, f` modulo `l`, and `b, c, d` modulo `m`, then checks
    /// that the three terms of each polynomial are distinct.
    pub fn new(l: usize, m: usize, exps: [usize; 6]) -> Result<Self> {
        if l == 0 || m == 0 {
            return Err(Error::param("cyclic dimensions must be positive"));
        }
        let [a, b, c, d, e, f] = exps;
        let p = Self {
            l,
            m,
            a: a % l,
            b: b % m,
            c: c % m,
            d: d % m,
            e: e % l,
            f: f % l,
        };
        let a_terms = [(p.a, 0), (0, p.b), (0, p.c)];
        let b_terms = [(0, p.d), (p.e, 0), (p.f, 0)];
        for terms in [a_terms, b_terms] {
            if terms[0] == terms[1] || terms[0] == terms[2] || terms[1] == terms[2] {
                return Err(Error::param(format!(
                    "polynomial terms coincide for (l,m)=({l},{m}), exponents {exps:?}"
                )));
            }
        }
        Ok(p)
    }
}

/// Sum of monomials `x^i y^j` as an `lm × lm` matrix. Row `(s, t)` has its
/// one for `x^i y^j` at column `((s+i) mod l, (t+j) mod m)`.
fn monomial_sum(l: usize, m: usize, terms: &[(usize, usize)]) -> BitMatrix {
    let mut out = BitMatrix::zeros(l * m, l * m);
    for s in 0..l {
        for t in 0..m {
            for &(i, j) in terms {
                let col = ((s + i) % l) * m + (t + j) % m;
                let cur = out.get(s * m + t, col);
                out.set(s * m + t, col, !cur);
            }
        }
    }
    out
}

pub fn build_bb(p: BbParams) -> Result<CssCode> {
    let a = monomial_sum(p.l, p.m, &[(p.a, 0), (0, p.b), (0, p.c)]);
    let b = monomial_sum(p.l, p.m, &[(0, p.d), (p.e, 0), (p.f, 0)]);
    let hx = a.hstack(&b)?;
    let hz = b.transpose().hstack(&a.transpose())?;
    CssCode::new(format!("bb-{}-{}", p.l, p.m), hx, hz)
}
