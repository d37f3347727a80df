//! Exact dense linear algebra over GF(2).

mod bits;
mod reduce;
mod text;

pub use bits::{BitMatrix, BitVec};
pub use reduce::{in_row_space, nullspace_basis, rank, rref, RowSpace, RrefResult};

pub(crate) use text::{format_row, parse_row};
