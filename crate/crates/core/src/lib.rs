//! Entanglement entropy of CSS stabilizer codes.
//!
//! The crate builds toric, bivariate-bicycle and quasi-cyclic codes, evaluates
//! the entanglement entropy of qubit bipartitions of their code states with
//! exact GF(2) rank computations or graph invariants, and runs the sampling
//! experiments built on top of those.

pub mod codes;
pub mod entropy;
pub mod error;
pub mod experiments;
pub mod gf2;
pub mod graph;
pub mod sampling;

pub use error::{Error, Result};
