//! Exact symbolic recomputation of boundary noncommutative-residue densities
//! for odd-dimensional spin manifolds with boundary.

pub mod arith;
pub mod cli;
pub mod clifford;
pub mod coefficients;
pub mod error;
pub mod gamma;
pub mod par;
pub mod pipeline;
pub mod report;
pub mod symbols;
pub mod xi;
