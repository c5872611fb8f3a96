//! Boundary-case pipeline: traces, sphere reduction, contour integrals and oracles.

pub mod case;
pub mod printed;
pub mod quadrature;
pub mod sphere;
pub mod theorem;

pub use case::{
    run_case, CaseId, CaseSpec, CaseTermReport, CheckKind, OracleMode, OracleStatus, RunOptions,
    Theorem,
};
pub use theorem::{run_theorem, TheoremReport};
