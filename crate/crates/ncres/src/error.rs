use thiserror::Error;

use crate::arith::GeomSymbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("assignment is missing symbol {0}")]
    IncompleteAssignment(GeomSymbol),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XiError {
    #[error("input does not decay at infinity: numerator degree {deg} vs pole order {poles}")]
    NonDecaying { deg: usize, poles: u32 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("word carries more than one A(X) marker")]
    DoubleBivector,
    #[error("pairing g({0}, {1}) is not defined")]
    UndefinedPairing(String, String),
    #[error("A(X) word out of scope: {0}")]
    OutOfScopeWord(String),
    #[error("gamma matrices failed the anticommutation self-check for m = {0}")]
    GammaConstruction(u32),
    #[error("gamma oracle needs 1 <= m <= 4 and vectors of length 2m+1, got m = {m}, len = {len}")]
    GammaShape { m: u32, len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("no symbol entry for operator {op} at slot {slot}")]
    Unsupported { op: String, slot: String },
    #[error("m must be at least 1")]
    ZeroM,
    #[error("x_n-derivation rule does not cover {0}")]
    Derivation(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("second-moment sphere integral encountered in monomial {0}")]
    SecondMoment(String),
    #[error("integrand decays like |xi|^-{0}, quadrature needs at least 2")]
    InsufficientDecay(i64),
    #[error("invalid case tuple: {0}")]
    InvalidCase(String),
    #[error(transparent)]
    Xi(#[from] XiError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
