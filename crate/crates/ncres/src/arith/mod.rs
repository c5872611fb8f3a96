//! Exact scalars and polynomials in the geometric alphabet.

mod gaussian;
mod poly;
mod symbol;

pub use gaussian::{rat_to_f64, ratio, GaussianRational};
pub use poly::{Assignment, SymbolPoly};
pub use symbol::{GeomSymbol, Monomial, Parity};
