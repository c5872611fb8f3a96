//! Integration over the unit cosphere of the boundary.

use crate::arith::{GeomSymbol, Monomial, Parity, SymbolPoly};
use crate::error::PipelineError;
use crate::xi::RatXi;

fn xi_prime_degree(m: &Monomial) -> u32 {
    use GeomSymbol::*;
    [GXXI, DGXXI, TRAX_XI_DN]
        .iter()
        .map(|s| u32::from(m.exponent(*s)))
        .sum()
}

/// Odd moments vanish; even degree-zero moments pick up `VOLS`.
/// Second moments are out of scope and reported as an error.
pub fn sphere_reduce(p: &SymbolPoly) -> Result<SymbolPoly, PipelineError> {
    p.flat_map_terms(|mono, c| {
        if mono.parity() == Parity::Odd {
            return Ok(SymbolPoly::zero());
        }
        if xi_prime_degree(mono) > 0 {
            return Err(PipelineError::SecondMoment(mono.to_string()));
        }
        Ok(SymbolPoly::term(
            mono.mul(&Monomial::of(&[GeomSymbol::VOLS])),
            c.clone(),
        ))
    })
}

/// `sphere_reduce` on every numerator coefficient.
pub fn sphere_reduce_xi(f: &RatXi) -> Result<RatXi, PipelineError> {
    f.try_map_coeffs(sphere_reduce)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeomSymbol::*;

    #[test]
    fn odd_terms_vanish() {
        assert!(sphere_reduce(&SymbolPoly::sym(GXXI)).unwrap().is_zero());
        assert!(sphere_reduce(&SymbolPoly::monomial(&[DGXXI, XN]))
            .unwrap()
            .is_zero());
        assert!(sphere_reduce(&SymbolPoly::sym(TRAX_XI_DN))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn even_terms_pick_up_volume() {
        assert_eq!(
            sphere_reduce(&SymbolPoly::monomial(&[XN, H1])).unwrap(),
            SymbolPoly::monomial(&[XN, H1, VOLS])
        );
        assert_eq!(
            sphere_reduce(&SymbolPoly::int(3)).unwrap(),
            SymbolPoly::sym(VOLS).scale(&3.into())
        );
    }

    #[test]
    fn second_moment_is_rejected() {
        assert!(matches!(
            sphere_reduce(&SymbolPoly::monomial(&[GXXI, GXXI])),
            Err(PipelineError::SecondMoment(_))
        ));
    }
}
