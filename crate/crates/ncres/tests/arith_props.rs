mod common;

use common::{assignment, gaussian, nonzero_gaussian, symbol_poly};
use ncres::arith::{GaussianRational, SymbolPoly};
use num_traits::{One, Zero};
use proptest::prelude::*;

proptest! {
    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), GaussianRational::zero());
    }

    #[test]
    fn gaussian_inverse(a in nonzero_gaussian()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
    }

    #[test]
    fn poly_ring_axioms(a in symbol_poly(), b in symbol_poly(), c in symbol_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &SymbolPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in symbol_poly(), b in symbol_poly(), x in assignment()) {
        let (va, vb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
    }
}
