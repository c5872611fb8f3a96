mod common;

use common::{clifford_corpus, clifford_properties, wick_numeric};
use ncres::arith::GaussianRational;
use num_rational::BigRational;

#[test]
fn wick_expansion_matches_gamma_matrices() {
    for m in 1..=3 {
        for word in clifford_corpus(m, 100, 0x5eed) {
            clifford_properties(m, &word).unwrap();
        }
    }
}

#[test]
fn top_element_is_outside_the_wick_expansion() {
    // c(e1) c(e2) c(e3) is central in three dimensions; Wick only sees even words
    let e = |k: usize| {
        (0..3)
            .map(|j| BigRational::from_integer(i64::from(j == k).into()))
            .collect::<Vec<_>>()
    };
    let word = vec![e(0), e(1), e(2)];
    assert_eq!(wick_numeric(&word), GaussianRational::int(0));
    assert_ne!(
        ncres::gamma::gamma_oracle(1, &word).unwrap(),
        GaussianRational::int(0)
    );
}
