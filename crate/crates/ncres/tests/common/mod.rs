#![allow(dead_code)]

use ncres::arith::{Assignment, GaussianRational, GeomSymbol, Monomial, SymbolPoly};
use ncres::xi::{RatXi, XiPoly};
use proptest::prelude::*;

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=7, -9i64..=9, 1i64..=7)
        .prop_map(|(a, b, c, d)| GaussianRational::from_fracs((a, b), (c, d)))
}

pub fn nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    gaussian().prop_filter("nonzero", |g| *g != GaussianRational::int(0))
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0usize..GeomSymbol::ALL.len(), 0..3)
        .prop_map(|idx| Monomial::of(&idx.iter().map(|i| GeomSymbol::ALL[*i]).collect::<Vec<_>>()))
}

pub fn symbol_poly() -> impl Strategy<Value = SymbolPoly> {
    proptest::collection::vec((monomial(), gaussian()), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(m, c)| SymbolPoly::term(m, c)).sum())
}

pub fn assignment() -> impl Strategy<Value = Assignment> {
    proptest::collection::vec(gaussian(), GeomSymbol::ALL.len())
        .prop_map(|vals| GeomSymbol::ALL.iter().copied().zip(vals).collect())
}

pub fn xi_poly(max_len: usize) -> impl Strategy<Value = XiPoly> {
    proptest::collection::vec(symbol_poly(), 0..=max_len).prop_map(XiPoly::new)
}

pub fn scalar_xi_poly(max_len: usize) -> impl Strategy<Value = XiPoly> {
    proptest::collection::vec(gaussian(), 0..=max_len).prop_map(|cs| XiPoly::from_scalars(&cs))
}

/// Rational functions with at least one order of decay at infinity.
pub fn decaying_ratxi() -> impl Strategy<Value = RatXi> {
    (0u32..4, 0u32..4)
        .prop_filter("has poles", |(p, q)| p + q > 0)
        .prop_flat_map(|(p, q)| {
            let max_len = (p + q) as usize;
            xi_poly(max_len).prop_map(move |n| {
                let n = XiPoly::new(n.coeffs().iter().take(max_len).cloned().collect());
                RatXi::new(n, p, q)
            })
        })
}

pub fn ratxi() -> impl Strategy<Value = RatXi> {
    (xi_poly(4), 0u32..3, 0u32..3).prop_map(|(n, p, q)| RatXi::new(n, p, q))
}

/// Random numeric words of length at most 6 in `R^{2m+1}`. Odd-length words lie in
/// the hyperplane orthogonal to the last axis, where the top element cannot appear.
pub fn clifford_corpus(
    m: u32,
    count: usize,
    seed: u64,
) -> Vec<Vec<Vec<num_rational::BigRational>>> {
    use rand::{RngExt, SeedableRng};
    let n = 2 * m as usize + 1;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ u64::from(m));
    (0..count)
        .map(|_| {
            let len: usize = rng.random_range(0..=6);
            (0..len)
                .map(|_| {
                    (0..n)
                        .map(|k| {
                            let v: i64 = if len % 2 == 1 && k == n - 1 {
                                0
                            } else {
                                rng.random_range(-3..=3)
                            };
                            num_rational::BigRational::from_integer(v.into())
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn wick_numeric(word: &[Vec<num_rational::BigRational>]) -> GaussianRational {
    ncres::clifford::wick_trace_with(word, &|a: &Vec<_>, b: &Vec<_>| {
        Ok::<_, std::convert::Infallible>(ncres::gamma::euclidean(a, b))
    })
    .unwrap()
}

/// Exact agreement of Wick expansion and matrices, cyclic invariance, anticommutation.
pub fn clifford_properties(m: u32, word: &[Vec<num_rational::BigRational>]) -> Result<(), String> {
    let wick = wick_numeric(word);
    let gamma = ncres::gamma::gamma_oracle(m, word).map_err(|e| e.to_string())?;
    if wick != gamma {
        return Err(format!(
            "m={m} len={}: wick {wick} vs gamma {gamma}",
            word.len()
        ));
    }
    if !word.is_empty() {
        let mut rotated = word[1..].to_vec();
        rotated.push(word[0].clone());
        if wick_numeric(&rotated) != wick {
            return Err(format!("m={m}: cyclic rotation changes the trace"));
        }
    }
    if word.len() >= 2 {
        let mut swapped = word.to_vec();
        swapped.swap(0, 1);
        let rest = wick_numeric(&word[2..]);
        let g = ncres::gamma::euclidean(&word[0], &word[1]);
        let lhs = &wick + &wick_numeric(&swapped);
        let rhs = &(&GaussianRational::int(-2) * &g) * &rest;
        if lhs != rhs {
            return Err(format!("m={m}: anticommutator {lhs} vs {rhs}"));
        }
    }
    Ok(())
}
