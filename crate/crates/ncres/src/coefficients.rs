//! Closed-form residue constants: each is a derivative of `N(xi) / (xi + i)^a`
//! at `xi = i`, available both from its printed binomial expansion and by direct
//! differentiation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::GaussianRational;
use crate::xi::{RatXi, XiPoly};

/// `N (N-1) ... (N-K+1)`
pub fn falling(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - t))
}

fn factorial(k: i64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

/// Generalized binomial `C_N^K = falling(N, K) / K!`, extended by `0` for `K < 0`.
pub fn binom_general(n: i64, k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    BigRational::new(falling(n, k), factorial(k))
}

/// `A_N^K = falling(N, K)`
pub fn arrange_general(n: i64, k: i64) -> BigRational {
    BigRational::from_integer(falling(n, k))
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum CoeffName {
    A0,
    A1,
    B0,
    C0,
    C1,
    D0,
    E0,
    E1,
    F0,
    G0,
    G1,
    G2,
    G3,
    H0,
    H1,
    H2,
    H3,
    I0,
    I1,
    J0,
    K0,
    K1,
    L0,
}

impl CoeffName {
    pub const ALL: [CoeffName; 23] = [
        CoeffName::A0,
        CoeffName::A1,
        CoeffName::B0,
        CoeffName::C0,
        CoeffName::C1,
        CoeffName::D0,
        CoeffName::E0,
        CoeffName::E1,
        CoeffName::F0,
        CoeffName::G0,
        CoeffName::G1,
        CoeffName::G2,
        CoeffName::G3,
        CoeffName::H0,
        CoeffName::H1,
        CoeffName::H2,
        CoeffName::H3,
        CoeffName::I0,
        CoeffName::I1,
        CoeffName::J0,
        CoeffName::K0,
        CoeffName::K1,
        CoeffName::L0,
    ];
}

impl fmt::Display for CoeffName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The defining data of one constant at a fixed `m`.
#[derive(Clone, Debug)]
pub struct ClosedFormCoefficient {
    pub name: CoeffName,
    /// numerator coefficients in `xi`, lowest degree first
    pub numerator: Vec<GaussianRational>,
    /// power of `(xi + i)` in the denominator
    pub power: u32,
    pub derivative_order: u32,
    pub printed_formula: &'static str,
}

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn c(n: i64, k: i64) -> GaussianRational {
    GaussianRational::real(binom_general(n, k))
}

fn a(n: i64, k: i64) -> GaussianRational {
    GaussianRational::real(arrange_general(n, k))
}

fn fact(k: i64) -> GaussianRational {
    GaussianRational::real(BigRational::from_integer(factorial(k)))
}

fn ipow(e: i64) -> GaussianRational {
    GaussianRational::i().pow(e).expect("i is invertible")
}

fn two_pow(e: i64) -> GaussianRational {
    GaussianRational::int(2).pow(e).expect("2 is invertible")
}

fn two_i_pow(e: i64) -> GaussianRational {
    g(0, 2).pow(e).expect("2i is invertible")
}

fn sum(terms: &[GaussianRational]) -> GaussianRational {
    terms
        .iter()
        .fold(GaussianRational::zero(), |acc, t| &acc + t)
}

fn prod(terms: &[GaussianRational]) -> GaussianRational {
    terms
        .iter()
        .fold(GaussianRational::one(), |acc, t| &acc * t)
}

/// Definition of a constant at `m`.
pub fn definition(name: CoeffName, m: u32) -> ClosedFormCoefficient {
    use CoeffName::*;
    let mi = m as i64;
    let (num, power, order, printed): (Vec<GaussianRational>, i64, i64, &'static str) = match name {
        A0 => (vec![g(-2, 0), g(0, 0), g(4 * mi - 2, 0)], mi + 1, mi + 1,
            "-i^{-2m-2} 2^{-2m-1} ((4m-2)C_{-m-1}^{m-1} + (4m-2)C_{-m-1}^{m} + m C_{-m-1}^{m+1}) (m+1)!"),
        A1 => (vec![g(1, 0)], mi + 1, mi + 2, "(2i)^{-2m-3} A_{-m-1}^{m+2}"),
        B0 => (vec![g(0, 1)], mi, mi + 2, "-i^{-2m-3} 2^{-2m-2} A_{-m}^{m+2}"),
        C0 => (vec![g(0, 0), g(1, 0)], mi, mi + 1, "-i^{-2m-2} 2^{-2m-1} (2C_{-m}^{m} + C_{-m}^{m+1}) (m+1)!"),
        C1 => (vec![g(0, 0), g(1, 0)], mi + 1, mi + 2,
            "-i^{-2m-4} 2^{-2m-3} (2C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!"),
        D0 => (vec![g(0, 0), g(0, 5), g(1, 0)], mi, mi + 2,
            "-i^{-2m-3} 2^{-2m-1} (2C_{-m}^{m} + 7C_{-m}^{m+1} + 3C_{-m}^{m+2}) (m+2)!"),
        E0 => (vec![g(0, 1), g(-1, 0)], mi, mi + 2, "i^{-2m+1} 2^{-2m-1} C_{-m}^{m+1} (m+2)!"),
        E1 => (vec![g(4, 0), g(0, 9), g(-2, 0)], mi, mi + 3,
            "(2i)^{-2m-3} (8i C_{-m}^{m+1} - (18-8i) C_{-m}^{m+2} - (5-2i) C_{-m}^{m+3}) (m+3)!"),
        F0 => (vec![g(2 * mi, 1), g(2 * mi, -2 * mi), g(0, 1)], mi + 1, mi + 3,
            "(2i)^{-2m-4} (-4i C_{-m-1}^{m+1} + 4(m+mi-i) C_{-m-1}^{m+2} + 2(2m+mi-i) C_{-m-1}^{m+3}) (m+3)!"),
        G0 => (vec![g(0, 0), g(0, -5), g(3, 0)], mi, mi + 2,
            "(2i)^{-2m-2} (-12C_{-m}^{m} - 22C_{-m}^{m+1} - 8C_{-m}^{m+2}) (m+2)!"),
        G1 => (vec![g(0, 0), g(0, 0), g(mi, 0), g(0, -4 * mi), g(3 * mi, 0)], mi, mi + 2,
            "-i^{-2m-4} 2^{-2m-1} m (24C_{-m}^{m-2} + (48+16i)C_{-m}^{m-1} + (34+24i)C_{-m}^{m} + (10+12i)C_{-m}^{m+1} + (1+2i)C_{-m}^{m+2}) (m+2)!"),
        G2 => (vec![g(0, 0), g(0, 0), g(3 * mi, 0), g(0, 0), g(0, 2 * mi)], mi + 1, mi + 3,
            "-i^{-2m-6} 2^{-2m-4} (32m C_{-m-1}^{m-1} + 64m C_{-m-1}^{m} + (36m-12) C_{-m-1}^{m+1} + (4m+12) C_{-m-1}^{m+2} + (3-m) C_{-m-1}^{m+3}) (m+3)!"),
        G3 => (vec![g(0, 1), g(2 * mi, 0), g(0, 1)], mi + 1, mi + 2,
            "i^{-2m-4} 4^{-m-1} (2C_{-m-1}^{m} + (2m+10) C_{-m-1}^{m+1} - m C_{-m-1}^{m+2}) (m+2)!"),
        H0 => (vec![g(0, 0), g(1, 0)], mi + 1, mi + 2,
            "-i^{-2m-4} 2^{-2m-3} (2C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!"),
        H1 => (vec![g(0, 0), g(1, 0)], mi + 2, mi + 3, "(2i)^{-2m-4} (2i C_{-m-1}^{m+2} + i C_{-m-1}^{m+3}) (m+3)!"),
        H2 => (vec![g(0, 0), g(0, 0), g(1, 0)], mi + 1, mi + 2,
            "-(2i)^{-2m-3} (4C_{-m-1}^{m} + 4C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!"),
        H3 => (vec![g(1, 0)], mi + 1, mi + 2, "(2i)^{-2m-3} A_{-m-1}^{m+2}"),
        I0 => (vec![g(0, -1), g(0, 0), g(0, 2 * mi - 1)], mi + 1, mi + 1,
            "-(2i)^{-2m-1} ((4m-2) C_{-m-1}^{m-1} + (4m-2) C_{-m-1}^{m} + m C_{-m-1}^{m+1}) (m+1)!"),
        I1 => (vec![g(-1, 0), g(0, 0), g(2 * mi - 1, 0)], mi + 1, mi + 2,
            "(2i)^{-2m-3} ((4-8m) C_{-m-1}^{m} + (4-8m) C_{-m-1}^{m+1} - 2m C_{-m-1}^{m+2}) (m+2)!"),
        J0 => (vec![g(0, 1)], mi, mi + 2, "-i^{-2m-3} 2^{-2m-1} A_{m}^{m+2}"),
        K0 => (vec![g(0, 0), g(1, 0)], mi, mi + 1, "(2i)^{-2m-1} (2i C_{-m}^{m} + i C_{-m}^{m+1}) (m+1)!"),
        K1 => (vec![g(0, 0), g(1, 0)], mi, mi + 2, "(2i)^{-2m-2} (2i C_{-m}^{m+1} + i C_{-m}^{m+2}) (m+2)!"),
        L0 => (vec![g(0, 0), g(0, 2), g(1, 0), g(0, 2)], mi, mi + 2,
            "(2i)^{-2m-2} (-16C_{-m}^{m+1} + 20C_{-m}^{m} + 4C_{-m}^{m+1} - C_{-m}^{m+2}) (m+2)!"),
    };
    ClosedFormCoefficient {
        name,
        numerator: num,
        power: power as u32,
        derivative_order: order as u32,
        printed_formula: printed,
    }
}

/// Value of the printed binomial expansion at `m`.
pub fn eval_closed_form(name: CoeffName, m: u32) -> GaussianRational {
    use CoeffName::*;
    let m = m as i64;
    let n0 = -m;
    let n1 = -m - 1;
    let gm = |k: i64| g(k, 0);
    match name {
        A0 => prod(&[
            -ipow(-2 * m - 2),
            two_pow(-2 * m - 1),
            sum(&[
                &gm(4 * m - 2) * &c(n1, m - 1),
                &gm(4 * m - 2) * &c(n1, m),
                &gm(m) * &c(n1, m + 1),
            ]),
            fact(m + 1),
        ]),
        A1 | H3 => &two_i_pow(-2 * m - 3) * &a(n1, m + 2),
        B0 => prod(&[-ipow(-2 * m - 3), two_pow(-2 * m - 2), a(n0, m + 2)]),
        C0 => prod(&[
            -ipow(-2 * m - 2),
            two_pow(-2 * m - 1),
            &gm(2) * &c(n0, m) + c(n0, m + 1),
            fact(m + 1),
        ]),
        C1 | H0 => prod(&[
            -ipow(-2 * m - 4),
            two_pow(-2 * m - 3),
            &gm(2) * &c(n1, m + 1) + c(n1, m + 2),
            fact(m + 2),
        ]),
        D0 => prod(&[
            -ipow(-2 * m - 3),
            two_pow(-2 * m - 1),
            sum(&[
                &gm(2) * &c(n0, m),
                &gm(7) * &c(n0, m + 1),
                &gm(3) * &c(n0, m + 2),
            ]),
            fact(m + 2),
        ]),
        E0 => prod(&[
            ipow(-2 * m + 1),
            two_pow(-2 * m - 1),
            c(n0, m + 1),
            fact(m + 2),
        ]),
        E1 => prod(&[
            two_i_pow(-2 * m - 3),
            sum(&[
                &g(0, 8) * &c(n0, m + 1),
                -(&g(18, -8) * &c(n0, m + 2)),
                -(&g(5, -2) * &c(n0, m + 3)),
            ]),
            fact(m + 3),
        ]),
        F0 => prod(&[
            two_i_pow(-2 * m - 4),
            sum(&[
                &g(0, -4) * &c(n1, m + 1),
                &(&gm(4) * &g(m, m - 1)) * &c(n1, m + 2),
                &(&gm(2) * &g(2 * m, m - 1)) * &c(n1, m + 3),
            ]),
            fact(m + 3),
        ]),
        G0 => prod(&[
            two_i_pow(-2 * m - 2),
            sum(&[
                &gm(-12) * &c(n0, m),
                &gm(-22) * &c(n0, m + 1),
                &gm(-8) * &c(n0, m + 2),
            ]),
            fact(m + 2),
        ]),
        G1 => prod(&[
            -ipow(-2 * m - 4),
            two_pow(-2 * m - 1),
            gm(m),
            sum(&[
                &gm(24) * &c(n0, m - 2),
                &g(48, 16) * &c(n0, m - 1),
                &g(34, 24) * &c(n0, m),
                &g(10, 12) * &c(n0, m + 1),
                &g(1, 2) * &c(n0, m + 2),
            ]),
            fact(m + 2),
        ]),
        G2 => prod(&[
            -ipow(-2 * m - 6),
            two_pow(-2 * m - 4),
            sum(&[
                &gm(32 * m) * &c(n1, m - 1),
                &gm(64 * m) * &c(n1, m),
                &gm(36 * m - 12) * &c(n1, m + 1),
                &gm(4 * m + 12) * &c(n1, m + 2),
                &gm(3 - m) * &c(n1, m + 3),
            ]),
            fact(m + 3),
        ]),
        G3 => prod(&[
            ipow(-2 * m - 4),
            GaussianRational::int(4)
                .pow(-m - 1)
                .expect("4 is invertible"),
            sum(&[
                &gm(2) * &c(n1, m),
                &gm(2 * m + 10) * &c(n1, m + 1),
                -(&gm(m) * &c(n1, m + 2)),
            ]),
            fact(m + 2),
        ]),
        H1 => prod(&[
            two_i_pow(-2 * m - 4),
            &g(0, 2) * &c(n1, m + 2) + &g(0, 1) * &c(n1, m + 3),
            fact(m + 3),
        ]),
        H2 => prod(&[
            -two_i_pow(-2 * m - 3),
            sum(&[&gm(4) * &c(n1, m), &gm(4) * &c(n1, m + 1), c(n1, m + 2)]),
            fact(m + 2),
        ]),
        I0 => prod(&[
            -two_i_pow(-2 * m - 1),
            sum(&[
                &gm(4 * m - 2) * &c(n1, m - 1),
                &gm(4 * m - 2) * &c(n1, m),
                &gm(m) * &c(n1, m + 1),
            ]),
            fact(m + 1),
        ]),
        I1 => prod(&[
            two_i_pow(-2 * m - 3),
            sum(&[
                &gm(4 - 8 * m) * &c(n1, m),
                &gm(4 - 8 * m) * &c(n1, m + 1),
                &gm(-2 * m) * &c(n1, m + 2),
            ]),
            fact(m + 2),
        ]),
        J0 => prod(&[-ipow(-2 * m - 3), two_pow(-2 * m - 1), a(m, m + 2)]),
        K0 => prod(&[
            two_i_pow(-2 * m - 1),
            &g(0, 2) * &c(n0, m) + &g(0, 1) * &c(n0, m + 1),
            fact(m + 1),
        ]),
        K1 => prod(&[
            two_i_pow(-2 * m - 2),
            &g(0, 2) * &c(n0, m + 1) + &g(0, 1) * &c(n0, m + 2),
            fact(m + 2),
        ]),
        L0 => prod(&[
            two_i_pow(-2 * m - 2),
            sum(&[
                &gm(-16) * &c(n0, m + 1),
                &gm(20) * &c(n0, m),
                &gm(4) * &c(n0, m + 1),
                -c(n0, m + 2),
            ]),
            fact(m + 2),
        ]),
    }
}

/// Value by direct differentiation of the defining function.
pub fn eval_by_oracle(name: CoeffName, m: u32) -> GaussianRational {
    let d = definition(name, m);
    let f = RatXi::new(XiPoly::from_scalars(&d.numerator), 0, d.power);
    f.diff_n(d.derivative_order)
        .eval_at(&GaussianRational::i())
        .expect("xi = i is a regular point")
        .as_constant()
        .expect("scalar definition")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrataRow {
    pub name: CoeffName,
    pub m: u32,
    pub printed: GaussianRational,
    pub oracle: GaussianRational,
    pub verdict: Verdict,
}

/// Printed expansion against the oracle for one constant at `m`.
pub fn errata_row(name: CoeffName, m: u32) -> ErrataRow {
    let printed = eval_closed_form(name, m);
    let oracle = eval_by_oracle(name, m);
    let verdict = if printed == oracle {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    ErrataRow {
        name,
        m,
        printed,
        oracle,
        verdict,
    }
}

/// Printed expansion against the oracle for every constant and every `m` in range.
pub fn errata_table(ms: impl IntoIterator<Item = u32> + Clone) -> Vec<ErrataRow> {
    CoeffName::ALL
        .iter()
        .flat_map(|&name| ms.clone().into_iter().map(move |m| errata_row(name, m)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn binomial_examples() {
        assert_eq!(binom_general(-2, 1), ratio(-2, 1));
        assert_eq!(binom_general(5, 2), ratio(10, 1));
        assert_eq!(arrange_general(-2, 3), ratio(-24, 1));
        assert_eq!(binom_general(7, 0), ratio(1, 1));
        assert!(binom_general(-3, -1).is_zero());
    }

    #[test]
    fn a1_at_one() {
        let want = &g(0, 2).pow(-5).unwrap() * &GaussianRational::int(-24);
        assert_eq!(eval_closed_form(CoeffName::A1, 1), want);
        assert_eq!(eval_by_oracle(CoeffName::A1, 1), want);
    }

    #[test]
    fn e0_oracle_at_two() {
        // d^4/dxi^4 (i - xi)(xi + i)^-2 at i
        let f = RatXi::new(XiPoly::from_scalars(&[g(0, 1), g(-1, 0)]), 0, 2);
        let want = f
            .diff_n(4)
            .eval_at(&GaussianRational::i())
            .unwrap()
            .as_constant()
            .unwrap();
        assert_eq!(eval_by_oracle(CoeffName::E0, 2), want);
        assert_eq!(want, g(0, -3));
    }

    #[test]
    fn printed_j0_differs_from_b0_form() {
        for m in 1..=4 {
            assert!(eval_closed_form(CoeffName::J0, m).is_zero());
            assert_eq!(
                eval_by_oracle(CoeffName::J0, m),
                eval_by_oracle(CoeffName::B0, m)
            );
        }
    }

    #[test]
    fn known_mismatches() {
        use CoeffName::*;
        let bad = [A0, D0, E1, F0, G0, G1, G2, G3, H1, J0, L0];
        let table = errata_table(1..=6);
        for name in CoeffName::ALL {
            let all_match = table
                .iter()
                .filter(|r| r.name == name)
                .all(|r| r.verdict == Verdict::Match);
            assert_eq!(all_match, !bad.contains(&name), "{name}");
        }
    }

    #[test]
    fn table_is_complete() {
        let t = errata_table(1..=6);
        assert_eq!(t.len(), 23 * 6);
    }
}
