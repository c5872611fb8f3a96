//! Boundary-point symbols of the operators entering the three residue computations.
//!
//! Everything is evaluated at the boundary point with `|xi'| = 1`, so
//! `|xi|^2 = 1 + xi^2 =: S`. The zeroth-order part of `D` at that point is
//! `-3/4 h'(0) c(dx_n)`.

use std::fmt;

use serde::Serialize;

use crate::arith::{GaussianRational, GeomSymbol, SymbolPoly};
use crate::clifford::{CliffordExpr, Letter, Word};
use crate::error::SymbolError;
use crate::xi::{RatXi, XiPoly};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Operator {
    /// D^{-1}
    DInv,
    /// D^{-2}
    DInv2,
    /// D^{-(2m-2)}
    DPow2m2,
    /// D^{-(2m-1)}
    DPow2m1,
    /// c(X) D^{-1}
    CXDInv,
    /// spinor covariant derivative along X
    Nabla,
    /// nabla_X D^{-1}
    NablaDInv,
    /// nabla_X D^{-2}
    NablaDInv2,
}

impl Operator {
    pub const ALL: [Operator; 8] = [
        Operator::DInv,
        Operator::DInv2,
        Operator::DPow2m2,
        Operator::DPow2m1,
        Operator::CXDInv,
        Operator::Nabla,
        Operator::NablaDInv,
        Operator::NablaDInv2,
    ];

    /// Order of the leading symbol.
    pub fn top_order(self, m: u32) -> i64 {
        let m = m as i64;
        match self {
            Operator::DInv | Operator::CXDInv | Operator::NablaDInv2 => -1,
            Operator::DInv2 => -2,
            Operator::DPow2m2 => -(2 * m - 2),
            Operator::DPow2m1 => -(2 * m - 1),
            Operator::Nabla => 1,
            Operator::NablaDInv => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Operator::DInv => "D^-1",
            Operator::DInv2 => "D^-2",
            Operator::DPow2m2 => "D^-(2m-2)",
            Operator::DPow2m1 => "D^-(2m-1)",
            Operator::CXDInv => "c(X)D^-1",
            Operator::Nabla => "nabla_X",
            Operator::NablaDInv => "nabla_X D^-1",
            Operator::NablaDInv2 => "nabla_X D^-2",
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which component (or stated derivative of a component) of an operator's symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Slot {
    /// leading symbol
    Top,
    /// d/dx_n of the leading symbol
    TopDxn,
    /// d/dx_n of the leading symbol as printed, where it differs from Leibniz
    TopDxnPrinted,
    /// d/dxi_n of the leading symbol
    TopDxi,
    /// d^2/dxi_n^2 of the leading symbol
    TopDxi2,
    /// symbol one order below the leading one
    Next,
    /// second printed arrangement of `Next`
    NextAlt,
    /// k-th summand of the three-part split of `Next`
    Part(u8),
}

impl Slot {
    pub fn label(self) -> String {
        match self {
            Slot::Top => "sigma_top".into(),
            Slot::TopDxn => "dxn sigma_top".into(),
            Slot::TopDxnPrinted => "dxn sigma_top (printed)".into(),
            Slot::TopDxi => "dxi sigma_top".into(),
            Slot::TopDxi2 => "dxi^2 sigma_top".into(),
            Slot::Next => "sigma_next".into(),
            Slot::NextAlt => "sigma_next (second arrangement)".into(),
            Slot::Part(k) => format!("sigma_next part {k}"),
        }
    }

    fn order_shift(self) -> i64 {
        match self {
            Slot::Top | Slot::TopDxn | Slot::TopDxnPrinted => 0,
            Slot::TopDxi | Slot::Next | Slot::NextAlt | Slot::Part(_) => -1,
            Slot::TopDxi2 => -2,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolEntry {
    pub operator: Operator,
    pub slot: Slot,
    pub order: i64,
    pub expr: CliffordExpr,
    pub m: u32,
}

type E = CliffordExpr;

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn gf(n: i64, d: i64) -> GaussianRational {
    GaussianRational::frac(n, d)
}

fn sym(s: GeomSymbol) -> SymbolPoly {
    SymbolPoly::sym(s)
}

fn letter(l: Letter) -> E {
    E::letter(l)
}

fn scalar(r: RatXi) -> E {
    E::scalar(r)
}

fn mul(a: &E, b: &E) -> E {
    a.mul(b).expect("library words carry at most one A(X)")
}

fn prod(factors: &[E]) -> E {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| mul(&acc, f))
}

fn add(terms: &[E]) -> E {
    terms.iter().fold(E::zero(), |acc, t| &acc + t)
}

/// `(1 + xi^2)^k`
fn s(k: i64) -> RatXi {
    RatXi::s_pow(k)
}

/// Scalar polynomial in `xi` with integer coefficients, lowest degree first.
fn xp(cs: &[i64]) -> RatXi {
    RatXi::poly(XiPoly::from_ints(cs))
}

fn c(v: GaussianRational) -> RatXi {
    RatXi::scalar(v)
}

fn cs(p: SymbolPoly) -> RatXi {
    RatXi::constant(p)
}

/// `sum_j X_j xi_j = g(X, xi') + X_n xi_n`
fn x_dot_xi() -> RatXi {
    RatXi::poly(XiPoly::new(vec![
        sym(GeomSymbol::GXXI),
        sym(GeomSymbol::XN),
    ]))
}

fn dx_dot_xi() -> RatXi {
    RatXi::poly(XiPoly::new(vec![
        sym(GeomSymbol::DGXXI),
        sym(GeomSymbol::DXN),
    ]))
}

fn c_xi() -> E {
    E::c_xi()
}

fn h1() -> RatXi {
    cs(sym(GeomSymbol::H1))
}

/// `sigma_0(D)` at the boundary point.
fn sigma0_d() -> E {
    scalar(h1().scale_scalar(&gf(-3, 4)))
        .mul(&letter(Letter::DxN))
        .expect("no bivector")
}

fn sigma_m1_dinv() -> E {
    mul(&c_xi(), &scalar(c(g(0, 1)) * s(-1)))
}

fn sigma_m2_dinv() -> E {
    let dn = letter(Letter::DxN);
    let dxi = letter(Letter::DXiPrime);
    add(&[
        prod(&[c_xi(), sigma0_d(), c_xi(), scalar(s(-2))]),
        prod(&[c_xi(), dn.clone(), dxi, scalar(s(-2))]),
        -&prod(&[c_xi(), dn, c_xi(), scalar(&h1() * &s(-3))]),
    ])
}

fn dxn_sigma_m1_dinv() -> E {
    add(&[
        prod(&[letter(Letter::DXiPrime), scalar(c(g(0, 1)) * s(-1))]),
        -&prod(&[c_xi(), scalar(&(&h1() * &c(g(0, 1))) * &s(-2))]),
    ])
}

fn pow2m2(slot: Slot, m: i64) -> Option<E> {
    let h = h1();
    let i = c(g(0, 1));
    let e = match slot {
        Slot::Top => scalar(s(1 - m)),
        Slot::TopDxi => scalar(&xp(&[0, 2 * (1 - m)]) * &s(-m)),
        Slot::TopDxi2 => scalar((&xp(&[-2, 0, 4 * m - 2]) * &s(-m - 1)).scale_scalar(&g(m - 1, 0))),
        Slot::TopDxn => scalar((&h * &s(-m)).scale_scalar(&g(1 - m, 0))),
        Slot::Next => {
            let xi_h = &xp(&[0, 1]) * &h;
            let inner = &(&(&xi_h * &s(-2)) * &i).scale_scalar(&gf(-(2 * m + 1), 2))
                - &(&(&xi_h * &s(-3)) * &i).scale_scalar(&g(2, 0));
            let first = (&s(2 - m) * &inner).scale_scalar(&g(m - 1, 0));
            let second = (&(&xi_h * &i) * &s(-m - 1)).scale_scalar(&g(-m * m + 3 * m - 2, 0));
            scalar(&first + &second)
        }
        Slot::NextAlt => {
            let xi_h_i = &(&xp(&[0, 1]) * &h) * &i;
            let a = (&xi_h_i * &s(-m)).scale_scalar(&gf(-(2 * m * m - m - 1), 2));
            let b = (&xi_h_i * &s(-m - 1)).scale_scalar(&g(-2 * (m - 1), 0));
            let d = (&xi_h_i * &s(-m - 1)).scale_scalar(&g(-(m * m - 3 * m + 2), 0));
            scalar(&(&a + &b) + &d)
        }
        _ => return None,
    };
    Some(e)
}

fn pow2m1(slot: Slot, m: i64) -> Option<E> {
    let i = c(g(0, 1));
    let h = h1();
    let dn = letter(Letter::DxN);
    let xi = letter(Letter::XiPrime);
    let dxi = letter(Letter::DXiPrime);
    let e = match slot {
        Slot::Top => mul(&c_xi(), &scalar(&i * &s(-m))),
        Slot::TopDxn => add(&[
            mul(&dxi, &scalar(&i * &s(-m))),
            -&mul(
                &c_xi(),
                &scalar((&(&i * &h) * &s(-m - 1)).scale_scalar(&g(m, 0))),
            ),
        ]),
        Slot::TopDxi => add(&[
            mul(&dn, &scalar(&i * &s(-m))),
            -&add(&[
                mul(
                    &xi,
                    &scalar((&(&i * &xp(&[0, 1])) * &s(-m - 1)).scale_scalar(&g(2 * m, 0))),
                ),
                mul(
                    &dn,
                    &scalar((&(&i * &xp(&[0, 0, 1])) * &s(-m - 1)).scale_scalar(&g(2 * m, 0))),
                ),
            ]),
        ]),
        Slot::Next => {
            let t1 = mul(
                &dn,
                &scalar((&h * &s(-m)).scale_scalar(&gf(-(2 * m + 1), 4))),
            );
            let t2 = mul(
                &dxi,
                &scalar((&xp(&[0, 1]) * &s(-m - 1)).scale_scalar(&g(-2 * m, 0))),
            );
            let bracket = add(&[
                prod(&[
                    xi.clone(),
                    dn.clone(),
                    scalar(
                        (&h * &s(-2)).scale_scalar(&GaussianRational::from_fracs((0, 1), (-1, 2))),
                    ),
                ]),
                mul(
                    &xi,
                    &scalar((&h * &s(-2)).scale_scalar(&(&g(0, -(2 * m + 1)) * &gf(1, 2)))),
                ),
                scalar((&(&h * &xp(&[0, 1])) * &s(-3)).scale_scalar(&g(0, -2))),
            ]);
            let t3 = prod(&[scalar((s(1 - m)).scale_scalar(&g(0, m))), c_xi(), bracket]);
            let t4 = mul(
                &c_xi(),
                &scalar((&(&h * &xp(&[0, 1])) * &s(-m - 2)).scale_scalar(&g(-(m * m + m), 0))),
            );
            add(&[t1, t2, t3, t4])
        }
        _ => return None,
    };
    Some(e)
}

fn cx_dinv(slot: Slot) -> Option<E> {
    let x = letter(Letter::XVec);
    let i = c(g(0, 1));
    let e = match slot {
        Slot::Top => mul(&x, &sigma_m1_dinv()),
        Slot::TopDxn => add(&[
            prod(&[letter(Letter::DXVec), c_xi(), scalar(&i * &s(-1))]),
            prod(&[x.clone(), letter(Letter::DXiPrime), scalar(&i * &s(-1))]),
            -&prod(&[x.clone(), c_xi(), scalar(&(&i * &h1()) * &s(-2))]),
        ]),
        Slot::Next => mul(&x, &sigma_m2_dinv()),
        _ => return None,
    };
    Some(e)
}

fn nabla(slot: Slot) -> Option<E> {
    match slot {
        Slot::Top => Some(scalar(&c(g(0, 1)) * &x_dot_xi())),
        Slot::Next => Some(letter(Letter::AX)),
        _ => None,
    }
}

fn nabla_dinv_parts(k: u8) -> Option<E> {
    let i = c(g(0, 1));
    match k {
        1 => Some(mul(&scalar(&i * &x_dot_xi()), &sigma_m2_dinv())),
        2 => Some(prod(&[letter(Letter::AX), c_xi(), scalar(&i * &s(-1))])),
        3 => Some(mul(&scalar(cs(sym(GeomSymbol::XN))), &dxn_sigma_m1_dinv())),
        _ => None,
    }
}

fn nabla_dinv(slot: Slot) -> Option<E> {
    let t = x_dot_xi();
    let h = h1();
    let e = match slot {
        Slot::Top => -&mul(&c_xi(), &scalar(&t * &s(-1))),
        Slot::TopDxn => add(&[
            -&mul(&c_xi(), &scalar(&dx_dot_xi() * &s(-1))),
            -&mul(&letter(Letter::DXiPrime), &scalar(&t * &s(-1))),
            mul(&c_xi(), &scalar(&(&h * &t) * &s(-2))),
        ]),
        Slot::TopDxnPrinted => {
            let base = nabla_dinv(Slot::TopDxn)?;
            let flip = mul(
                &letter(Letter::DxN),
                &scalar(
                    (&(&h * &cs(sym(GeomSymbol::XN))) * &(&xp(&[0, 0, 1]) * &s(-2)))
                        .scale_scalar(&g(-2, 0)),
                ),
            );
            &base + &flip
        }
        Slot::Next => add(&[
            nabla_dinv_parts(1)?,
            nabla_dinv_parts(2)?,
            nabla_dinv_parts(3)?,
        ]),
        Slot::Part(k) => nabla_dinv_parts(k)?,
        _ => return None,
    };
    Some(e)
}

fn nabla_dinv2_parts(k: u8) -> Option<E> {
    let i = c(g(0, 1));
    let h = h1();
    match k {
        1 => Some(mul(&letter(Letter::AX), &scalar(s(-1)))),
        2 => {
            let pair = prod(&[
                letter(Letter::XiPrime),
                letter(Letter::DxN),
                scalar((&h * &s(-2)).scale_scalar(&GaussianRational::from_fracs((0, 1), (1, 2)))),
            ]);
            let rest = scalar(
                (&(&h * &RatXi::poly(XiPoly::from_scalars(&[g(0, 0), g(0, 9), g(0, 0), g(0, 5)])))
                    * &s(-3))
                    .scale_scalar(&gf(-1, 2)),
            );
            Some(mul(&scalar(&i * &x_dot_xi()), &(&pair + &rest)))
        }
        3 => Some(scalar(
            (&(&h * &cs(sym(GeomSymbol::XN))) * &s(-2)).scale_scalar(&g(-1, 0)),
        )),
        _ => None,
    }
}

fn nabla_dinv2(slot: Slot) -> Option<E> {
    let i = c(g(0, 1));
    let t = x_dot_xi();
    let e = match slot {
        Slot::Top => scalar(&(&i * &t) * &s(-1)),
        Slot::TopDxn => {
            scalar(&(&(&i * &dx_dot_xi()) * &s(-1)) - &(&(&(&i * &h1()) * &t) * &s(-2)))
        }
        Slot::TopDxnPrinted => {
            scalar(&(&(&i * &dx_dot_xi()) * &s(-1)) - &(&(&(&i * &h1()) * &t) * &s(-1)))
        }
        Slot::Next => add(&[
            nabla_dinv2_parts(1)?,
            nabla_dinv2_parts(2)?,
            nabla_dinv2_parts(3)?,
        ]),
        Slot::Part(k) => nabla_dinv2_parts(k)?,
        _ => return None,
    };
    Some(e)
}

/// Build the requested symbol component at the boundary point.
pub fn build_symbol(operator: Operator, slot: Slot, m: u32) -> Result<SymbolEntry, SymbolError> {
    if m == 0 {
        return Err(SymbolError::ZeroM);
    }
    let mi = m as i64;
    let expr = match operator {
        Operator::DInv => match slot {
            Slot::Top => Some(sigma_m1_dinv()),
            Slot::TopDxn => Some(dxn_sigma_m1_dinv()),
            Slot::Next => Some(sigma_m2_dinv()),
            _ => None,
        },
        Operator::DInv2 => match slot {
            Slot::Top => Some(scalar(s(-1))),
            _ => None,
        },
        Operator::DPow2m2 => pow2m2(slot, mi),
        Operator::DPow2m1 => pow2m1(slot, mi),
        Operator::CXDInv => cx_dinv(slot),
        Operator::Nabla => nabla(slot),
        Operator::NablaDInv => nabla_dinv(slot),
        Operator::NablaDInv2 => nabla_dinv2(slot),
    };
    let expr = expr.ok_or_else(|| SymbolError::Unsupported {
        op: operator.to_string(),
        slot: slot.to_string(),
    })?;
    Ok(SymbolEntry {
        operator,
        slot,
        order: operator.top_order(m) + slot.order_shift(),
        expr,
        m,
    })
}

/// Every (operator, slot) pair the library encodes.
pub fn library_slots() -> Vec<(Operator, Slot)> {
    use Operator::*;
    use Slot::*;
    vec![
        (DInv, Top),
        (DInv, TopDxn),
        (DInv, Next),
        (DInv2, Top),
        (DPow2m2, Top),
        (DPow2m2, TopDxn),
        (DPow2m2, TopDxi),
        (DPow2m2, TopDxi2),
        (DPow2m2, Next),
        (DPow2m2, NextAlt),
        (DPow2m1, Top),
        (DPow2m1, TopDxn),
        (DPow2m1, TopDxi),
        (DPow2m1, Next),
        (CXDInv, Top),
        (CXDInv, TopDxn),
        (CXDInv, Next),
        (Nabla, Top),
        (Nabla, Next),
        (NablaDInv, Top),
        (NablaDInv, TopDxn),
        (NablaDInv, TopDxnPrinted),
        (NablaDInv, Next),
        (NablaDInv, Part(1)),
        (NablaDInv, Part(2)),
        (NablaDInv, Part(3)),
        (NablaDInv2, Top),
        (NablaDInv2, TopDxn),
        (NablaDInv2, TopDxnPrinted),
        (NablaDInv2, Next),
        (NablaDInv2, Part(1)),
        (NablaDInv2, Part(2)),
        (NablaDInv2, Part(3)),
    ]
}

fn derive_symbol_poly(p: &SymbolPoly) -> Result<SymbolPoly, SymbolError> {
    use GeomSymbol::*;
    p.flat_map_terms(|mono, coeff| {
        let mut out = SymbolPoly::zero();
        for (s, e) in mono.symbols() {
            let d = match s {
                XN => DXN,
                GXXI => DGXXI,
                VOLS => continue,
                other => return Err(SymbolError::Derivation(other.to_string())),
            };
            let rest = mono.without(s).expect("symbol present");
            let term = &SymbolPoly::term(
                rest,
                coeff.scale(&num_rational::BigRational::from_integer(e.into())),
            ) * &SymbolPoly::sym(d);
            out = &out + &term;
        }
        Ok(out)
    })
}

/// `d/dx_n` of a coefficient `N / S^p` at the boundary point, using
/// `d/dx_n S = h'(0) |xi'|^2 = h'(0)`.
fn derive_coeff(r: &RatXi) -> Result<RatXi, SymbolError> {
    let k = r.p().max(r.q());
    let lift = &XiPoly::linear_pow(&GaussianRational::i(), k - r.p())
        * &XiPoly::linear_pow(&-GaussianRational::i(), k - r.q());
    let num = r.num() * &lift;
    let dnum = XiPoly::new(
        num.coeffs()
            .iter()
            .map(derive_symbol_poly)
            .collect::<Result<_, _>>()?,
    );
    let first = RatXi::new(dnum, k, k);
    let second = RatXi::new(num.scale(&SymbolPoly::sym(GeomSymbol::H1)), k + 1, k + 1)
        .scale_scalar(&GaussianRational::int(-(k as i64)));
    Ok(&first + &second)
}

fn derive_letter(l: Letter) -> Result<Option<Letter>, SymbolError> {
    match l {
        Letter::XVec => Ok(Some(Letter::DXVec)),
        Letter::XiPrime => Ok(Some(Letter::DXiPrime)),
        Letter::DxN => Ok(None),
        other => Err(SymbolError::Derivation(other.to_string())),
    }
}

/// `d/dx_n` at the boundary point, by Leibniz over letters and coefficients.
pub fn xn_derive(expr: &CliffordExpr) -> Result<CliffordExpr, SymbolError> {
    let mut out = CliffordExpr::zero();
    for (w, coeff) in expr.terms() {
        out = &out + &CliffordExpr::term(w.clone(), derive_coeff(coeff)?);
        for (pos, l) in w.letters().iter().enumerate() {
            if let Some(dl) = derive_letter(*l)? {
                let mut letters = w.letters().to_vec();
                letters[pos] = dl;
                out = &out + &CliffordExpr::term(Word(letters), coeff.clone());
            }
        }
    }
    Ok(out)
}

/// How a library entry is recovered from other entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    XiDerivative {
        base: Slot,
        times: u32,
    },
    XnDerivative {
        base: Slot,
    },
    Equal {
        other: Slot,
    },
    /// `sigma(A) * sigma(B)` for entries of other operators
    Product {
        left: (Operator, Slot),
        right: (Operator, Slot),
    },
    /// a fixed letter times another entry
    LetterTimes {
        letter: Letter,
        right: (Operator, Slot),
    },
    /// `X_n * d/dx_n sigma(B)`
    NormalTransport {
        of: (Operator, Slot),
    },
    /// sum of the three parts
    PartSum,
}

/// The consistency rule attached to an entry, if any.
pub fn rule_for(op: Operator, slot: Slot) -> Option<Rule> {
    use Operator::*;
    use Slot::*;
    Some(match (op, slot) {
        (DPow2m2, TopDxi2) => Rule::XiDerivative {
            base: Top,
            times: 2,
        },
        (DPow2m2 | DPow2m1, TopDxi) => Rule::XiDerivative {
            base: Top,
            times: 1,
        },
        (_, TopDxn | TopDxnPrinted) => Rule::XnDerivative { base: Top },
        (DPow2m2, NextAlt) => Rule::Equal { other: Next },
        (CXDInv, Top) => Rule::LetterTimes {
            letter: Letter::XVec,
            right: (DInv, Top),
        },
        (CXDInv, Next) => Rule::LetterTimes {
            letter: Letter::XVec,
            right: (DInv, Next),
        },
        (NablaDInv, Top) => Rule::Product {
            left: (Nabla, Top),
            right: (DInv, Top),
        },
        (NablaDInv, Part(1)) => Rule::Product {
            left: (Nabla, Top),
            right: (DInv, Next),
        },
        (NablaDInv, Part(2)) => Rule::Product {
            left: (Nabla, Next),
            right: (DInv, Top),
        },
        (NablaDInv, Part(3)) => Rule::NormalTransport { of: (DInv, Top) },
        (NablaDInv2, Top) => Rule::Product {
            left: (Nabla, Top),
            right: (DInv2, Top),
        },
        (NablaDInv2, Part(1)) => Rule::Product {
            left: (Nabla, Next),
            right: (DInv2, Top),
        },
        (NablaDInv2, Part(3)) => Rule::NormalTransport { of: (DInv2, Top) },
        (NablaDInv | NablaDInv2, Next) => Rule::PartSum,
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeriveOutcome {
    pub operator: Operator,
    pub slot: Slot,
    pub m: u32,
    pub rule: Rule,
    pub passed: bool,
    /// `encoded - derived`, rendered, when they differ
    pub difference: Option<String>,
}

fn expected_by_rule(entry: &SymbolEntry, rule: &Rule) -> Result<CliffordExpr, SymbolError> {
    let m = entry.m;
    let get = |op: Operator, slot: Slot| build_symbol(op, slot, m).map(|e| e.expr);
    Ok(match rule {
        Rule::XiDerivative { base, times } => {
            get(entry.operator, *base)?.map_coeffs(|r| r.diff_n(*times))
        }
        Rule::XnDerivative { base } => xn_derive(&get(entry.operator, *base)?)?,
        Rule::Equal { other } => get(entry.operator, *other)?,
        Rule::Product { left, right } => get(left.0, left.1)?
            .mul(&get(right.0, right.1)?)
            .map_err(|e| SymbolError::Derivation(e.to_string()))?,
        Rule::LetterTimes { letter, right } => CliffordExpr::letter(*letter)
            .mul(&get(right.0, right.1)?)
            .map_err(|e| SymbolError::Derivation(e.to_string()))?,
        Rule::NormalTransport { of } => {
            xn_derive(&get(of.0, of.1)?)?.scale_poly(&SymbolPoly::sym(GeomSymbol::XN))
        }
        Rule::PartSum => (1..=3).try_fold(CliffordExpr::zero(), |acc, k| {
            get(entry.operator, Slot::Part(k)).map(|p| &acc + &p)
        })?,
    })
}

/// Recompute an entry from its siblings and compare exactly.
pub fn derive_check(entry: &SymbolEntry) -> Result<DeriveOutcome, SymbolError> {
    let rule = rule_for(entry.operator, entry.slot).ok_or_else(|| SymbolError::Unsupported {
        op: entry.operator.to_string(),
        slot: format!("{} (no sibling rule)", entry.slot),
    })?;
    let expected = expected_by_rule(entry, &rule)?;
    let diff = &entry.expr + &(-&expected);
    Ok(DeriveOutcome {
        operator: entry.operator,
        slot: entry.slot,
        m: entry.m,
        rule,
        passed: diff.is_zero(),
        difference: (!diff.is_zero()).then(|| diff.to_string()),
    })
}

/// Run every sibling rule of the library at `m`.
pub fn library_checks(m: u32) -> Result<Vec<DeriveOutcome>, SymbolError> {
    library_slots()
        .into_iter()
        .filter(|(op, slot)| rule_for(*op, *slot).is_some())
        .map(|(op, slot)| derive_check(&build_symbol(op, slot, m)?))
        .collect()
}

fn xi_prime_weight(mono: &crate::arith::Monomial) -> i64 {
    use GeomSymbol::*;
    [GXXI, DGXXI, TRAX_XI_DN]
        .iter()
        .map(|s| mono.exponent(*s) as i64)
        .sum()
}

/// Largest total homogeneity degree over the terms of `expr`, counting
/// `xi_n`, letters `c(xi')`, `dxn c(xi')` and the `xi'`-linear symbols as degree one.
pub fn homogeneity(expr: &CliffordExpr) -> Option<i64> {
    let mut best: Option<i64> = None;
    for (w, r) in expr.terms() {
        let letter_w = w
            .letters()
            .iter()
            .filter(|l| matches!(l, Letter::XiPrime | Letter::DXiPrime))
            .count() as i64;
        let poles = (r.p() + r.q()) as i64;
        for (k, c) in r.num().coeffs().iter().enumerate() {
            for (mono, _) in c.terms() {
                let d = letter_w + k as i64 + xi_prime_weight(mono) - poles;
                best = Some(best.map_or(d, |b| b.max(d)));
            }
        }
    }
    best
}

/// Whether an entry is a printed variant kept only to report its deviation.
pub fn is_printed_variant(slot: Slot) -> bool {
    matches!(slot, Slot::TopDxnPrinted)
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub operator: Operator,
    pub slot: Slot,
    pub tag: String,
    pub source: &'static str,
    pub note: Option<&'static str>,
}

fn source_of(op: Operator, slot: Slot) -> (&'static str, Option<&'static str>) {
    use Operator::*;
    use Slot::*;
    match (op, slot) {
        (DInv, Top) => ("leading symbol of the inverse Dirac operator", None),
        (DInv, TopDxn) => ("normal derivative of that leading symbol", None),
        (DInv, Next) => ("subleading inverse symbol from the composition formula", None),
        (DInv2, Top) => ("leading symbol of the inverse Laplacian", None),
        (DPow2m2, Top) => ("leading symbol of D^-(2m-2)", None),
        (DPow2m2, TopDxn) => ("stated normal derivative of that symbol", None),
        (DPow2m2, TopDxi) => ("stated first xi_n-derivative", None),
        (DPow2m2, TopDxi2) => ("stated second xi_n-derivative", None),
        (DPow2m2, Next) => ("subleading symbol quoted from the reference, first arrangement", None),
        (DPow2m2, NextAlt) => ("subleading symbol quoted from the reference, second arrangement", None),
        (DPow2m1, Top) => ("leading symbol of D^-(2m-1)", None),
        (DPow2m1, TopDxn) => ("stated normal derivative", None),
        (DPow2m1, TopDxi) => ("stated xi_n-derivative", None),
        (DPow2m1, Next) => (
            "subleading symbol quoted from the reference",
            Some("printed power n/2 of 1+xi_n^2 read as m, the value that makes the term homogeneous"),
        ),
        (CXDInv, Top) => ("leading symbol of c(X)D^-1", None),
        (CXDInv, TopDxn) => ("normal derivative of the leading symbol", None),
        (CXDInv, Next) => ("c(X) times the subleading inverse symbol", None),
        (Nabla, Top) => ("leading symbol of the covariant derivative", None),
        (Nabla, Next) => ("zeroth-order part A(X) of the covariant derivative", None),
        (NablaDInv, Top) => ("leading symbol of nabla_X D^-1", None),
        (NablaDInv, TopDxn) => (
            "normal derivative of the leading symbol, recomputed by Leibniz",
            Some("the printed expansion has the opposite sign on its final h'(0) c(dx_n) term"),
        ),
        (NablaDInv, TopDxnPrinted) => ("normal derivative exactly as printed", Some("kept to report the sign deviation")),
        (NablaDInv, Next) => ("subleading symbol as the sum of its three parts", None),
        (NablaDInv, Part(1)) => ("first part: leading nabla symbol times subleading inverse symbol", None),
        (NablaDInv, Part(2)) => ("second part: A(X) times the leading inverse symbol", None),
        (NablaDInv, Part(3)) => ("third part: normal transport of the leading inverse symbol", None),
        (NablaDInv2, Top) => ("leading symbol of nabla_X D^-2", None),
        (NablaDInv2, TopDxn) => (
            "normal derivative of the leading symbol, recomputed by Leibniz",
            Some("the printed expansion has |xi|^2 where Leibniz gives |xi|^4 in the h'(0) term"),
        ),
        (NablaDInv2, TopDxnPrinted) => ("normal derivative exactly as printed", Some("kept to report the power deviation")),
        (NablaDInv2, Next) => ("subleading symbol as the sum of its three parts", None),
        (NablaDInv2, Part(1)) => ("first part: A(X) times the leading inverse Laplacian symbol", None),
        (NablaDInv2, Part(2)) => ("second part: leading nabla symbol times the order -3 Laplacian symbol", None),
        (NablaDInv2, Part(3)) => ("third part: normal transport of the leading inverse Laplacian symbol", None),
        _ => ("unlisted", None),
    }
}

/// Machine-readable index of the library.
pub fn manifest() -> Vec<ManifestEntry> {
    library_slots()
        .into_iter()
        .map(|(op, slot)| {
            let (source, note) = source_of(op, slot);
            ManifestEntry {
                operator: op,
                slot,
                tag: format!("{op} / {slot}"),
                source,
                note,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_dirac_leading_symbol() {
        let e = build_symbol(Operator::DInv, Slot::Top, 3).unwrap();
        let i = RatXi::scalar(GaussianRational::i());
        let want = &CliffordExpr::term(Word::of(&[Letter::XiPrime]), &i * &RatXi::s_pow(-1))
            + &CliffordExpr::term(
                Word::of(&[Letter::DxN]),
                &(&i * &RatXi::x()) * &RatXi::s_pow(-1),
            );
        assert_eq!(e.expr, want);
        assert_eq!(e.order, -1);
    }

    #[test]
    fn second_xi_derivative_entry() {
        let m = 4;
        let e = build_symbol(Operator::DPow2m2, Slot::TopDxi2, m).unwrap();
        let want = RatXi::new(XiPoly::from_ints(&[-2, 0, 14]), 5, 5)
            .scale_scalar(&GaussianRational::int(3));
        assert_eq!(e.expr, CliffordExpr::scalar(want));
    }

    #[test]
    fn degenerate_power_is_identity() {
        let e = build_symbol(Operator::DPow2m2, Slot::Top, 1).unwrap();
        assert_eq!(e.expr, CliffordExpr::scalar(RatXi::one()));
    }

    #[test]
    fn bivector_part() {
        let e = build_symbol(Operator::NablaDInv2, Slot::Part(1), 2).unwrap();
        assert_eq!(
            e.expr,
            CliffordExpr::term(Word::of(&[Letter::AX]), RatXi::s_pow(-1))
        );
    }

    #[test]
    fn unknown_slot_errors() {
        assert!(matches!(
            build_symbol(Operator::DInv2, Slot::TopDxi2, 2),
            Err(SymbolError::Unsupported { .. })
        ));
        assert_eq!(
            build_symbol(Operator::DInv, Slot::Top, 0),
            Err(SymbolError::ZeroM)
        );
    }

    #[test]
    fn derivative_entries_reproduce() {
        for m in 1..=4 {
            for out in library_checks(m).unwrap() {
                let printed = is_printed_variant(out.slot);
                assert_eq!(
                    out.passed, !printed,
                    "{:?} {:?} m={m}: {:?}",
                    out.operator, out.slot, out.difference
                );
            }
        }
    }

    #[test]
    fn perturbed_entry_fails() {
        let mut e = build_symbol(Operator::DPow2m1, Slot::TopDxi, 3).unwrap();
        e.expr = &e.expr + &CliffordExpr::scalar(RatXi::s_pow(-4));
        let out = derive_check(&e).unwrap();
        assert!(!out.passed);
        assert!(out.difference.is_some());
    }

    #[test]
    fn orders_are_homogeneous() {
        for m in 1..=6 {
            for (op, slot) in library_slots() {
                let e = build_symbol(op, slot, m).unwrap();
                // x_n-derivatives and single parts may carry a hidden |xi'|^2
                let exact = !matches!(slot, Slot::Part(_) | Slot::TopDxn | Slot::TopDxnPrinted);
                match homogeneity(&e.expr) {
                    Some(h) if exact => assert_eq!(h, e.order, "{op} {slot} m={m}"),
                    Some(h) => assert!(h <= e.order, "{op} {slot} m={m}"),
                    None => {}
                }
            }
        }
    }
}
