//! Printed renderings of each boundary density and printed intermediate integrands,
//! transcribed as data so they can be compared with the computed values.

use serde::Serialize;

use crate::arith::{GaussianRational, GeomSymbol, SymbolPoly};
use crate::coefficients::{eval_by_oracle, eval_closed_form, CoeffName};
use crate::pipeline::case::{CaseId, Theorem};
use crate::xi::{RatXi, XiPoly};

/// Geometric factor multiplying one displayed term.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `d/dx_n X_n`
    Dxn,
    /// `X_n h'(0)`
    XnH1,
    /// `X_n` with no curvature factor
    Xn,
    /// no geometric factor at all
    Bare,
}

impl Target {
    /// Monomial times the sphere volume.
    pub fn monomial(self) -> SymbolPoly {
        use GeomSymbol::*;
        match self {
            Target::Dxn => SymbolPoly::monomial(&[DXN, VOLS]),
            Target::XnH1 => SymbolPoly::monomial(&[XN, H1, VOLS]),
            Target::Xn => SymbolPoly::monomial(&[XN, VOLS]),
            Target::Bare => SymbolPoly::monomial(&[VOLS]),
        }
    }
}

/// `factor * coeff * target`, a term whose density is `pi` times its value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DisplayTerm {
    pub target: Target,
    pub factor: GaussianRational,
    pub coeff: CoeffName,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "snake_case")]
pub enum RenderingKind {
    /// value of one case as displayed where it is computed
    Case(CaseId),
    /// one summand of the split subleading left symbol
    Subterm(u8),
    /// the theorem statement in the introduction
    Headline,
    /// the theorem statement at the end of its section
    Restated,
    /// the headline with the coefficients its case computation produces but the statement omits
    Amended,
    /// the sum of the displayed case values as printed before the statement
    CaseSum,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffSource {
    Oracle,
    Printed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rendering {
    pub theorem: Theorem,
    pub kind: RenderingKind,
    pub terms: Vec<DisplayTerm>,
}

impl Rendering {
    /// Value times `2^m`, on the same footing as a case's `reduced`.
    pub fn value(&self, m: u32, source: CoeffSource) -> SymbolPoly {
        let two_m = GaussianRational::int(2)
            .pow(i64::from(m))
            .expect("nonzero base");
        self.terms
            .iter()
            .map(|t| {
                let c = match source {
                    CoeffSource::Oracle => eval_by_oracle(t.coeff, m),
                    CoeffSource::Printed => eval_closed_form(t.coeff, m),
                };
                t.target.monomial().scale(&(&(&t.factor * &c) * &two_m))
            })
            .sum()
    }
}

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::frac(n, d)
}

fn qi(n: i64, d: i64) -> GaussianRational {
    &GaussianRational::i() * &q(n, d)
}

fn z(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

/// `1 / (m + k)!`
fn inv_fact(m: u32, k: u32) -> GaussianRational {
    let f: i64 = (1..=i64::from(m + k)).product();
    q(1, f)
}

fn mul(factors: &[GaussianRational]) -> GaussianRational {
    factors
        .iter()
        .fold(GaussianRational::int(1), |acc, f| &acc * f)
}

fn term(target: Target, factors: &[GaussianRational], coeff: CoeffName) -> DisplayTerm {
    DisplayTerm {
        target,
        factor: mul(factors),
        coeff,
    }
}

fn xh(factors: &[GaussianRational], coeff: CoeffName) -> DisplayTerm {
    term(Target::XnH1, factors, coeff)
}

/// Every printed rendering of the theorem, evaluated at `m`.
pub fn renderings(theorem: Theorem, m: u32) -> Vec<Rendering> {
    use CoeffName::*;
    let mi = i64::from(m);
    let (f1, f2, f3) = (inv_fact(m, 1), inv_fact(m, 2), inv_fact(m, 3));
    let i = GaussianRational::i();
    let two_i = z(0, 2);
    let n = |k: i64| GaussianRational::int(k);
    let mut out = Vec::new();
    let mut push = |kind, terms| {
        out.push(Rendering {
            theorem,
            kind,
            terms,
        })
    };
    push(RenderingKind::Case(CaseId::I), Vec::new());
    match theorem {
        Theorem::T1 => {
            let m1 = n(mi - 1);
            let c0 = n(2 * mi * mi - mi - 1);
            let c1 = n(mi * mi - 2 * mi + 1);
            push(
                RenderingKind::Case(CaseId::II),
                vec![
                    term(Target::Dxn, &[m1.clone(), f1.clone()], A0),
                    term(Target::Xn, &[m1.clone(), qi(1, 2), f2.clone()], A1),
                ],
            );
            push(
                RenderingKind::Case(CaseId::III),
                vec![xh(&[m1.clone(), i.clone(), f2.clone()], B0)],
            );
            push(
                RenderingKind::Case(CaseId::IV),
                vec![
                    xh(&[-&c0, q(1, 4), f1.clone()], C0),
                    xh(&[n(-2), c1.clone(), f2.clone()], C1),
                ],
            );
            push(
                RenderingKind::Case(CaseId::V),
                vec![xh(&[-&m1, q(1, 2), f2.clone()], D0)],
            );
            let tail = [
                xh(&[i.clone(), c0.clone(), qi(1, 4), f1.clone()], C0),
                xh(&[i.clone(), c1.clone(), two_i.clone(), f2.clone()], C1),
                xh(&[i.clone(), m1.clone(), qi(1, 2), f2.clone()], D0),
            ];
            let head = |a1: Target, with_m1: bool| {
                let g = if with_m1 { m1.clone() } else { n(1) };
                let mut v = vec![
                    term(Target::Dxn, &[g.clone(), f1.clone()], A0),
                    term(a1, &[g.clone(), qi(1, 2), f2.clone()], A1),
                    xh(&[g, i.clone(), f2.clone()], B0),
                ];
                v.extend(tail.iter().cloned());
                v
            };
            push(RenderingKind::Headline, head(Target::Xn, true));
            push(RenderingKind::Restated, head(Target::Xn, false));
            push(RenderingKind::CaseSum, head(Target::Bare, true));
        }
        Theorem::T2 => {
            let g = [
                xh(&[qi(-1, 8), two_i.clone(), f2.clone()], G0),
                xh(&[qi(1, 4), two_i.clone(), f2.clone()], G1),
                xh(&[qi(-1, 2), two_i.clone(), f3.clone()], G2),
                xh(&[qi(-1, 4), two_i.clone(), f2.clone()], G3),
            ];
            let h1 = z(-mi * mi, mi * mi + mi);
            let h1 = &h1 + &n(3 * mi);
            let h = vec![
                xh(&[n(-(2 * mi * mi - mi)), q(1, 4), f2.clone()], H0),
                xh(&[h1.clone(), i.clone(), f3.clone()], H1),
                xh(&[n(-(2 * mi * mi + 3 * mi + 1)), qi(1, 4), f2.clone()], H2),
                xh(&[n(-(3 * mi + 1)), i.clone(), f2.clone()], H3),
            ];
            push(
                RenderingKind::Case(CaseId::II),
                vec![
                    term(Target::Dxn, &[qi(-1, 2), f2.clone()], E0),
                    xh(&[qi(-1, 2), f3.clone()], E1),
                ],
            );
            push(
                RenderingKind::Case(CaseId::III),
                vec![xh(&[qi(1, 2), f3.clone()], F0)],
            );
            push(RenderingKind::Case(CaseId::IV), g.to_vec());
            push(RenderingKind::Subterm(1), g[..3].to_vec());
            push(RenderingKind::Subterm(2), Vec::new());
            push(RenderingKind::Subterm(3), vec![g[3].clone()]);
            push(RenderingKind::Case(CaseId::V), h.clone());
            let mut head = vec![
                term(Target::Dxn, &[q(-1, 4), two_i.clone(), f2.clone()], E0),
                xh(&[qi(-1, 2), f3.clone()], E1),
                xh(&[qi(1, 2), f3.clone()], F0),
                xh(&[q(1, 4), f3.clone()], G0),
                xh(&[q(1, 2), f2.clone()], G1),
            ];
            head.extend(h.iter().cloned());
            push(RenderingKind::Headline, head.clone());
            push(RenderingKind::Restated, head.clone());
            let mut amended = head;
            amended.push(xh(std::slice::from_ref(&f3), G2));
            amended.push(xh(&[q(1, 2), f2.clone()], G3));
            push(RenderingKind::Amended, amended);
            push(
                RenderingKind::CaseSum,
                vec![
                    term(Target::Dxn, &[q(-1, 4), two_i.clone(), f2.clone()], E0),
                    xh(&[q(-1, 4), two_i.clone(), f3.clone()], E1),
                    xh(&[q(1, 4), two_i.clone(), f3.clone()], F0),
                    xh(&[qi(-1, 8), two_i.clone(), f3.clone()], G0),
                    xh(&[qi(-1, 4), two_i.clone(), f2.clone()], G1),
                    xh(
                        &[n(2 * mi * mi - mi), qi(1, 8), two_i.clone(), f2.clone()],
                        H0,
                    ),
                    xh(&[h1, q(1, 2), two_i.clone(), f3.clone()], H1),
                    xh(
                        &[
                            n(-(2 * mi * mi + 3 * mi + 1)),
                            q(1, 8),
                            two_i.clone(),
                            f2.clone(),
                        ],
                        H2,
                    ),
                    xh(&[n(-(3 * mi + 1)), q(1, 2), two_i.clone(), f2.clone()], H3),
                ],
            );
        }
        Theorem::T3 => {
            let m1 = n(mi - 1);
            let k0 = n(2 * mi * mi + 3 * mi - 5);
            let k1 = n(mi * mi - 3 * mi + 2);
            push(
                RenderingKind::Case(CaseId::II),
                vec![
                    term(Target::Dxn, &[-&m1, i.clone(), f1.clone()], I0),
                    xh(&[m1.clone(), qi(1, 2), f2.clone()], I1),
                ],
            );
            push(
                RenderingKind::Case(CaseId::III),
                vec![xh(&[-&m1, qi(1, 2), f2.clone()], J0)],
            );
            push(
                RenderingKind::Case(CaseId::IV),
                vec![
                    xh(&[k0.clone(), q(1, 2), f1.clone()], K0),
                    xh(&[k1.clone(), f2.clone()], K1),
                ],
            );
            push(
                RenderingKind::Case(CaseId::V),
                vec![xh(&[m1.clone(), f2.clone()], L0)],
            );
            let head = vec![
                term(Target::Dxn, &[-&m1, i.clone(), f1.clone()], I0),
                xh(&[m1.clone(), qi(1, 2), f2.clone()], I1),
                xh(&[-&m1, i.clone(), f2.clone()], J0),
                xh(&[k0, q(1, 2), f1.clone()], K0),
                xh(&[k1, f2.clone()], K1),
                xh(&[m1, two_i, f2], L0),
            ];
            push(RenderingKind::Headline, head.clone());
            push(RenderingKind::Restated, head.clone());
            push(RenderingKind::CaseSum, head);
        }
    }
    out
}

/// Which intermediate of the computation a printed integrand states.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    /// before the `xi_n`-derivatives are moved, restricted to the listed subterms when non-empty
    Pre,
    /// after every `xi_n`-derivative sits on the projected factor, sign included
    Post,
}

/// A printed sphere-reduced integrand, times `VOLS * 2^m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fixture {
    pub theorem: Theorem,
    pub case: CaseId,
    pub form: Form,
    pub subterms: Vec<u8>,
    pub integrand: RatXi,
}

/// `coeff * sum_k num[k] xi^k / ((xi - i)^p (xi + i)^q)`
fn frac(
    mono: &SymbolPoly,
    coeff: &GaussianRational,
    num: &[GaussianRational],
    p: u32,
    q: u32,
) -> RatXi {
    RatXi::new(
        XiPoly::new(num.iter().map(|c| mono.scale(&(c * coeff))).collect()),
        p,
        q,
    )
}

fn total(parts: Vec<RatXi>, m: u32) -> RatXi {
    let two_m = GaussianRational::int(2)
        .pow(i64::from(m))
        .expect("nonzero base");
    parts
        .into_iter()
        .fold(RatXi::zero(), |a, b| a + b)
        .scale_scalar(&two_m)
}

/// Every printed intermediate integrand of the theorem at `m`.
pub fn fixtures(theorem: Theorem, m: u32) -> Vec<Fixture> {
    let mi = i64::from(m);
    let dxn = Target::Dxn.monomial();
    let xnh = Target::XnH1.monomial();
    let n = |k: i64| GaussianRational::int(k);
    let zz = |re: i64, im: i64| z(re, im);
    let i = GaussianRational::i();
    let one = n(1);
    let fx = |case, form, subterms: Vec<u8>, parts| Fixture {
        theorem,
        case,
        form,
        subterms,
        integrand: total(parts, m),
    };
    match theorem {
        Theorem::T1 => vec![
            fx(
                CaseId::II,
                Form::Pre,
                vec![],
                vec![
                    frac(
                        &dxn,
                        &mul(&[qi(-1, 2), n(mi - 1)]),
                        &[n(-2), n(0), n(4 * mi - 2)],
                        m + 2,
                        m + 1,
                    ),
                    frac(
                        &xnh,
                        &mul(&[qi(1, 4), n(mi - 1)]),
                        std::slice::from_ref(&one),
                        m + 3,
                        m + 1,
                    ),
                ],
            ),
            fx(
                CaseId::III,
                Form::Post,
                vec![],
                vec![frac(
                    &xnh,
                    &mul(&[-&i, n(1 - mi)]),
                    std::slice::from_ref(&one),
                    m + 3,
                    m,
                )],
            ),
            fx(
                CaseId::IV,
                Form::Post,
                vec![],
                vec![
                    frac(
                        &xnh,
                        &mul(&[q(1, 4), n(2 * mi * mi - mi - 1)]),
                        &[n(0), one.clone()],
                        m + 2,
                        m,
                    ),
                    frac(
                        &xnh,
                        &n(mi * mi - 2 * mi + 1),
                        &[n(0), one.clone()],
                        m + 3,
                        m + 1,
                    ),
                ],
            ),
            fx(
                CaseId::V,
                Form::Pre,
                vec![],
                vec![frac(
                    &xnh,
                    &mul(&[q(1, 4), n(1 - mi)]),
                    &[n(0), zz(0, 5), one.clone()],
                    m + 3,
                    m,
                )],
            ),
        ],
        Theorem::T2 => vec![
            fx(
                CaseId::II,
                Form::Post,
                vec![],
                vec![
                    frac(&dxn, &q(1, 2), &[i.clone(), n(-1)], m + 3, m),
                    frac(&xnh, &q(1, 2), &[n(4), zz(0, 9), n(-2)], m + 4, m),
                ],
            ),
            fx(
                CaseId::III,
                Form::Post,
                vec![],
                vec![frac(
                    &xnh,
                    &q(1, 2),
                    &[zz(2 * mi, 1), zz(2 * mi, -2 * mi), i.clone()],
                    m + 4,
                    m + 1,
                )],
            ),
            fx(
                CaseId::IV,
                Form::Pre,
                vec![1],
                vec![
                    frac(&xnh, &q(1, 8), &[n(0), zz(0, -5), n(3)], m + 3, m),
                    frac(
                        &xnh,
                        &q(-1, 4),
                        &[n(0), n(0), n(mi), zz(0, -4 * mi), n(3 * mi)],
                        m + 3,
                        m,
                    ),
                    frac(
                        &xnh,
                        &q(1, 2),
                        &[n(0), n(0), n(3 * mi), n(0), zz(0, 2 * mi)],
                        m + 4,
                        m + 1,
                    ),
                ],
            ),
            fx(
                CaseId::IV,
                Form::Pre,
                vec![3],
                vec![frac(
                    &xnh,
                    &q(1, 4),
                    &[i.clone(), n(2 * mi), i.clone()],
                    m + 3,
                    m + 1,
                )],
            ),
            fx(
                CaseId::V,
                Form::Post,
                vec![],
                vec![
                    frac(
                        &xnh,
                        &mul(&[qi(1, 8), n(2 * mi * mi - mi)]),
                        &[n(0), n(0), one.clone()],
                        m + 3,
                        m + 1,
                    ),
                    frac(
                        &xnh,
                        &mul(&[q(1, 2), zz(mi * mi + mi, mi * mi - 3 * mi)]),
                        &[n(0), one.clone()],
                        m + 4,
                        m + 2,
                    ),
                    frac(
                        &xnh,
                        &mul(&[qi(1, 8), n(2 * mi * mi + 3 * mi + 1)]),
                        &[n(0), n(0), one.clone()],
                        m + 3,
                        m + 1,
                    ),
                    frac(
                        &xnh,
                        &mul(&[qi(1, 8), n(3 * mi + 1)]),
                        std::slice::from_ref(&one),
                        m + 3,
                        m + 1,
                    ),
                ],
            ),
        ],
        Theorem::T3 => vec![
            fx(
                CaseId::II,
                Form::Pre,
                vec![],
                vec![
                    frac(
                        &dxn,
                        &mul(&[i.clone(), n(mi - 1)]),
                        &[n(-1), n(0), n(2 * mi - 1)],
                        m + 2,
                        m + 1,
                    ),
                    frac(
                        &xnh,
                        &n(mi - 1),
                        &[n(-1), n(0), n(2 * mi - 1)],
                        m + 3,
                        m + 1,
                    ),
                ],
            ),
            fx(
                CaseId::III,
                Form::Post,
                vec![],
                vec![frac(
                    &xnh,
                    &mul(&[i.clone(), n(1 - mi)]),
                    std::slice::from_ref(&one),
                    m + 3,
                    m,
                )],
            ),
            fx(
                CaseId::IV,
                Form::Post,
                vec![],
                vec![
                    frac(
                        &xnh,
                        &mul(&[q(-1, 4), n(2 * mi * mi - mi - 1)]),
                        &[n(0), one.clone()],
                        m + 2,
                        m,
                    ),
                    frac(&xnh, &n(1 - mi), &[n(0), one.clone()], m + 2, m),
                    frac(
                        &xnh,
                        &mul(&[q(-1, 2), n(mi * mi - 3 * mi + 2)]),
                        &[n(0), one.clone()],
                        m + 3,
                        m,
                    ),
                ],
            ),
            fx(
                CaseId::V,
                Form::Pre,
                vec![2, 3],
                vec![frac(
                    &xnh,
                    &mul(&[q(1, 2), n(1 - mi)]),
                    &[n(0), zz(0, 2), one.clone(), zz(0, 2)],
                    m + 3,
                    m,
                )],
            ),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_theorem_has_all_renderings() {
        for th in Theorem::ALL {
            let r = renderings(th, 3);
            for c in CaseId::ALL {
                assert!(
                    r.iter().any(|x| x.kind == RenderingKind::Case(c)),
                    "{th} {c}"
                );
            }
            for k in [
                RenderingKind::Headline,
                RenderingKind::Restated,
                RenderingKind::CaseSum,
            ] {
                assert!(r.iter().any(|x| x.kind == k));
            }
        }
    }

    #[test]
    fn degenerate_factor_kills_t1_headline() {
        let r = renderings(Theorem::T1, 1);
        let head = r
            .iter()
            .find(|x| x.kind == RenderingKind::Headline)
            .unwrap();
        for src in [CoeffSource::Oracle, CoeffSource::Printed] {
            assert!(head.value(1, src).is_zero());
        }
    }

    #[test]
    fn fixture_shapes() {
        let f = fixtures(Theorem::T3, 2);
        assert_eq!(f.len(), 4);
        assert_eq!((f[1].integrand.p(), f[1].integrand.q()), (5, 2));
        assert_eq!(f[3].subterms, vec![2, 3]);
    }
}
