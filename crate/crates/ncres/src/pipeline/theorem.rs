//! Sum of the five cases of one theorem, checked against its printed renderings.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{Assignment, GaussianRational, GeomSymbol, Monomial, SymbolPoly};
use crate::coefficients::{errata_row, CoeffName, ErrataRow};
use crate::error::PipelineError;
use crate::par::{ordered_map, ExecMode};
use crate::pipeline::case::{
    run_case, span_monomials, CaseId, CaseSpec, CaseTermReport, CheckKind, OracleStatus,
    RunOptions, Theorem,
};
use crate::pipeline::printed::{fixtures, renderings, CoeffSource, Fixture, Form, RenderingKind};
use crate::xi::{contour_by_partial_fractions, contour_gamma_plus, RatXi};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonomialComparison {
    pub monomial: String,
    pub computed: GaussianRational,
    pub rendered: GaussianRational,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RenderingComparison {
    pub rendering: RenderingKind,
    pub source: CoeffSource,
    pub computed: SymbolPoly,
    pub rendered: SymbolPoly,
    pub per_monomial: Vec<MonomialComparison>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Anchor {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A printed intermediate integrand against the computed one; never fails a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureComparison {
    pub case: CaseId,
    pub form: Form,
    pub subterms: Vec<u8>,
    pub printed: RatXi,
    pub computed: RatXi,
    pub integrand_matches: bool,
    pub printed_integral: SymbolPoly,
    pub computed_integral: SymbolPoly,
    pub integral_matches: bool,
}

/// Whether a theorem's printed combination matches exactly when its printed cases do.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ImplicationChain {
    pub case_displays: Vec<(CaseId, bool)>,
    pub all_cases_match: bool,
    pub headline_matches: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub m: u32,
    pub cases: Vec<CaseTermReport>,
    /// sum of the case values; the density is `pi` times this
    pub totals: SymbolPoly,
    pub identity: OracleStatus,
    pub linearity: OracleStatus,
    pub comparisons: Vec<RenderingComparison>,
    pub anchors: Vec<Anchor>,
    pub fixtures: Vec<FixtureComparison>,
    pub errata: Vec<ErrataRow>,
    pub implication: ImplicationChain,
}

impl TheoremReport {
    /// Every self-consistency check passed; printed mismatches do not count.
    pub fn internal_ok(&self) -> bool {
        self.cases.iter().all(CaseTermReport::all_passed)
            && self.identity.passed
            && self.linearity.passed
            && self.anchors.iter().all(|a| a.passed)
    }

    pub fn internal_failures(&self) -> Vec<String> {
        let tag = format!("{} m={}", self.theorem, self.m);
        let cases = self.cases.iter().flat_map(|c| {
            c.checks
                .iter()
                .filter(|s| !s.passed)
                .map(move |s| format!("case {}: {:?}: {}", c.spec.case, s.check, s.detail))
        });
        let own = [&self.identity, &self.linearity]
            .into_iter()
            .filter(|s| !s.passed)
            .map(|s| format!("{:?}: {}", s.check, s.detail));
        let anchors = self
            .anchors
            .iter()
            .filter(|a| !a.passed)
            .map(|a| format!("anchor {}: {}", a.name, a.detail));
        cases
            .chain(own)
            .chain(anchors)
            .map(|s| format!("{tag} {s}"))
            .collect()
    }

    pub fn comparison(
        &self,
        rendering: RenderingKind,
        source: CoeffSource,
    ) -> Option<&RenderingComparison> {
        self.comparisons
            .iter()
            .find(|c| c.rendering == rendering && c.source == source)
    }

    pub fn case(&self, case: CaseId) -> &CaseTermReport {
        &self.cases[case as usize]
    }
}

fn compare(computed: &SymbolPoly, rendered: &SymbolPoly) -> (Vec<MonomialComparison>, bool) {
    let monos: BTreeSet<Monomial> = computed
        .terms()
        .chain(rendered.terms())
        .map(|(m, _)| *m)
        .collect();
    let rows: Vec<MonomialComparison> = monos
        .iter()
        .map(|m| {
            let (c, r) = (computed.coeff(m), rendered.coeff(m));
            MonomialComparison {
                monomial: m.to_string(),
                matches: c == r,
                computed: c,
                rendered: r,
            }
        })
        .collect();
    let all = rows.iter().all(|r| r.matches);
    (rows, all)
}

fn basis(symbols: &[GeomSymbol]) -> Assignment {
    GeomSymbol::ALL
        .iter()
        .map(|s| {
            (
                *s,
                if symbols.contains(s) {
                    GaussianRational::int(1)
                } else {
                    GaussianRational::zero()
                },
            )
        })
        .collect()
}

/// Evaluating at the basis assignments of the two span monomials recovers their coefficients.
fn linearity(totals: &SymbolPoly) -> Result<OracleStatus, PipelineError> {
    use GeomSymbol::*;
    let mut passed = true;
    let mut detail = Vec::new();
    for (symbols, mono) in [
        (&[DXN, VOLS][..], span_monomials()[0]),
        (&[XN, H1, VOLS][..], span_monomials()[1]),
    ] {
        let value = totals.eval(&basis(symbols))?;
        passed &= value == totals.coeff(&mono);
        detail.push(format!("{mono} = {value}"));
    }
    Ok(OracleStatus {
        check: CheckKind::Linearity,
        passed,
        detail: detail.join("; "),
    })
}

/// Totals again, by integrating the sum of the prefactor-weighted integrands once.
fn identity(cases: &[CaseTermReport], totals: &SymbolPoly) -> Result<OracleStatus, PipelineError> {
    let summed: SymbolPoly = cases.iter().map(|c| c.reduced.clone()).sum();
    let integrand = cases.iter().fold(RatXi::zero(), |acc, c| {
        acc + c.reduced_integrand.scale_scalar(&c.prefactor)
    });
    let once = contour_by_partial_fractions(&integrand)?.coeff;
    let passed = summed == *totals && once == *totals;
    Ok(OracleStatus {
        check: CheckKind::Identity,
        passed,
        detail: if passed {
            "sum of cases = integral of summed integrand".into()
        } else {
            format!("{summed} vs {once}")
        },
    })
}

fn fixture_comparison(
    f: &Fixture,
    cases: &[CaseTermReport],
) -> Result<FixtureComparison, PipelineError> {
    let rep = &cases[f.case as usize];
    let computed = match f.form {
        Form::Post => rep
            .moved_integrand
            .scale_scalar(&GaussianRational::int(rep.moved_sign)),
        Form::Pre if f.subterms.is_empty() => rep.reduced_integrand.clone(),
        Form::Pre => rep
            .subterms
            .iter()
            .zip(1u8..)
            .filter(|(_, k)| f.subterms.contains(k))
            .fold(RatXi::zero(), |acc, (s, _)| acc + s.integrand.clone()),
    };
    let printed_integral = contour_gamma_plus(&f.integrand)?.coeff;
    let computed_integral = contour_gamma_plus(&computed)?.coeff;
    Ok(FixtureComparison {
        case: f.case,
        form: f.form,
        subterms: f.subterms.clone(),
        integrand_matches: computed == f.integrand,
        integral_matches: printed_integral == computed_integral,
        printed: f.integrand.clone(),
        computed,
        printed_integral,
        computed_integral,
    })
}

fn anchor(name: &str, passed: bool, detail: impl Into<String>) -> Anchor {
    Anchor {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn anchors(
    theorem: Theorem,
    m: u32,
    cases: &[CaseTermReport],
    totals: &SymbolPoly,
    comparisons: &[RenderingComparison],
) -> Vec<Anchor> {
    let matched = |kind: RenderingKind| {
        comparisons
            .iter()
            .filter(|c| c.rendering == kind)
            .all(|c| c.matches)
    };
    let mut out = vec![anchor(
        "case I vanishes",
        cases[0].reduced.is_zero() && matched(RenderingKind::Case(CaseId::I)),
        format!("{}", cases[0].reduced),
    )];
    if m == 1 && theorem != Theorem::T2 {
        out.push(anchor(
            "m = 1 totals vanish",
            totals.is_zero() && matched(RenderingKind::Headline),
            format!("totals {totals}"),
        ));
    }
    let split = |case: CaseId, k: usize| {
        cases[case as usize]
            .subterms
            .get(k - 1)
            .map(|s| s.reduced.clone())
    };
    match theorem {
        Theorem::T2 => {
            let a2 = split(CaseId::IV, 2);
            out.push(anchor(
                "A2 vanishes",
                a2.as_ref().is_some_and(Zero::is_zero) && matched(RenderingKind::Subterm(2)),
                format!("{a2:?}"),
            ));
        }
        Theorem::T3 => {
            let b1 = split(CaseId::V, 1);
            out.push(anchor(
                "B1 vanishes",
                b1.as_ref().is_some_and(Zero::is_zero),
                format!("{b1:?}"),
            ));
        }
        Theorem::T1 => {}
    }
    out
}

fn theorem_coefficients(theorem: Theorem, m: u32) -> Vec<CoeffName> {
    let names: BTreeSet<CoeffName> = renderings(theorem, m)
        .iter()
        .flat_map(|r| r.terms.iter().map(|t| t.coeff))
        .collect();
    names.into_iter().collect()
}

/// All five cases of `theorem` at `m`, with the assembled comparisons.
pub fn run_theorem(
    theorem: Theorem,
    m: u32,
    opts: &RunOptions,
    mode: ExecMode,
) -> Result<TheoremReport, PipelineError> {
    let cases = ordered_map(mode, &CaseId::ALL, |c| {
        run_case(&CaseSpec::canonical(theorem, *c, m), m, opts)
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let totals: SymbolPoly = cases.iter().map(|c| c.reduced.clone()).sum();

    let mut comparisons = Vec::new();
    for r in renderings(theorem, m) {
        let computed = match r.kind {
            RenderingKind::Case(c) => cases[c as usize].reduced.clone(),
            RenderingKind::Subterm(k) => cases
                .iter()
                .find(|c| !c.subterms.is_empty())
                .and_then(|c| c.subterms.get(usize::from(k) - 1))
                .map(|s| s.reduced.clone())
                .unwrap_or_default(),
            _ => totals.clone(),
        };
        for source in [CoeffSource::Oracle, CoeffSource::Printed] {
            let rendered = r.value(m, source);
            let (per_monomial, matches) = compare(&computed, &rendered);
            comparisons.push(RenderingComparison {
                rendering: r.kind,
                source,
                computed: computed.clone(),
                rendered,
                per_monomial,
                matches,
            });
        }
    }

    let fixtures = fixtures(theorem, m)
        .iter()
        .map(|f| fixture_comparison(f, &cases))
        .collect::<Result<Vec<_>, _>>()?;
    let oracle_match = |kind| {
        comparisons.iter().any(|c: &RenderingComparison| {
            c.rendering == kind && c.source == CoeffSource::Oracle && c.matches
        })
    };
    let case_displays: Vec<(CaseId, bool)> = CaseId::ALL
        .iter()
        .map(|c| (*c, oracle_match(RenderingKind::Case(*c))))
        .collect();
    let all_cases_match = case_displays.iter().all(|(_, b)| *b);
    let headline_matches = oracle_match(RenderingKind::Headline);
    let implication = ImplicationChain {
        case_displays,
        all_cases_match,
        headline_matches,
        holds: !all_cases_match || headline_matches,
    };

    Ok(TheoremReport {
        theorem,
        m,
        identity: identity(&cases, &totals)?,
        linearity: linearity(&totals)?,
        anchors: anchors(theorem, m, &cases, &totals, &comparisons),
        errata: theorem_coefficients(theorem, m)
            .into_iter()
            .map(|n| errata_row(n, m))
            .collect(),
        cases,
        totals,
        comparisons,
        fixtures,
        implication,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::case::OracleMode;

    fn exact() -> RunOptions {
        RunOptions {
            oracle: OracleMode::Exact,
            ..RunOptions::default()
        }
    }

    #[test]
    fn degenerate_m_vanishes() {
        for th in [Theorem::T1, Theorem::T3] {
            let rep = run_theorem(th, 1, &exact(), ExecMode::Sequential).unwrap();
            assert!(rep.totals.is_zero());
            assert!(rep.internal_ok(), "{:?}", rep.internal_failures());
        }
    }

    #[test]
    fn modes_agree() {
        let a = run_theorem(Theorem::T2, 2, &exact(), ExecMode::Sequential).unwrap();
        let b = run_theorem(Theorem::T2, 2, &exact(), ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn case_values_lie_in_the_span() {
        let rep = run_theorem(Theorem::T3, 2, &exact(), ExecMode::default()).unwrap();
        let span = span_monomials();
        assert!(rep.totals.terms().all(|(m, _)| span.contains(m)));
        assert!(rep.internal_ok());
    }

    #[test]
    fn t1_case_three_matches_its_display() {
        let rep = run_theorem(Theorem::T1, 2, &exact(), ExecMode::default()).unwrap();
        assert!(
            rep.comparison(RenderingKind::Case(CaseId::III), CoeffSource::Oracle)
                .unwrap()
                .matches
        );
    }

    #[test]
    fn errata_cover_the_theorem() {
        let rep = run_theorem(Theorem::T3, 2, &exact(), ExecMode::default()).unwrap();
        let names: Vec<_> = rep.errata.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec![
                CoeffName::I0,
                CoeffName::I1,
                CoeffName::J0,
                CoeffName::K0,
                CoeffName::K1,
                CoeffName::L0
            ]
        );
    }
}
