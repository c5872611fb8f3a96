use ncres::arith::{GaussianRational, GeomSymbol, Monomial, SymbolPoly};
use ncres::coefficients::{eval_by_oracle, CoeffName};
use ncres::par::ExecMode;
use ncres::pipeline::case::{sample_assignment, sample_seed, span_monomials, DEFAULT_SEED};
use ncres::pipeline::printed::{CoeffSource, RenderingKind};
use ncres::pipeline::quadrature::quadrature_oracle;
use ncres::pipeline::sphere::sphere_reduce;
use ncres::pipeline::{run_case, run_theorem, CaseId, CaseSpec, OracleMode, RunOptions, Theorem};
use ncres::symbols::{library_checks, Slot};
use ncres::xi::{RatXi, XiPoly};
use num_traits::Zero;

fn exact() -> RunOptions {
    RunOptions {
        oracle: OracleMode::Exact,
        ..RunOptions::default()
    }
}

fn two_pow(m: u32) -> GaussianRational {
    GaussianRational::int(2).pow(i64::from(m)).unwrap()
}

fn fact(n: u32) -> i64 {
    (1..=i64::from(n)).product()
}

#[test]
fn sphere_reduction_examples() {
    use GeomSymbol::*;
    assert!(sphere_reduce(&SymbolPoly::sym(GXXI)).unwrap().is_zero());
    assert_eq!(
        sphere_reduce(&SymbolPoly::monomial(&[XN, H1])).unwrap(),
        SymbolPoly::monomial(&[XN, H1, VOLS])
    );
    assert!(sphere_reduce(&SymbolPoly::monomial(&[DGXXI, XN]))
        .unwrap()
        .is_zero());
}

#[test]
fn quadrature_examples() {
    let x = sample_assignment(1);
    let resolvent = RatXi::new(XiPoly::from_ints(&[1]), 1, 1);
    let q = quadrature_oracle(&resolvent, &x, 1e-8).unwrap();
    assert!(q.pass && (q.numeric[0] - std::f64::consts::PI).abs() < 1e-8);
    let odd = RatXi::new(XiPoly::from_ints(&[0, 1]), 2, 2);
    assert!(quadrature_oracle(&odd, &x, 1e-8).unwrap().pass);
    assert!(quadrature_oracle(&RatXi::new(XiPoly::from_ints(&[0, 1]), 1, 1), &x, 1e-8).is_err());
}

#[test]
fn t1_case_two_integrand_passes_quadrature() {
    let rep = run_case(
        &CaseSpec::canonical(Theorem::T1, CaseId::II, 2),
        2,
        &exact(),
    )
    .unwrap();
    let x = sample_assignment(sample_seed(DEFAULT_SEED, Theorem::T1, CaseId::II, 2, 0));
    assert!(quadrature_oracle(&rep.integrand, &x, 1e-8).unwrap().pass);
}

#[test]
fn t1_case_three_is_the_b0_term() {
    for m in 2..=5 {
        let rep = run_case(
            &CaseSpec::canonical(Theorem::T1, CaseId::III, m),
            m,
            &exact(),
        )
        .unwrap();
        let want = &(&GaussianRational::from_ints(0, i64::from(m) - 1)
            * &GaussianRational::frac(1, fact(m + 2)))
            * &(&eval_by_oracle(CoeffName::B0, m) * &two_pow(m));
        assert_eq!(rep.reduced.coeff(&span_monomials()[1]), want, "m={m}");
        assert!(rep.reduced.coeff(&span_monomials()[0]).is_zero());
    }
}

#[test]
fn invalid_tuples_are_rejected() {
    assert!(CaseSpec::new(Theorem::T2, 1, -5, 0, 0, 0, 2).is_err());
    assert!(CaseSpec::new(Theorem::T3, -1, -2, 0, 0, 0, 2).is_err());
    let spec = CaseSpec {
        r: -3,
        ..CaseSpec::canonical(Theorem::T1, CaseId::V, 2)
    };
    assert!(run_case(&spec, 2, &exact()).is_err());
}

#[test]
fn case_one_is_zero_everywhere() {
    for th in Theorem::ALL {
        for m in 1..=4 {
            assert!(
                run_case(&CaseSpec::canonical(th, CaseId::I, m), m, &exact())
                    .unwrap()
                    .reduced
                    .is_zero()
            );
        }
    }
}

#[test]
fn totals_are_the_sum_of_cases() {
    let rep = run_theorem(Theorem::T3, 2, &exact(), ExecMode::default()).unwrap();
    let sum: SymbolPoly = rep.cases.iter().map(|c| c.reduced.clone()).sum();
    assert_eq!(rep.totals, sum);
    assert!(rep.identity.passed && rep.linearity.passed);
}

#[test]
fn t2_normal_derivative_term_is_twice_the_printed_one() {
    for m in 1..=4 {
        let rep = run_theorem(Theorem::T2, m, &exact(), ExecMode::default()).unwrap();
        let printed = &(&GaussianRational::frac(-1, 4) * &GaussianRational::from_ints(0, 2))
            * &(&GaussianRational::frac(1, fact(m + 2))
                * &(&eval_by_oracle(CoeffName::E0, m) * &two_pow(m)));
        let dxn = Monomial::of(&[GeomSymbol::DXN, GeomSymbol::VOLS]);
        assert_eq!(
            rep.totals.coeff(&dxn),
            &GaussianRational::int(2) * &printed,
            "m={m}"
        );
        let head = rep
            .comparison(RenderingKind::Headline, CoeffSource::Oracle)
            .unwrap();
        assert!(
            !head
                .per_monomial
                .iter()
                .find(|r| r.monomial == dxn.to_string())
                .unwrap()
                .matches
        );
    }
}

#[test]
fn spin_connection_part_vanishes() {
    for m in 1..=4 {
        let rep = run_case(
            &CaseSpec::canonical(Theorem::T2, CaseId::IV, m),
            m,
            &exact(),
        )
        .unwrap();
        let labels: Vec<&str> = rep.subterms.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["A1", "A2", "A3"]);
        assert!(rep.subterms[1].reduced.is_zero());
    }
}

#[test]
fn library_reproduces_stated_derivatives() {
    for m in 1..=6 {
        for outcome in library_checks(m).unwrap() {
            let printed = outcome.slot == Slot::TopDxnPrinted;
            assert_eq!(outcome.passed, !printed, "{:?}", outcome);
        }
    }
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let opts = RunOptions {
        samples: 1,
        ..RunOptions::default()
    };
    for th in Theorem::ALL {
        let a = run_theorem(th, 3, &opts, ExecMode::Sequential).unwrap();
        let b = run_theorem(th, 3, &opts, ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
