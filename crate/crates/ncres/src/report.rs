//! Versioned JSON report and its markdown mirror.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coefficients::Verdict;
use crate::error::PipelineError;
use crate::par::{ordered_map, ExecMode};
use crate::pipeline::printed::CoeffSource;
use crate::pipeline::{
    run_case, run_theorem, CaseId, CaseSpec, CaseTermReport, OracleMode, RunOptions, Theorem,
    TheoremReport,
};

pub const SCHEMA_ID: &str = "ncres-report/1";

/// JSON Schema every report validates against.
pub const SCHEMA: &str = include_str!("../schema/ncres-report-1.json");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub theorems: Vec<Theorem>,
    /// `None` runs every case and assembles the theorem
    pub case: Option<CaseId>,
    pub m_min: u32,
    pub m_max: u32,
    pub oracle: OracleMode,
    pub tolerance: f64,
    pub seed: u64,
    pub samples: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        let opts = RunOptions::default();
        Self {
            theorems: Theorem::ALL.to_vec(),
            case: None,
            m_min: 1,
            m_max: 4,
            oracle: opts.oracle,
            tolerance: opts.tolerance,
            seed: opts.seed,
            samples: opts.samples,
        }
    }
}

impl RunConfig {
    pub fn options(&self) -> RunOptions {
        RunOptions {
            oracle: self.oracle,
            tolerance: self.tolerance,
            seed: self.seed,
            samples: self.samples,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "scope", rename_all = "snake_case")]
pub enum Entry {
    Theorem(TheoremReport),
    Case(CaseTermReport),
}

impl Entry {
    fn internal_failures(&self) -> Vec<String> {
        match self {
            Entry::Theorem(t) => t.internal_failures(),
            Entry::Case(c) => c
                .checks
                .iter()
                .filter(|s| !s.passed)
                .map(|s| {
                    format!(
                        "{} {} m={}: {:?}: {}",
                        c.spec.theorem, c.spec.case, c.m, s.check, s.detail
                    )
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub internal_ok: bool,
    pub internal_failures: Vec<String>,
    pub rendering_mismatches: usize,
    pub fixture_deviations: usize,
    pub errata_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub generator: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub entries: Vec<Entry>,
}

fn summarize(entries: &[Entry]) -> Summary {
    let internal_failures: Vec<String> =
        entries.iter().flat_map(Entry::internal_failures).collect();
    let theorems = || {
        entries.iter().filter_map(|e| match e {
            Entry::Theorem(t) => Some(t),
            Entry::Case(_) => None,
        })
    };
    Summary {
        internal_ok: internal_failures.is_empty(),
        internal_failures,
        rendering_mismatches: theorems()
            .flat_map(|t| &t.comparisons)
            .filter(|c| !c.matches)
            .count(),
        fixture_deviations: theorems()
            .flat_map(|t| &t.fixtures)
            .filter(|f| !f.integral_matches)
            .count(),
        errata_mismatches: theorems()
            .flat_map(|t| &t.errata)
            .filter(|r| r.verdict == Verdict::Mismatch)
            .count(),
    }
}

pub fn build_report(config: &RunConfig, mode: ExecMode) -> Result<Report, PipelineError> {
    let opts = config.options();
    let items: Vec<(Theorem, u32)> = config
        .theorems
        .iter()
        .flat_map(|t| (config.m_min..=config.m_max).map(move |m| (*t, m)))
        .collect();
    let entries = ordered_map(mode, &items, |&(theorem, m)| match config.case {
        None => run_theorem(theorem, m, &opts, mode).map(Entry::Theorem),
        Some(case) => run_case(&CaseSpec::canonical(theorem, case, m), m, &opts).map(Entry::Case),
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    Ok(Report {
        schema: SCHEMA_ID,
        generator: format!("ncres {}", env!("CARGO_PKG_VERSION")),
        config: config.clone(),
        summary: summarize(&entries),
        entries,
    })
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn flag(b: bool) -> &'static str {
    if b {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn case_rows(out: &mut String, cases: &[CaseTermReport]) {
    out.push_str(
        "| case | (r, l, k, j, alpha) | prefactor | value / pi | checks |\n|---|---|---|---|---|\n",
    );
    for c in cases {
        let s = &c.spec;
        let checks: Vec<String> = c
            .checks
            .iter()
            .map(|k| format!("{:?} {}", k.check, pass(k.passed)))
            .collect();
        let _ = writeln!(
            out,
            "| {} | ({}, {}, {}, {}, {}) | {} | {} | {} |",
            s.case,
            s.r,
            s.l,
            s.k,
            s.j,
            s.alpha,
            c.prefactor,
            c.reduced,
            checks.join(", ")
        );
    }
    for c in cases.iter().filter(|c| !c.subterms.is_empty()) {
        let _ = writeln!(out, "\nSubterms of case {}:\n", c.spec.case);
        for s in &c.subterms {
            let _ = writeln!(out, "- {}: {}", s.label, s.reduced);
        }
    }
}

fn theorem_section(out: &mut String, t: &TheoremReport) {
    let _ = writeln!(out, "## {} at m = {}\n", t.theorem, t.m);
    out.push_str("### Cases\n\n");
    case_rows(out, &t.cases);
    let _ = writeln!(out, "\n### Totals\n\n`{}` (times pi)\n", t.totals);
    let _ = writeln!(
        out,
        "- identity: {} ({})",
        pass(t.identity.passed),
        t.identity.detail
    );
    let _ = writeln!(
        out,
        "- linearity: {} ({})\n",
        pass(t.linearity.passed),
        t.linearity.detail
    );
    out.push_str("### Anchors\n\n");
    for a in &t.anchors {
        let _ = writeln!(out, "- {}: {}", a.name, pass(a.passed));
    }
    out.push_str("\n### Printed renderings\n\n| rendering | oracle coefficients | printed coefficients |\n|---|---|---|\n");
    for c in t
        .comparisons
        .iter()
        .filter(|c| c.source == CoeffSource::Oracle)
    {
        let printed = t
            .comparison(c.rendering, CoeffSource::Printed)
            .is_some_and(|p| p.matches);
        let _ = writeln!(
            out,
            "| {:?} | {} | {} |",
            c.rendering,
            flag(c.matches),
            flag(printed)
        );
    }
    let ch = &t.implication;
    let _ = writeln!(
        out,
        "\nImplication: all case displays match = {}, headline matches = {}, chain holds = {}\n",
        ch.all_cases_match, ch.headline_matches, ch.holds
    );
    out.push_str("### Printed intermediate integrands\n\n| case | form | subterms | integrand | integral |\n|---|---|---|---|---|\n");
    for f in &t.fixtures {
        let _ = writeln!(
            out,
            "| {} | {:?} | {:?} | {} | {} |",
            f.case,
            f.form,
            f.subterms,
            flag(f.integrand_matches),
            flag(f.integral_matches)
        );
    }
    out.push_str(
        "\n### Coefficient errata\n\n| name | printed | oracle | verdict |\n|---|---|---|---|\n",
    );
    for r in &t.errata {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {:?} |",
            r.name, r.printed, r.oracle, r.verdict
        );
    }
    out.push('\n');
}

pub fn to_markdown(report: &Report) -> String {
    let mut out = String::new();
    let c = &report.config;
    let _ = writeln!(out, "# Boundary residue report ({})\n", report.schema);
    let _ = writeln!(out, "Generator: {}  ", report.generator);
    let theorems: Vec<String> = c.theorems.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "Theorems: {}; case: {}; m: {}..={}; oracle: {:?}; tolerance: {:e}; seed: {:#018x}; samples: {}\n",
        theorems.join(", "),
        c.case.map_or("all".to_string(), |c| c.to_string()),
        c.m_min,
        c.m_max,
        c.oracle,
        c.tolerance,
        c.seed,
        c.samples
    );
    let s = &report.summary;
    let _ = writeln!(
        out,
        "## Summary\n\n- internal checks: {}",
        pass(s.internal_ok)
    );
    for f in &s.internal_failures {
        let _ = writeln!(out, "  - {f}");
    }
    let _ = writeln!(out, "- rendering mismatches: {}", s.rendering_mismatches);
    let _ = writeln!(
        out,
        "- intermediate integrand deviations: {}",
        s.fixture_deviations
    );
    let _ = writeln!(out, "- coefficient errata: {}\n", s.errata_mismatches);
    for e in &report.entries {
        match e {
            Entry::Theorem(t) => theorem_section(&mut out, t),
            Entry::Case(c) => {
                let _ = writeln!(
                    out,
                    "## {} case {} at m = {}\n",
                    c.spec.theorem, c.spec.case, c.m
                );
                case_rows(&mut out, std::slice::from_ref(c));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_sweep_is_clean() {
        let config = RunConfig {
            theorems: vec![Theorem::T1],
            m_max: 1,
            oracle: OracleMode::Exact,
            ..RunConfig::default()
        };
        let r = build_report(&config, ExecMode::default()).unwrap();
        assert!(r.summary.internal_ok);
        assert_eq!(r.entries.len(), 1);
        let md = to_markdown(&r);
        assert!(md.contains("## T1 at m = 1"));
    }

    #[test]
    fn single_case_entries() {
        let config = RunConfig {
            theorems: vec![Theorem::T2],
            case: Some(CaseId::IV),
            m_min: 2,
            m_max: 3,
            oracle: OracleMode::Exact,
            ..RunConfig::default()
        };
        let r = build_report(&config, ExecMode::Sequential).unwrap();
        assert_eq!(r.entries.len(), 2);
        assert!(matches!(&r.entries[0], Entry::Case(c) if c.subterms.len() == 3));
    }
}
