//! One boundary case: two factor symbols, their traced product and its integral.

use std::collections::BTreeMap;
use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{Assignment, GaussianRational, GeomSymbol, Monomial, SymbolPoly};
use crate::clifford::{CliffordExpr, Letter, PairingTable};
use crate::error::{PipelineError, SymbolError, XiError};
use crate::pipeline::quadrature::{quadrature_oracle, QuadratureOutcome};
use crate::pipeline::sphere::sphere_reduce_xi;
use crate::symbols::{build_symbol, Operator, Slot};
use crate::xi::{
    contour_by_partial_fractions, contour_gamma_plus, pi_plus, pi_plus_truncating, PiScaledValue,
    RatXi,
};

/// Fixed base seed for the random symbol assignments.
pub const DEFAULT_SEED: u64 = 0x6e63_7265_7300_0001;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::T1, Theorem::T2, Theorem::T3];

    /// Left and right operators of the composition.
    pub fn operators(self) -> (Operator, Operator) {
        match self {
            Theorem::T1 => (Operator::CXDInv, Operator::DPow2m2),
            Theorem::T2 => (Operator::NablaDInv, Operator::DPow2m1),
            Theorem::T3 => (Operator::NablaDInv2, Operator::DPow2m2),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Theorem::T1 => 1,
            Theorem::T2 => 2,
            Theorem::T3 => 3,
        }
    }

    /// Letter naming the summands of the subleading left symbol.
    pub fn part_letter(self) -> &'static str {
        match self {
            Theorem::T1 => "E",
            Theorem::T2 => "A",
            Theorem::T3 => "B",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum CaseId {
    I,
    II,
    III,
    IV,
    V,
}

impl CaseId {
    pub const ALL: [CaseId; 5] = [CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V];

    pub fn index(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Orders `r`, `l` of the two symbols and the derivative counts of one term of the case sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CaseSpec {
    pub theorem: Theorem,
    pub case: CaseId,
    pub r: i64,
    pub l: i64,
    pub k: u32,
    pub j: u32,
    pub alpha: u32,
}

impl CaseSpec {
    pub fn canonical(theorem: Theorem, case: CaseId, m: u32) -> Self {
        let (op1, op2) = theorem.operators();
        let r0 = op1.top_order(m);
        let l0 = op2.top_order(m);
        let (r, l, k, j, alpha) = match (case, theorem) {
            (CaseId::I, _) => (r0, l0, 0, 0, 1),
            (CaseId::II, _) => (r0, l0, 0, 1, 0),
            (CaseId::III, _) => (r0, l0, 1, 0, 0),
            (CaseId::IV, Theorem::T2) | (CaseId::V, Theorem::T1 | Theorem::T3) => {
                (r0 - 1, l0, 0, 0, 0)
            }
            (CaseId::IV, _) | (CaseId::V, Theorem::T2) => (r0, l0 - 1, 0, 0, 0),
        };
        Self {
            theorem,
            case,
            r,
            l,
            k,
            j,
            alpha,
        }
    }

    /// Accepts exactly the five tuples of the theorem's case sum.
    pub fn new(
        theorem: Theorem,
        r: i64,
        l: i64,
        k: u32,
        j: u32,
        alpha: u32,
        m: u32,
    ) -> Result<Self, PipelineError> {
        let total = r + l - i64::from(k) - i64::from(j) - i64::from(alpha);
        if total != -2 * i64::from(m) {
            return Err(PipelineError::InvalidCase(format!(
                "r + l - k - j - |alpha| = {total}, need {}",
                -2 * i64::from(m)
            )));
        }
        CaseId::ALL
            .iter()
            .map(|c| Self::canonical(theorem, *c, m))
            .find(|s| (s.r, s.l, s.k, s.j, s.alpha) == (r, l, k, j, alpha))
            .ok_or_else(|| {
                PipelineError::InvalidCase(format!(
                    "{theorem}: (r, l, k, j, alpha) = ({r}, {l}, {k}, {j}, {alpha})"
                ))
            })
    }

    pub fn validate(&self, m: u32) -> Result<(), PipelineError> {
        let want = Self::canonical(self.theorem, self.case, m);
        if *self == want {
            Ok(())
        } else {
            Err(PipelineError::InvalidCase(format!(
                "{self:?} differs from {want:?}"
            )))
        }
    }

    /// `(-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)`
    pub fn prefactor(&self) -> GaussianRational {
        let e = self.alpha + self.j + self.k + 1;
        let fact: i64 = (1..=i64::from(self.j + self.k + 1)).product();
        let minus_i = -GaussianRational::i();
        &minus_i.pow(i64::from(e)).expect("unit") * &GaussianRational::frac(1, fact)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    Exact,
    Quadrature,
    Both,
}

impl OracleMode {
    pub fn quadrature(self) -> bool {
        matches!(self, OracleMode::Quadrature | OracleMode::Both)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RunOptions {
    pub oracle: OracleMode,
    pub tolerance: f64,
    pub seed: u64,
    pub samples: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            oracle: OracleMode::Both,
            tolerance: 1e-8,
            seed: DEFAULT_SEED,
            samples: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    TangentialVanishing,
    ResidueAgreement,
    IntegrationByParts,
    Quadrature,
    Span,
    SubtermSum,
    Identity,
    Linearity,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleStatus {
    pub check: CheckKind,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSample {
    pub sample: u32,
    pub seed: u64,
    pub assignment: BTreeMap<GeomSymbol, GaussianRational>,
    pub outcome: Option<QuadratureOutcome>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubtermReport {
    pub label: String,
    pub integrand: RatXi,
    pub reduced: SymbolPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseTermReport {
    pub spec: CaseSpec,
    pub m: u32,
    pub prefactor: GaussianRational,
    /// traced integrand times `2^m`, before sphere reduction
    pub integrand: RatXi,
    /// sphere-reduced integrand
    pub reduced_integrand: RatXi,
    /// sphere-reduced integrand with every `xi_n`-derivative moved to the left factor, sign not included
    pub moved_integrand: RatXi,
    pub moved_sign: i64,
    pub contour: PiScaledValue,
    /// `prefactor * contour`; the density is `pi` times this
    pub reduced: SymbolPoly,
    pub polynomial_part_dropped: bool,
    pub subterms: Vec<SubtermReport>,
    pub quadrature: Vec<QuadratureSample>,
    pub checks: Vec<OracleStatus>,
}

impl CaseTermReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&OracleStatus> {
        self.checks.iter().find(|c| c.check == kind)
    }
}

/// The two monomials a boundary density may contain.
pub fn span_monomials() -> [Monomial; 2] {
    use GeomSymbol::*;
    [Monomial::of(&[DXN, VOLS]), Monomial::of(&[XN, H1, VOLS])]
}

fn left_slot(spec: &CaseSpec, m: u32) -> Result<Slot, PipelineError> {
    let top = spec.theorem.operators().0.top_order(m);
    let base = if spec.r == top {
        Slot::Top
    } else if spec.r == top - 1 {
        Slot::Next
    } else {
        return Err(PipelineError::InvalidCase(format!(
            "left order {} not covered",
            spec.r
        )));
    };
    match (base, spec.j) {
        (b, 0) => Ok(b),
        (Slot::Top, 1) => Ok(Slot::TopDxn),
        _ => Err(PipelineError::InvalidCase(format!(
            "{spec:?}: x_n-derivative of {base}"
        ))),
    }
}

fn right_base_slot(spec: &CaseSpec, m: u32) -> Result<Slot, PipelineError> {
    let top = spec.theorem.operators().1.top_order(m);
    if spec.l == top {
        Ok(Slot::Top)
    } else if spec.l == top - 1 {
        Ok(Slot::Next)
    } else {
        Err(PipelineError::InvalidCase(format!(
            "right order {} not covered",
            spec.l
        )))
    }
}

/// `pi^+` on every coefficient. Order-zero symbols carry a polynomial part,
/// which is dropped when `allow_truncation` is set.
fn project(
    expr: &CliffordExpr,
    allow_truncation: bool,
) -> Result<(CliffordExpr, bool), PipelineError> {
    let mut dropped = false;
    let mut out = CliffordExpr::zero();
    for (w, c) in expr.terms() {
        let p = match pi_plus(c) {
            Ok(p) => p,
            Err(XiError::NonDecaying { .. }) if allow_truncation => {
                dropped = true;
                pi_plus_truncating(c)
            }
            Err(e) => return Err(e.into()),
        };
        out = &out + &CliffordExpr::term(w.clone(), p);
    }
    Ok((out, dropped))
}

/// `d^times/dxi_n^times` of an entry, read from the library where it states the derivative.
fn xi_derivative(
    op: Operator,
    slot: Slot,
    times: u32,
    m: u32,
) -> Result<CliffordExpr, PipelineError> {
    let stated = match (slot, times) {
        (Slot::Top, 1) => Some(Slot::TopDxi),
        (Slot::Top, 2) => Some(Slot::TopDxi2),
        _ => None,
    };
    if let Some(entry) = stated.and_then(|s| build_symbol(op, s, m).ok()) {
        return Ok(entry.expr);
    }
    Ok(build_symbol(op, slot, m)?
        .expr
        .map_coeffs(|c| c.diff_n(times)))
}

/// Tangential derivative at the boundary point of a symbol built only from
/// `c(xi')`, `c(dx_n)` and powers of `|xi|^2`: all have vanishing first
/// tangential derivatives there.
fn tangential_derivative(expr: &CliffordExpr) -> Result<CliffordExpr, PipelineError> {
    for (w, c) in expr.terms() {
        let letters_ok = w
            .letters()
            .iter()
            .all(|l| matches!(l, Letter::XiPrime | Letter::DxN));
        let coeffs_ok = c.num().coeffs().iter().all(|p| p.as_constant().is_some());
        if !(letters_ok && coeffs_ok) {
            return Err(PipelineError::InvalidCase(format!(
                "tangential derivative of {{{c}}} {w} is not covered"
            )));
        }
    }
    Ok(CliffordExpr::zero())
}

struct Evaluation {
    integrand: RatXi,
    moved: RatXi,
    moved_sign: i64,
    dropped: bool,
    tangential: bool,
}

fn two_pow(m: u32) -> GaussianRational {
    GaussianRational::int(2)
        .pow(i64::from(m))
        .expect("nonzero base")
}

fn traced(left: &CliffordExpr, right: &CliffordExpr, m: u32) -> Result<RatXi, PipelineError> {
    Ok(left
        .mul(right)?
        .trace(&PairingTable::standard())?
        .scale_scalar(&two_pow(m)))
}

fn evaluate(spec: &CaseSpec, m: u32, left_raw: &CliffordExpr) -> Result<Evaluation, PipelineError> {
    let op2 = spec.theorem.operators().1;
    let (left, dropped) = project(left_raw, spec.r >= 0)?;
    let base = right_base_slot(spec, m)?;
    if spec.alpha > 0 {
        let right = xi_derivative(op2, base, 1, m)?;
        let zero = tangential_derivative(&right)?;
        let integrand = traced(&left, &zero, m)?;
        return Ok(Evaluation {
            integrand: integrand.clone(),
            moved: integrand,
            moved_sign: 1,
            dropped,
            tangential: true,
        });
    }
    let (right, right_pre) = if spec.k > 0 {
        let r = build_symbol(op2, Slot::TopDxn, m)?.expr;
        let pre = r.map_coeffs(|c| c.diff_n(spec.j + 1));
        (r, pre)
    } else {
        (
            build_symbol(op2, base, m)?.expr,
            xi_derivative(op2, base, spec.j + 1, m)?,
        )
    };
    let integrand = traced(&left.map_coeffs(|c| c.diff_n(spec.k)), &right_pre, m)?;
    let moved = traced(
        &left.map_coeffs(|c| c.diff_n(spec.k + spec.j + 1)),
        &right,
        m,
    )?;
    let moved_sign = if (spec.j + 1) % 2 == 1 { -1 } else { 1 };
    Ok(Evaluation {
        integrand,
        moved,
        moved_sign,
        dropped,
        tangential: false,
    })
}

/// Seed of one random assignment, distinct per (theorem, case, m, sample).
pub fn sample_seed(base: u64, theorem: Theorem, case: CaseId, m: u32, sample: u32) -> u64 {
    base ^ (u64::from(theorem.number()) << 48)
        ^ (case.index() << 40)
        ^ (u64::from(m) << 16)
        ^ u64::from(sample)
}

/// Small rationals with denominators at most 7 for every symbol.
pub fn sample_assignment(seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GeomSymbol::ALL
        .iter()
        .map(|s| {
            let den: i64 = rng.random_range(1..=7);
            let num: i64 = loop {
                let n = rng.random_range(-9..=9);
                if n != 0 {
                    break n;
                }
            };
            (*s, GaussianRational::frac(num, den))
        })
        .collect()
}

fn status(check: CheckKind, passed: bool, detail: impl Into<String>) -> OracleStatus {
    OracleStatus {
        check,
        passed,
        detail: detail.into(),
    }
}

fn reduce_and_integrate(
    integrand: &RatXi,
    prefactor: &GaussianRational,
) -> Result<(RatXi, SymbolPoly), PipelineError> {
    let reduced_integrand = sphere_reduce_xi(integrand)?;
    let value = contour_gamma_plus(&reduced_integrand)?
        .coeff
        .scale(prefactor);
    Ok((reduced_integrand, value))
}

pub fn run_case(
    spec: &CaseSpec,
    m: u32,
    opts: &RunOptions,
) -> Result<CaseTermReport, PipelineError> {
    if m == 0 {
        return Err(SymbolError::ZeroM.into());
    }
    spec.validate(m)?;
    let op1 = spec.theorem.operators().0;
    let lslot = left_slot(spec, m)?;
    let ev = evaluate(spec, m, &build_symbol(op1, lslot, m)?.expr)?;
    let prefactor = spec.prefactor();
    let mut checks = Vec::new();
    if ev.tangential {
        checks.push(status(
            CheckKind::TangentialVanishing,
            ev.integrand.is_zero(),
            "right factor is a tangential derivative, zero at the boundary point",
        ));
    }

    let reduced_integrand = sphere_reduce_xi(&ev.integrand)?;
    let moved_integrand = sphere_reduce_xi(&ev.moved)?;
    let contour = contour_gamma_plus(&reduced_integrand)?;
    let by_fractions = contour_by_partial_fractions(&reduced_integrand)?;
    let raw = contour_gamma_plus(&ev.integrand)?;
    let raw_fractions = contour_by_partial_fractions(&ev.integrand)?;
    let residues_agree = contour == by_fractions && raw == raw_fractions;
    checks.push(status(
        CheckKind::ResidueAgreement,
        residues_agree,
        if residues_agree {
            "derivative formula = partial fractions".to_string()
        } else {
            format!("{contour} vs {by_fractions}")
        },
    ));

    let moved_raw = contour_gamma_plus(&ev.moved)?
        .coeff
        .scale(&GaussianRational::int(ev.moved_sign));
    let ibp = moved_raw == raw.coeff;
    checks.push(status(
        CheckKind::IntegrationByParts,
        ibp,
        if ibp {
            "both placements of the xi_n-derivatives agree".to_string()
        } else {
            format!("{} vs {}", raw.coeff, moved_raw)
        },
    ));

    let reduced = contour.coeff.scale(&prefactor);
    let span = span_monomials();
    let stray: Vec<String> = reduced
        .terms()
        .filter(|(mono, _)| !span.contains(mono))
        .map(|(mono, _)| mono.to_string())
        .collect();
    checks.push(status(
        CheckKind::Span,
        stray.is_empty(),
        if stray.is_empty() {
            "within span{DXN*VOLS, XN*H1*VOLS}".to_string()
        } else {
            format!("stray monomials: {}", stray.join(", "))
        },
    ));

    let mut quadrature = Vec::new();
    if opts.oracle.quadrature() {
        for sample in 0..opts.samples {
            let seed = sample_seed(opts.seed, spec.theorem, spec.case, m, sample);
            let assignment = sample_assignment(seed);
            let (outcome, error) =
                match quadrature_oracle(&ev.integrand, &assignment, opts.tolerance) {
                    Ok(o) => (Some(o), None),
                    Err(e) => (None, Some(e.to_string())),
                };
            quadrature.push(QuadratureSample {
                sample,
                seed,
                assignment,
                outcome,
                error,
            });
        }
        let passed = quadrature
            .iter()
            .all(|q| q.outcome.as_ref().is_some_and(|o| o.pass));
        let worst = quadrature
            .iter()
            .filter_map(|q| q.outcome.as_ref())
            .map(|o| o.abs_error)
            .fold(0.0, f64::max);
        checks.push(status(
            CheckKind::Quadrature,
            passed,
            format!("{} samples, max abs error {worst:.3e}", quadrature.len()),
        ));
    }

    let mut subterms = Vec::new();
    if lslot == Slot::Next && build_symbol(op1, Slot::Part(1), m).is_ok() {
        for k in 1..=3u8 {
            let part = build_symbol(op1, Slot::Part(k), m)?.expr;
            let ev_k = evaluate(spec, m, &part)?;
            let (integrand, value) = reduce_and_integrate(&ev_k.integrand, &prefactor)?;
            subterms.push(SubtermReport {
                label: format!("{}{k}", spec.theorem.part_letter()),
                integrand,
                reduced: value,
            });
        }
        let sum = subterms
            .iter()
            .fold(SymbolPoly::zero(), |acc, s| &acc + &s.reduced);
        checks.push(status(
            CheckKind::SubtermSum,
            sum == reduced,
            "parts sum to the case value",
        ));
    }

    Ok(CaseTermReport {
        spec: *spec,
        m,
        prefactor,
        integrand: ev.integrand,
        reduced_integrand,
        moved_integrand,
        moved_sign: ev.moved_sign,
        contour,
        reduced,
        polynomial_part_dropped: ev.dropped,
        subterms,
        quadrature,
        checks,
    })
}
