//! Numeric real-line integration of a rational function of `xi`, used as an
//! independent check of the exact contour value.

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::Assignment;
use crate::error::PipelineError;
use crate::xi::{contour_gamma_plus, RatXi};

/// Half-width of the interval integrated numerically; the rest comes from the
/// Laurent expansion at infinity, which converges for `|xi| > 1`.
const CORE: f64 = 4.0;
const TAIL_TERMS: usize = 96;
const CORE_ABS_ERR: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureOutcome {
    pub numeric: [f64; 2],
    pub exact: [f64; 2],
    pub abs_error: f64,
    pub pass: bool,
}

struct Numeric {
    num: Vec<Complex64>,
    p: i32,
    q: i32,
}

impl Numeric {
    fn eval(&self, x: f64) -> Complex64 {
        let z = Complex64::new(x, 0.0);
        let n = self
            .num
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
        n / ((z - Complex64::i()).powi(self.p) * (z + Complex64::i()).powi(self.q))
    }

    /// Coefficients `c_k` of `sum_k c_k xi^{-k}` for `k < d + TAIL_TERMS`.
    fn laurent_at_infinity(&self, decay: usize) -> Vec<Complex64> {
        let deg = self.num.len() - 1;
        let mut ntilde = vec![Complex64::new(0.0, 0.0); TAIL_TERMS];
        for (j, c) in self.num.iter().enumerate() {
            if deg - j < TAIL_TERMS {
                ntilde[deg - j] = *c;
            }
        }
        let binom_series = |power: i32, sign: f64| {
            let mut out = Vec::with_capacity(TAIL_TERMS);
            let mut coeff = 1.0;
            let step = Complex64::new(0.0, sign);
            let mut pow = Complex64::new(1.0, 0.0);
            for k in 0..TAIL_TERMS {
                if k > 0 {
                    coeff *= f64::from(power + k as i32 - 1) / k as f64;
                    pow *= step;
                }
                out.push(pow * coeff);
            }
            out
        };
        let a = binom_series(self.p, 1.0);
        let b = binom_series(self.q, -1.0);
        let g = mul_series(&mul_series(&ntilde, &a), &b);
        let mut c = vec![Complex64::new(0.0, 0.0); decay];
        c.extend(g);
        c
    }
}

fn mul_series(x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    (0..TAIL_TERMS)
        .map(|k| (0..=k).map(|t| x[t] * y[k - t]).sum())
        .collect()
}

/// `int_{-inf}^{inf} f(xi) dxi` at a full symbol assignment.
pub fn integrate_real_line(f: &RatXi, assignment: &Assignment) -> Result<Complex64, PipelineError> {
    let scalar = f.substitute(assignment)?;
    let Some(decay) = scalar.decay() else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    if decay < 2 {
        return Err(PipelineError::InsufficientDecay(decay));
    }
    let num = scalar
        .num()
        .coeffs()
        .iter()
        .map(|c| {
            let (re, im) = c.as_constant().unwrap_or_default().to_f64_pair();
            Complex64::new(re, im)
        })
        .collect();
    let h = Numeric {
        num,
        p: scalar.p() as i32,
        q: scalar.q() as i32,
    };
    let re = quadrature::double_exponential::integrate(|x| h.eval(x).re, -CORE, CORE, CORE_ABS_ERR)
        .integral;
    let im = quadrature::double_exponential::integrate(|x| h.eval(x).im, -CORE, CORE, CORE_ABS_ERR)
        .integral;
    let tail: Complex64 = h
        .laurent_at_infinity(decay as usize)
        .iter()
        .enumerate()
        .filter(|(k, _)| *k >= 2 && k % 2 == 0)
        .map(|(k, c)| c * (2.0 * CORE.powi(1 - k as i32) / (k as f64 - 1.0)))
        .sum();
    Ok(Complex64::new(re, im) + tail)
}

/// Compare the numeric integral against `pi * contour` at the same assignment.
pub fn quadrature_oracle(
    f: &RatXi,
    assignment: &Assignment,
    rel_tol: f64,
) -> Result<QuadratureOutcome, PipelineError> {
    let numeric = integrate_real_line(f, assignment)?;
    let (er, ei) = contour_gamma_plus(f)?.coeff.eval(assignment)?.to_f64_pair();
    let exact = Complex64::new(er, ei) * std::f64::consts::PI;
    let abs_error = (numeric - exact).norm();
    let pass = if exact.norm() == 0.0 {
        abs_error < rel_tol
    } else {
        abs_error / exact.norm() < rel_tol
    };
    Ok(QuadratureOutcome {
        numeric: [numeric.re, numeric.im],
        exact: [exact.re, exact.im],
        abs_error,
        pass,
    })
}
