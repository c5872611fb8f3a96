//! Rational functions of the normal covariable with poles only at `xi = +i` and `xi = -i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{Assignment, GaussianRational, SymbolPoly};
use crate::error::{ArithError, XiError};

/// Polynomial in `xi` with `SymbolPoly` coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct XiPoly {
    coeffs: Vec<SymbolPoly>,
}

impl XiPoly {
    pub fn new(mut coeffs: Vec<SymbolPoly>) -> Self {
        while coeffs.last().is_some_and(SymbolPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: SymbolPoly) -> Self {
        Self::new(vec![c])
    }

    /// `xi`
    pub fn x() -> Self {
        Self::new(vec![SymbolPoly::zero(), SymbolPoly::one()])
    }

    /// Build from scalar coefficients, lowest degree first.
    pub fn from_scalars(cs: &[GaussianRational]) -> Self {
        Self::new(cs.iter().cloned().map(SymbolPoly::constant).collect())
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| SymbolPoly::int(c)).collect())
    }

    /// `(xi - a)^k`
    pub fn linear_pow(a: &GaussianRational, k: u32) -> Self {
        let lin = Self::new(vec![SymbolPoly::constant(-a), SymbolPoly::one()]);
        (0..k).fold(Self::constant(SymbolPoly::one()), |acc, _| &acc * &lin)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[SymbolPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> SymbolPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &SymbolPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&GaussianRational::int(k as i64)))
                .collect(),
        )
    }

    pub fn eval_at(&self, x: &GaussianRational) -> SymbolPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(SymbolPoly::zero(), |acc, c| &acc.scale(x) + c)
    }

    /// Divide by `(xi - a)`, returning quotient and remainder.
    pub fn div_linear(&self, a: &GaussianRational) -> (Self, SymbolPoly) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::zero(), SymbolPoly::zero());
        }
        let mut q = vec![SymbolPoly::zero(); n - 1];
        let mut carry = SymbolPoly::zero();
        for k in (0..n).rev() {
            let v = &self.coeffs[k] + &carry.scale(a);
            if k == 0 {
                return (Self::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Long division by a monic polynomial.
    pub fn div_rem_monic(&self, d: &XiPoly) -> (Self, Self) {
        let dd = d.degree().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![SymbolPoly::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let lead = rem[k].clone();
            if lead.is_zero() {
                continue;
            }
            q[k - dd] = lead.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&lead * dc);
            }
        }
        (Self::new(q), Self::new(rem))
    }

    /// Taylor coefficients about `a`: `N(a + t) = sum c_j t^j`.
    pub fn shift(&self, a: &GaussianRational) -> Vec<SymbolPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.div_linear(a);
            out.push(r);
            cur = q;
        }
        out
    }

    pub fn substitute(&self, a: &Assignment) -> Result<Vec<GaussianRational>, ArithError> {
        self.coeffs.iter().map(|c| c.eval(a)).collect()
    }
}

impl<'a> Add<&'a XiPoly> for &'a XiPoly {
    type Output = XiPoly;
    fn add(self, rhs: &XiPoly) -> XiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XiPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a XiPoly> for &'a XiPoly {
    type Output = XiPoly;
    fn sub(self, rhs: &XiPoly) -> XiPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a XiPoly> for &'a XiPoly {
    type Output = XiPoly;
    fn mul(self, rhs: &XiPoly) -> XiPoly {
        if self.is_zero() || rhs.is_zero() {
            return XiPoly::zero();
        }
        let mut out = vec![SymbolPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XiPoly::new(out)
    }
}

impl Neg for &XiPoly {
    type Output = XiPoly;
    fn neg(self) -> XiPoly {
        XiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("[{c}]"),
                1 => format!("[{c}]*xi"),
                _ => format!("[{c}]*xi^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `num / ((xi - i)^p (xi + i)^q)`, kept reduced: `num(i) != 0` when `p > 0`
/// and `num(-i) != 0` when `q > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RatXi {
    num: XiPoly,
    p: u32,
    q: u32,
}

fn plus_i() -> GaussianRational {
    GaussianRational::i()
}

fn minus_i() -> GaussianRational {
    -GaussianRational::i()
}

impl RatXi {
    pub fn new(num: XiPoly, p: u32, q: u32) -> Self {
        let mut out = Self { num, p, q };
        out.canonicalize();
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: SymbolPoly) -> Self {
        Self::new(XiPoly::constant(c), 0, 0)
    }

    pub fn scalar(c: GaussianRational) -> Self {
        Self::constant(SymbolPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::scalar(GaussianRational::one())
    }

    pub fn x() -> Self {
        Self::new(XiPoly::x(), 0, 0)
    }

    pub fn poly(num: XiPoly) -> Self {
        Self::new(num, 0, 0)
    }

    /// `(1 + xi^2)^{-k}`
    pub fn inv_s_pow(k: u32) -> Self {
        Self::new(XiPoly::constant(SymbolPoly::one()), k, k)
    }

    /// `(1 + xi^2)^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            let s = XiPoly::from_ints(&[1, 0, 1]);
            Self::poly((0..k).fold(XiPoly::constant(SymbolPoly::one()), |acc, _| &acc * &s))
        } else {
            Self::inv_s_pow((-k) as u32)
        }
    }

    pub fn num(&self) -> &XiPoly {
        &self.num
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.p = 0;
            self.q = 0;
            return;
        }
        while self.p > 0 {
            let (quo, rem) = self.num.div_linear(&plus_i());
            if !rem.is_zero() {
                break;
            }
            self.num = quo;
            self.p -= 1;
        }
        while self.q > 0 {
            let (quo, rem) = self.num.div_linear(&minus_i());
            if !rem.is_zero() {
                break;
            }
            self.num = quo;
            self.q -= 1;
        }
    }

    /// Numerator over the wider denominator `(xi-i)^p (xi+i)^q`.
    fn lifted(&self, p: u32, q: u32) -> XiPoly {
        let a = XiPoly::linear_pow(&plus_i(), p - self.p);
        let b = XiPoly::linear_pow(&minus_i(), q - self.q);
        &(&self.num * &a) * &b
    }

    pub fn scale(&self, c: &SymbolPoly) -> Self {
        Self::new(self.num.scale(c), self.p, self.q)
    }

    pub fn scale_scalar(&self, c: &GaussianRational) -> Self {
        self.scale(&SymbolPoly::constant(c.clone()))
    }

    /// Decay rate at infinity: pole order minus numerator degree; `None` for zero.
    pub fn decay(&self) -> Option<i64> {
        self.num
            .degree()
            .map(|d| (self.p + self.q) as i64 - d as i64)
    }

    pub fn diff(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let up = if self.p > 0 {
            XiPoly::linear_pow(&plus_i(), 1)
        } else {
            XiPoly::linear_pow(&plus_i(), 0)
        };
        let lo = if self.q > 0 {
            XiPoly::linear_pow(&minus_i(), 1)
        } else {
            XiPoly::linear_pow(&minus_i(), 0)
        };
        let d = &(&self.num.derivative() * &up) * &lo;
        let a = (&self.num * &lo).scale(&SymbolPoly::int(self.p as i64));
        let b = (&self.num * &up).scale(&SymbolPoly::int(self.q as i64));
        let num = &(&d - &a) - &b;
        Self::new(
            num,
            self.p + u32::from(self.p > 0),
            self.q + u32::from(self.q > 0),
        )
    }

    /// k-fold derivative in `xi`.
    pub fn diff_n(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |f, _| f.diff())
    }

    /// Value at a regular point.
    pub fn eval_at(&self, x: &GaussianRational) -> Result<SymbolPoly, ArithError> {
        let den = &(x - &plus_i()).pow(self.p as i64)? * &(x + &plus_i()).pow(self.q as i64)?;
        Ok(self.num.eval_at(x).scale(&den.inv()?))
    }

    /// Substitute symbol values, leaving a scalar rational function.
    pub fn substitute(&self, a: &Assignment) -> Result<Self, ArithError> {
        let cs = self.num.substitute(a)?;
        Ok(Self::new(XiPoly::from_scalars(&cs), self.p, self.q))
    }

    /// Apply `f` to every numerator coefficient.
    pub fn try_map_coeffs<E>(
        &self,
        f: impl Fn(&SymbolPoly) -> Result<SymbolPoly, E>,
    ) -> Result<Self, E> {
        let cs = self
            .num
            .coeffs()
            .iter()
            .map(f)
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Self::new(XiPoly::new(cs), self.p, self.q))
    }

    pub fn render(&self) -> String {
        format!("{} / (xi-i)^{} (xi+i)^{}", self.num, self.p, self.q)
    }
}

impl fmt::Display for RatXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for RatXi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'a> Add<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn add(self, rhs: &RatXi) -> RatXi {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let p = self.p.max(rhs.p);
        let q = self.q.max(rhs.q);
        RatXi::new(&self.lifted(p, q) + &rhs.lifted(p, q), p, q)
    }
}

impl<'a> Sub<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn sub(self, rhs: &RatXi) -> RatXi {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn mul(self, rhs: &RatXi) -> RatXi {
        RatXi::new(&self.num * &rhs.num, self.p + rhs.p, self.q + rhs.q)
    }
}

impl Neg for &RatXi {
    type Output = RatXi;
    fn neg(self) -> RatXi {
        RatXi {
            num: -&self.num,
            p: self.p,
            q: self.q,
        }
    }
}

impl Add for RatXi {
    type Output = RatXi;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RatXi {
    type Output = RatXi;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RatXi {
    type Output = RatXi;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for RatXi {
    type Output = RatXi;
    fn neg(self) -> Self {
        -&self
    }
}

impl Zero for RatXi {
    fn zero() -> Self {
        RatXi::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatXi {
    fn one() -> Self {
        RatXi::one()
    }
}

/// `f = poly + sum upper[k-1] / (xi-i)^k + sum lower[k-1] / (xi+i)^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialFractions {
    pub poly: XiPoly,
    pub upper: Vec<SymbolPoly>,
    pub lower: Vec<SymbolPoly>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatXi {
        let mut acc = RatXi::poly(self.poly.clone());
        for (k, c) in self.upper.iter().enumerate() {
            acc = &acc + &RatXi::new(XiPoly::constant(c.clone()), k as u32 + 1, 0);
        }
        for (k, c) in self.lower.iter().enumerate() {
            acc = &acc + &RatXi::new(XiPoly::constant(c.clone()), 0, k as u32 + 1);
        }
        acc
    }
}

/// Series coefficients of `(a + t)^{-q}` about `t = 0`, up to `t^{len-1}`.
fn inv_linear_series(a: &GaussianRational, q: u32, len: usize) -> Vec<GaussianRational> {
    let inv_a = a.inv().expect("pole separation is nonzero");
    let mut out = Vec::with_capacity(len);
    let mut c = inv_a.pow(q as i64).expect("nonzero base");
    for j in 0..len {
        out.push(c.clone());
        // C(-q, j+1) / C(-q, j) = (-q - j) / (j + 1)
        let ratio = GaussianRational::frac(-(q as i64) - j as i64, j as i64 + 1);
        c = &(&c * &ratio) * &inv_a;
    }
    out
}

/// Principal-part coefficients at `pole` of `num / ((xi-pole)^k (xi-other)^r)`.
fn principal_part(
    num: &XiPoly,
    pole: &GaussianRational,
    k: u32,
    other: &GaussianRational,
    r: u32,
) -> Vec<SymbolPoly> {
    if k == 0 {
        return Vec::new();
    }
    let k = k as usize;
    let taylor = num.shift(pole);
    let series = inv_linear_series(&(pole - other), r, k);
    // coefficient of t^j in num(pole+t) (pole-other+t)^{-r}
    let g: Vec<SymbolPoly> = (0..k)
        .map(|j| {
            (0..=j)
                .filter_map(|a| taylor.get(a).map(|c| c.scale(&series[j - a])))
                .sum()
        })
        .collect();
    // (xi-pole)^{-k} sum g_j t^j: coefficient of t^{-s} is g_{k-s}
    (1..=k).map(|s| g[k - s].clone()).collect()
}

pub fn rx_partial_fractions(f: &RatXi) -> PartialFractions {
    let den = &XiPoly::linear_pow(&plus_i(), f.p) * &XiPoly::linear_pow(&minus_i(), f.q);
    let (poly, _) = f.num.div_rem_monic(&den);
    PartialFractions {
        poly,
        upper: principal_part(&f.num, &plus_i(), f.p, &minus_i(), f.q),
        lower: principal_part(&f.num, &minus_i(), f.q, &plus_i(), f.p),
    }
}

fn upper_part(pf: &PartialFractions) -> RatXi {
    let p = pf.upper.len() as u32;
    // sum_k c_k (xi-i)^{p-k}
    let num = pf
        .upper
        .iter()
        .enumerate()
        .fold(XiPoly::zero(), |acc, (k, c)| {
            &acc + &XiPoly::linear_pow(&plus_i(), p - 1 - k as u32).scale(c)
        });
    RatXi::new(num, p, 0)
}

fn require_decay(f: &RatXi) -> Result<(), XiError> {
    match f.num.degree() {
        Some(d) if d as u32 >= f.p + f.q => Err(XiError::NonDecaying {
            deg: d,
            poles: f.p + f.q,
        }),
        _ => Ok(()),
    }
}

/// Projection onto the upper-half-plane principal parts. Rejects inputs with a
/// polynomial part.
pub fn pi_plus(f: &RatXi) -> Result<RatXi, XiError> {
    require_decay(f)?;
    Ok(upper_part(&rx_partial_fractions(f)))
}

/// Projection that discards any polynomial part before keeping the upper principal part.
pub fn pi_plus_truncating(f: &RatXi) -> RatXi {
    upper_part(&rx_partial_fractions(f))
}

/// Exact multiple of `pi`: the semantic value is `pi * coeff`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct PiScaledValue {
    pub coeff: SymbolPoly,
}

impl PiScaledValue {
    pub fn new(coeff: SymbolPoly) -> Self {
        Self { coeff }
    }
}

impl fmt::Display for PiScaledValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi * ({})", self.coeff)
    }
}

/// Integral over a contour enclosing `xi = i`, by differentiating
/// `(xi-i)^p f` and evaluating at `i`.
pub fn contour_gamma_plus(f: &RatXi) -> Result<PiScaledValue, XiError> {
    require_decay(f)?;
    if f.p == 0 {
        return Ok(PiScaledValue::default());
    }
    let g = RatXi::new(f.num.clone(), 0, f.q);
    let d = g.diff_n(f.p - 1).eval_at(&plus_i())?;
    let fact: i64 = (1..f.p as i64).product();
    let two_i = GaussianRational::from_ints(0, 2);
    Ok(PiScaledValue::new(
        d.scale(&two_i.checked_div(&GaussianRational::int(fact))?),
    ))
}

/// The same integral read off the first upper partial-fraction coefficient.
pub fn contour_by_partial_fractions(f: &RatXi) -> Result<PiScaledValue, XiError> {
    require_decay(f)?;
    let pf = rx_partial_fractions(f);
    let res = pf.upper.first().cloned().unwrap_or_default();
    Ok(PiScaledValue::new(
        res.scale(&GaussianRational::from_ints(0, 2)),
    ))
}

/// `(1/2pi) * contour`: the result is a plain coefficient, no `pi` factor.
pub fn pi_prime(f: &RatXi) -> Result<SymbolPoly, XiError> {
    Ok(contour_gamma_plus(f)?
        .coeff
        .scale(&GaussianRational::frac(1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> SymbolPoly {
        SymbolPoly::constant(GaussianRational::from_fracs(re, im))
    }

    fn pole(p: u32, q: u32) -> RatXi {
        RatXi::new(XiPoly::from_ints(&[1]), p, q)
    }

    #[test]
    fn sum_of_simple_poles() {
        let s = &pole(1, 0) + &pole(0, 1);
        assert_eq!(s, RatXi::new(XiPoly::from_ints(&[0, 2]), 1, 1));
    }

    #[test]
    fn zero_product_has_no_poles() {
        let z = &pole(2, 3) * &RatXi::zero();
        assert_eq!((z.p(), z.q()), (0, 0));
        assert!(z.is_zero());
    }

    #[test]
    fn cancellation_reduces_pole_order() {
        let f = RatXi::new(XiPoly::x(), 1, 1);
        let lin = RatXi::poly(XiPoly::linear_pow(&GaussianRational::i(), 1));
        assert_eq!(&f * &lin, RatXi::new(XiPoly::x(), 0, 1));
    }

    #[test]
    fn derivative_of_simple_pole() {
        assert_eq!(pole(0, 1).diff(), pole(0, 2).scale(&SymbolPoly::int(-1)));
        assert!(RatXi::scalar(GaussianRational::int(5)).diff().is_zero());
    }

    #[test]
    fn third_derivative_falling_factorial() {
        assert_eq!(
            pole(0, 2).diff_n(3),
            pole(0, 5).scale(&SymbolPoly::int(-24))
        );
    }

    #[test]
    fn partial_fractions_of_inverse_s() {
        let pf = rx_partial_fractions(&pole(1, 1));
        assert!(pf.poly.is_zero());
        assert_eq!(pf.upper, vec![g((0, 1), (-1, 2))]);
        assert_eq!(pf.lower, vec![g((0, 1), (1, 2))]);
    }

    #[test]
    fn partial_fractions_of_xi_over_s() {
        let pf = rx_partial_fractions(&RatXi::new(XiPoly::x(), 1, 1));
        assert_eq!(pf.upper, vec![g((1, 2), (0, 1))]);
        assert_eq!(pf.lower, vec![g((1, 2), (0, 1))]);
    }

    #[test]
    fn polynomial_input_keeps_poly_part() {
        let f = RatXi::poly(XiPoly::from_ints(&[1, 2, 3]));
        let pf = rx_partial_fractions(&f);
        assert_eq!(pf.poly, XiPoly::from_ints(&[1, 2, 3]));
        assert!(pf.upper.is_empty() && pf.lower.is_empty());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            pi_plus(&pole(1, 1)).unwrap(),
            pole(1, 0).scale(&g((0, 1), (-1, 2)))
        );
        assert!(pi_plus(&pole(0, 1)).unwrap().is_zero());
        assert_eq!(
            pi_plus(&RatXi::new(XiPoly::x(), 1, 1)).unwrap(),
            pole(1, 0).scale(&g((1, 2), (0, 1)))
        );
    }

    #[test]
    fn projection_rejects_polynomial_part() {
        let f = RatXi::new(XiPoly::from_ints(&[0, 0, 1]), 1, 1);
        assert!(matches!(pi_plus(&f), Err(XiError::NonDecaying { .. })));
        assert_eq!(
            pi_plus_truncating(&f),
            pi_plus(&(&f - &RatXi::one())).unwrap()
        );
    }

    #[test]
    fn contour_examples() {
        assert_eq!(
            contour_gamma_plus(&pole(1, 1)).unwrap().coeff,
            SymbolPoly::int(1)
        );
        // 2 pi i / 2! * d^2/dxi^2 (xi+i)^-2 at i = 2 pi i * 6 / (2 * (2i)^4) = 3 pi i / 8
        assert_eq!(
            contour_gamma_plus(&pole(3, 2)).unwrap().coeff,
            g((0, 1), (3, 8))
        );
        assert!(contour_gamma_plus(&pole(0, 1)).unwrap().coeff.is_zero());
    }

    #[test]
    fn contour_agrees_with_partial_fractions() {
        for (p, q) in [(2, 1), (3, 2), (2, 5), (4, 1)] {
            let f = RatXi::new(XiPoly::from_ints(&[2, -1, 3]), p, q);
            assert_eq!(
                contour_gamma_plus(&f).unwrap(),
                contour_by_partial_fractions(&f).unwrap()
            );
        }
    }

    #[test]
    fn render_shape() {
        assert_eq!(pole(1, 2).render(), "[(1)*1] / (xi-i)^1 (xi+i)^2");
    }
}
