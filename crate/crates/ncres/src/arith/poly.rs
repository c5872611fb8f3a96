use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::gaussian::GaussianRational;
use super::symbol::{GeomSymbol, Monomial, Parity};
use crate::error::ArithError;

/// Sparse polynomial over `GaussianRational` in the geometric alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SymbolPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

/// Assignment of values to symbols for evaluation.
pub type Assignment = BTreeMap<GeomSymbol, GaussianRational>;

impl SymbolPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::int(n))
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn term(m: Monomial, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn sym(s: GeomSymbol) -> Self {
        Self::term(Monomial::of(&[s]), GaussianRational::one())
    }

    pub fn monomial(symbols: &[GeomSymbol]) -> Self {
        Self::term(Monomial::of(symbols), GaussianRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// The constant term, when the polynomial has no symbolic part.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        let slot = self.terms.entry(m).or_insert_with(GaussianRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// `None` when the terms do not share one parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Keep only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Rebuild term by term; each monomial maps to a polynomial.
    pub fn flat_map_terms<E>(
        &self,
        mut f: impl FnMut(&Monomial, &GaussianRational) -> Result<SymbolPoly, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out = &out + &f(m, c)?;
        }
        Ok(out)
    }

    pub fn eval(&self, assignment: &Assignment) -> Result<GaussianRational, ArithError> {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.symbols() {
                let x = assignment
                    .get(&s)
                    .ok_or(ArithError::IncompleteAssignment(s))?;
                v = &v * &x.pow(e as i64)?;
            }
            acc += &v;
        }
        Ok(acc)
    }
}

impl From<GaussianRational> for SymbolPoly {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a SymbolPoly> for &'a SymbolPoly {
    type Output = SymbolPoly;
    fn add(self, rhs: &SymbolPoly) -> SymbolPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a SymbolPoly> for &'a SymbolPoly {
    type Output = SymbolPoly;
    fn sub(self, rhs: &SymbolPoly) -> SymbolPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a SymbolPoly> for &'a SymbolPoly {
    type Output = SymbolPoly;
    fn mul(self, rhs: &SymbolPoly) -> SymbolPoly {
        let mut out = SymbolPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &SymbolPoly {
    type Output = SymbolPoly;
    fn neg(self) -> SymbolPoly {
        SymbolPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for SymbolPoly {
    type Output = SymbolPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for SymbolPoly {
    type Output = SymbolPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for SymbolPoly {
    type Output = SymbolPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for SymbolPoly {
    type Output = SymbolPoly;
    fn neg(self) -> Self {
        -&self
    }
}

impl std::iter::Sum for SymbolPoly {
    fn sum<I: Iterator<Item = SymbolPoly>>(iter: I) -> Self {
        iter.fold(SymbolPoly::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    monomial: String,
    coeff: &'a GaussianRational,
}

impl Serialize for SymbolPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord<'_>> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                monomial: m.to_string(),
                coeff: c,
            })
            .collect();
        records.serialize(s)
    }
}

impl One for SymbolPoly {
    fn one() -> Self {
        SymbolPoly::one()
    }
}

impl Zero for SymbolPoly {
    fn zero() -> Self {
        SymbolPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeomSymbol::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::int(n)
    }

    #[test]
    fn product_of_symbols() {
        let p = &SymbolPoly::sym(XN) * &SymbolPoly::sym(H1);
        assert_eq!(p, SymbolPoly::monomial(&[XN, H1]));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn zero_annihilates() {
        let p = &SymbolPoly::sym(GXXI) + &SymbolPoly::sym(XN);
        assert!((&p * &SymbolPoly::zero()).is_zero());
    }

    #[test]
    fn parity_of_square() {
        let p = &SymbolPoly::sym(GXXI) * &SymbolPoly::sym(GXXI);
        assert_eq!(p.parity(), Some(Parity::Even));
        assert_eq!(SymbolPoly::sym(GXXI).parity(), Some(Parity::Odd));
    }

    #[test]
    fn evaluation() {
        let a: Assignment = [(XN, g(2)), (H1, g(3))].into_iter().collect();
        assert_eq!(SymbolPoly::monomial(&[XN, H1]).eval(&a).unwrap(), g(6));
        assert_eq!(SymbolPoly::zero().eval(&Assignment::new()).unwrap(), g(0));
        let b: Assignment = [(GXXI, GaussianRational::frac(1, 2))].into_iter().collect();
        assert_eq!(
            SymbolPoly::monomial(&[GXXI, GXXI]).eval(&b).unwrap(),
            GaussianRational::frac(1, 4)
        );
    }

    #[test]
    fn missing_symbol_is_reported() {
        let a: Assignment = [(XN, g(2))].into_iter().collect();
        assert_eq!(
            SymbolPoly::monomial(&[XN, H1]).eval(&a),
            Err(ArithError::IncompleteAssignment(H1))
        );
    }

    #[test]
    fn cancellation_prunes() {
        let p = &SymbolPoly::sym(XN) - &SymbolPoly::sym(XN);
        assert!(p.is_zero());
    }
}
