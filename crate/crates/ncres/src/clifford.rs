//! Clifford words over named vector atoms and their normalized traces.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::arith::{GaussianRational, GeomSymbol, SymbolPoly};
use crate::error::CliffordError;
use crate::xi::RatXi;

/// A letter of a Clifford word: a vector atom or the `A(X)` bivector marker.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
pub enum Letter {
    /// c(xi')
    XiPrime,
    /// c(dx_n)
    DxN,
    /// c(X)
    XVec,
    /// d/dx_n c(xi') at the boundary point
    DXiPrime,
    /// d/dx_n c(X) at the boundary point
    DXVec,
    /// A(X)
    AX,
}

impl Letter {
    pub const VECTORS: [Letter; 5] = [
        Letter::XiPrime,
        Letter::DxN,
        Letter::XVec,
        Letter::DXiPrime,
        Letter::DXVec,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Letter::XiPrime => "c(xi')",
            Letter::DxN => "c(dxn)",
            Letter::XVec => "c(X)",
            Letter::DXiPrime => "dxn c(xi')",
            Letter::DXVec => "dxn c(X)",
            Letter::AX => "A(X)",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn of(letters: &[Letter]) -> Self {
        Self(letters.to_vec())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn has_ax(&self) -> bool {
        self.0.contains(&Letter::AX)
    }

    pub fn concat(&self, other: &Word) -> Result<Word, CliffordError> {
        if self.has_ax() && other.has_ax() {
            return Err(CliffordError::DoubleBivector);
        }
        Ok(Word(self.0.iter().chain(other.0.iter()).copied().collect()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<&str> = self.0.iter().map(|l| l.label()).collect();
        f.write_str(&parts.join("·"))
    }
}

/// Symmetric bilinear pairing between vector atoms at the boundary point.
#[derive(Clone, Debug)]
pub struct PairingTable {
    entries: BTreeMap<(Letter, Letter), SymbolPoly>,
}

impl PairingTable {
    pub fn standard() -> Self {
        use GeomSymbol::*;
        use Letter::*;
        let half = GaussianRational::frac(1, 2);
        let half_h1 = SymbolPoly::sym(H1).scale(&half);
        let half_h1_gxxi = SymbolPoly::monomial(&[H1, GXXI]).scale(&half);
        let rows = [
            (XiPrime, XiPrime, SymbolPoly::one()),
            (DxN, DxN, SymbolPoly::one()),
            (XiPrime, DxN, SymbolPoly::zero()),
            (XVec, XiPrime, SymbolPoly::sym(GXXI)),
            (XVec, DxN, SymbolPoly::sym(XN)),
            (DXVec, XiPrime, &SymbolPoly::sym(DGXXI) - &half_h1_gxxi),
            (DXVec, DxN, SymbolPoly::sym(DXN)),
            (DXiPrime, XiPrime, half_h1),
            (DXiPrime, DxN, SymbolPoly::zero()),
            (XVec, DXiPrime, half_h1_gxxi),
        ];
        let mut entries = BTreeMap::new();
        for (a, b, v) in rows {
            entries.insert((a.min(b), a.max(b)), v);
        }
        Self { entries }
    }

    pub fn get(&self, a: Letter, b: Letter) -> Result<&SymbolPoly, CliffordError> {
        self.entries
            .get(&(a.min(b), a.max(b)))
            .ok_or_else(|| CliffordError::UndefinedPairing(a.to_string(), b.to_string()))
    }
}

/// Normalized trace (empty word gives 1) by signed perfect-matching expansion:
/// `tr(v1 ... v2k) = sum_j (-1)^j (-g(v1, vj)) tr(word without v1, vj)`.
pub fn wick_trace_with<T, R, E>(
    word: &[T],
    pairing: &impl Fn(&T, &T) -> Result<R, E>,
) -> Result<R, E>
where
    R: Clone + Zero + One + Neg<Output = R> + Mul<Output = R> + Add<Output = R>,
{
    let idx: Vec<usize> = (0..word.len()).collect();
    wick_indices(word, &idx, pairing)
}

fn wick_indices<T, R, E>(
    word: &[T],
    idx: &[usize],
    pairing: &impl Fn(&T, &T) -> Result<R, E>,
) -> Result<R, E>
where
    R: Clone + Zero + One + Neg<Output = R> + Mul<Output = R> + Add<Output = R>,
{
    if idx.is_empty() {
        return Ok(R::one());
    }
    if idx.len() % 2 == 1 {
        return Ok(R::zero());
    }
    let first = &word[idx[0]];
    let mut acc = R::zero();
    for j in 1..idx.len() {
        let g = pairing(first, &word[idx[j]])?;
        if g.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|(k, _)| *k + 1 != j)
            .map(|(_, t)| *t)
            .collect();
        let sub = wick_indices(word, &rest, pairing)?;
        // 1-based position j+1 carries sign (-1)^(j+1)
        let term = if j % 2 == 1 { -g } else { g };
        acc = acc + term * sub;
    }
    Ok(acc)
}

/// Symbolic trace of a word without `A(X)`.
pub fn wick_trace(word: &Word, table: &PairingTable) -> Result<SymbolPoly, CliffordError> {
    if word.has_ax() {
        return trace_with_ax(word);
    }
    wick_trace_with(word.letters(), &|a: &Letter, b: &Letter| {
        table.get(*a, *b).cloned()
    })
}

/// Trace of a word carrying one `A(X)`, using `tr[A(X)] = 0`.
pub fn trace_with_ax(word: &Word) -> Result<SymbolPoly, CliffordError> {
    let pos = word
        .letters()
        .iter()
        .position(|l| *l == Letter::AX)
        .ok_or_else(|| CliffordError::OutOfScopeWord(format!("{word} has no A(X)")))?;
    let mut rotated: Vec<Letter> = word.letters()[pos..].to_vec();
    rotated.extend_from_slice(&word.letters()[..pos]);
    let companions = &rotated[1..];
    if companions.contains(&Letter::AX) {
        return Err(CliffordError::DoubleBivector);
    }
    match companions {
        [] | [_] => Ok(SymbolPoly::zero()),
        [a, b] if a == b => Ok(SymbolPoly::zero()),
        [Letter::XiPrime, Letter::DxN] => Ok(SymbolPoly::sym(GeomSymbol::TRAX_XI_DN)),
        [Letter::DxN, Letter::XiPrime] => Ok(-SymbolPoly::sym(GeomSymbol::TRAX_XI_DN)),
        _ => Err(CliffordError::OutOfScopeWord(word.to_string())),
    }
}

/// Linear combination of words with `RatXi` coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CliffordExpr {
    terms: BTreeMap<Word, RatXi>,
}

impl CliffordExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(word: Word, coeff: RatXi) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Self { terms }
    }

    pub fn scalar(coeff: RatXi) -> Self {
        Self::term(Word::empty(), coeff)
    }

    pub fn letter(l: Letter) -> Self {
        Self::term(Word::of(&[l]), RatXi::one())
    }

    /// `c(xi) = c(xi') + xi c(dx_n)`
    pub fn c_xi() -> Self {
        &Self::letter(Letter::XiPrime) + &Self::term(Word::of(&[Letter::DxN]), RatXi::x())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatXi)> {
        self.terms.iter()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|w| w.0.len()).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Word, c: RatXi) {
        let next = match self.terms.remove(&w) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !next.is_zero() {
            self.terms.insert(w, next);
        }
    }

    pub fn scale(&self, c: &RatXi) -> Self {
        self.map_coeffs(|r| r * c)
    }

    pub fn scale_poly(&self, c: &SymbolPoly) -> Self {
        self.map_coeffs(|r| r.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatXi) -> RatXi) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<E>(&self, f: impl Fn(&RatXi) -> Result<RatXi, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Replace each letter by an expression (a derivation acting letterwise).
    pub fn substitute_letters(
        &self,
        f: impl Fn(Letter) -> CliffordExpr,
    ) -> Result<Self, CliffordError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = CliffordExpr::scalar(c.clone());
            for l in w.letters() {
                acc = acc.mul(&f(*l))?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CliffordError> {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Normalized trace: a rational function of `xi` (empty word has trace 1).
    pub fn trace(&self, table: &PairingTable) -> Result<RatXi, CliffordError> {
        let mut acc = RatXi::zero();
        for (w, c) in &self.terms {
            let t = wick_trace(w, table)?;
            if !t.is_zero() {
                acc = &acc + &c.scale(&t);
            }
        }
        Ok(acc)
    }
}

impl<'a> Add<&'a CliffordExpr> for &'a CliffordExpr {
    type Output = CliffordExpr;
    fn add(self, rhs: &CliffordExpr) -> CliffordExpr {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &CliffordExpr {
    type Output = CliffordExpr;
    fn neg(self) -> CliffordExpr {
        self.map_coeffs(|c| -c)
    }
}

impl fmt::Display for CliffordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{{{c}}} {w}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeomSymbol::*;
    use Letter::*;

    fn tr(ls: &[Letter]) -> Result<SymbolPoly, CliffordError> {
        wick_trace(&Word::of(ls), &PairingTable::standard())
    }

    #[test]
    fn paired_traces() {
        assert_eq!(tr(&[XVec, DxN]).unwrap(), -SymbolPoly::sym(XN));
        assert!(tr(&[XiPrime, DxN]).unwrap().is_zero());
        assert_eq!(tr(&[XiPrime; 4]).unwrap(), SymbolPoly::one());
        assert_eq!(
            tr(&[XVec, DXiPrime]).unwrap(),
            SymbolPoly::monomial(&[H1, GXXI]).scale(&GaussianRational::frac(-1, 2))
        );
    }

    #[test]
    fn odd_words_vanish() {
        assert!(tr(&[XVec, DxN, XiPrime]).unwrap().is_zero());
    }

    #[test]
    fn undefined_pairing_errors() {
        assert!(matches!(
            tr(&[DXiPrime, DXiPrime]),
            Err(CliffordError::UndefinedPairing(..))
        ));
    }

    #[test]
    fn four_letter_expansion() {
        // g(ab)g(cd) - g(ac)g(bd) + g(ad)g(bc) with only g(X, xi') g(dn, dn) surviving
        assert_eq!(
            tr(&[XVec, DxN, DxN, XiPrime]).unwrap(),
            SymbolPoly::sym(GXXI)
        );
    }

    #[test]
    fn bivector_rules() {
        assert!(trace_with_ax(&Word::of(&[AX])).unwrap().is_zero());
        assert!(trace_with_ax(&Word::of(&[AX, DxN, DxN])).unwrap().is_zero());
        assert_eq!(
            trace_with_ax(&Word::of(&[AX, XiPrime, DxN])).unwrap(),
            SymbolPoly::sym(TRAX_XI_DN)
        );
        assert_eq!(
            trace_with_ax(&Word::of(&[DxN, AX, XiPrime])).unwrap(),
            SymbolPoly::sym(TRAX_XI_DN)
        );
        assert!(matches!(
            trace_with_ax(&Word::of(&[AX, XiPrime, DxN, XiPrime, DxN])),
            Err(CliffordError::OutOfScopeWord(_))
        ));
    }

    #[test]
    fn product_examples() {
        let p = CliffordExpr::letter(XiPrime)
            .mul(&CliffordExpr::letter(DxN))
            .unwrap();
        assert_eq!(
            p,
            CliffordExpr::term(Word::of(&[XiPrime, DxN]), RatXi::one())
        );
        let s = &CliffordExpr::letter(XiPrime) + &CliffordExpr::letter(DxN);
        assert_eq!(s.mul(&s).unwrap().terms().count(), 4);
        let two = CliffordExpr::scalar(RatXi::scalar(GaussianRational::int(2)));
        assert_eq!(
            two.mul(&s).unwrap(),
            s.scale(&RatXi::scalar(GaussianRational::int(2)))
        );
    }

    #[test]
    fn double_bivector_errors() {
        let a = CliffordExpr::letter(AX);
        assert_eq!(a.mul(&a), Err(CliffordError::DoubleBivector));
    }

    #[test]
    fn c_xi_squares_to_minus_s() {
        let c = CliffordExpr::c_xi();
        let t = c.mul(&c).unwrap().trace(&PairingTable::standard()).unwrap();
        assert_eq!(t, -RatXi::s_pow(1));
    }
}
