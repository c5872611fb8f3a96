use std::fmt;

use serde::Serialize;

/// Parity under the antipodal map of the boundary cosphere.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The closed alphabet of geometric scalars at the boundary point.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum GeomSymbol {
    /// h'(0)
    H1,
    /// X_n
    XN,
    /// d/dx_n X_n
    DXN,
    /// g(X, xi')
    GXXI,
    /// d/dx_n g(X, xi')
    DGXXI,
    /// tr[A(X) c(xi') c(dx_n)] / tr[id]
    TRAX_XI_DN,
    /// Vol(S^{n-2})
    VOLS,
}

impl GeomSymbol {
    pub const ALL: [GeomSymbol; 7] = [
        GeomSymbol::H1,
        GeomSymbol::XN,
        GeomSymbol::DXN,
        GeomSymbol::GXXI,
        GeomSymbol::DGXXI,
        GeomSymbol::TRAX_XI_DN,
        GeomSymbol::VOLS,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn parity(self) -> Parity {
        match self {
            GeomSymbol::GXXI | GeomSymbol::DGXXI | GeomSymbol::TRAX_XI_DN => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeomSymbol::H1 => "H1",
            GeomSymbol::XN => "XN",
            GeomSymbol::DXN => "DXN",
            GeomSymbol::GXXI => "GXXI",
            GeomSymbol::DGXXI => "DGXXI",
            GeomSymbol::TRAX_XI_DN => "TRAX_XI_DN",
            GeomSymbol::VOLS => "VOLS",
        }
    }
}

impl fmt::Display for GeomSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the alphabet, ordered graded-lex in enum order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u8; 7]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(symbols: &[GeomSymbol]) -> Self {
        let mut e = [0u8; 7];
        for s in symbols {
            e[s.index()] += 1;
        }
        Self(e)
    }

    pub fn exponent(&self, s: GeomSymbol) -> u8 {
        self.0[s.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub fn parity(&self) -> Parity {
        let odd: u32 = self
            .symbols()
            .filter(|(s, _)| s.parity() == Parity::Odd)
            .map(|(_, e)| e as u32)
            .sum();
        if odd.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (GeomSymbol, u8)> + '_ {
        GeomSymbol::ALL
            .iter()
            .map(|s| (*s, self.exponent(*s)))
            .filter(|(_, e)| *e > 0)
    }

    /// Remove one factor of `s`, if present.
    pub fn without(&self, s: GeomSymbol) -> Option<Monomial> {
        let mut e = self.0;
        if e[s.index()] == 0 {
            return None;
        }
        e[s.index()] -= 1;
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .symbols()
            .map(|(s, e)| {
                if e == 1 {
                    s.to_string()
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeomSymbol::*;

    #[test]
    fn parity_is_xor() {
        assert_eq!(Monomial::of(&[GXXI, GXXI]).parity(), Parity::Even);
        assert_eq!(Monomial::of(&[GXXI, XN]).parity(), Parity::Odd);
        assert_eq!(Monomial::of(&[XN, H1, VOLS]).parity(), Parity::Even);
    }

    #[test]
    fn graded_order() {
        let a = Monomial::of(&[XN]);
        let b = Monomial::of(&[H1, XN]);
        let c = Monomial::of(&[H1]);
        assert!(a < b);
        assert!(c < a);
        assert!(Monomial::one() < c);
    }

    #[test]
    fn renders_in_enum_order() {
        assert_eq!(Monomial::of(&[VOLS, XN, H1]).to_string(), "H1*XN*VOLS");
        assert_eq!(Monomial::of(&[GXXI, GXXI]).to_string(), "GXXI^2");
    }
}
