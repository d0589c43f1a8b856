//! Ordinals below ε₀ in Cantor normal form.
//!
//! An ordinal is stored as a list of terms `ω^e · c` with strictly
//! decreasing exponents and positive coefficients. The exponents are
//! themselves ordinals, so every value is a finite tree and canonical:
//! two values denote the same ordinal iff they are structurally equal.
//!
//! The coefficient type is a parameter. [`crate::Ordinal`] uses
//! arbitrary-precision naturals, [`crate::SmallOrdinal`] uses `u64`
//! (arithmetic on it panics on overflow in debug builds, like any `u64`).

mod arith;
mod hessenberg;
mod notation;
mod text;

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, Num, ToPrimitive, Unsigned};
use thiserror::Error;

pub use text::Scanner;

/// Coefficient type of a Cantor normal form.
pub trait Natural:
    Num
    + Unsigned
    + CheckedAdd
    + CheckedMul
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Natural for T where
    T: Num
        + Unsigned
        + CheckedAdd
        + CheckedMul
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("left_subtract: {left} is greater than {right}")]
    NotLessOrEqual { left: String, right: String },
    #[error("{0} is undefined at zero")]
    ZeroArgument(&'static str),
    #[error("unsupported-odot: left operand {0} is not additively indecomposable")]
    UnsupportedOdot(String),
    #[error("finite value too large: {0}")]
    Overflow(String),
    #[error("terms are not in Cantor normal form: {0}")]
    NotCanonical(String),
    #[error("parse error at {position}: expected {expected}, found {found}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },
}

/// One `ω^exponent · coefficient` term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term<N> {
    pub exponent: CnfOrdinal<N>,
    pub coefficient: N,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CnfOrdinal<N> {
    terms: Vec<Term<N>>,
}

/// Structural classification flags of an ordinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrdinalClass {
    pub is_zero: bool,
    pub is_finite: bool,
    pub is_successor: bool,
    pub is_limit: bool,
    pub is_additively_indecomposable: bool,
    pub is_multiplicatively_indecomposable: bool,
}

impl<N: Natural> CnfOrdinal<N> {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_nat(N::one())
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    pub fn from_nat(n: N) -> Self {
        Self::monomial(Self::zero(), n)
    }

    /// Finite ordinal from a machine integer.
    pub fn finite(n: u64) -> Self {
        Self::from_nat(N::from_u64(n).expect("coefficient type holds u64"))
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Self, coefficient: N) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        CnfOrdinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// `ω^a`.
    pub fn omega_pow(exponent: Self) -> Self {
        Self::monomial(exponent, N::one())
    }

    /// Builds an ordinal from explicit terms, checking the normal-form invariants.
    pub fn from_terms(terms: Vec<Term<N>>) -> Result<Self, OrdinalError> {
        for t in &terms {
            if t.coefficient.is_zero() {
                return Err(OrdinalError::NotCanonical("zero coefficient".into()));
            }
        }
        for pair in terms.windows(2) {
            if pair[0].exponent <= pair[1].exponent {
                return Err(OrdinalError::NotCanonical(format!(
                    "exponent {} does not exceed {}",
                    pair[0].exponent, pair[1].exponent
                )));
            }
        }
        Ok(CnfOrdinal { terms })
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<Term<N>>) -> Self {
        debug_assert!(Self::from_terms(terms.clone()).is_ok());
        CnfOrdinal { terms }
    }

    pub fn terms(&self) -> &[Term<N>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_finite().is_some_and(|n| n.is_one())
    }

    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.exponent.is_zero(),
            _ => false,
        }
    }

    /// The value as a natural number, if finite.
    pub fn as_finite(&self) -> Option<N> {
        match self.terms.as_slice() {
            [] => Some(N::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.as_finite().and_then(|n| n.to_u64())
    }

    pub fn leading_exponent(&self) -> Option<&Self> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    /// `α` with `α + 1 = self`, for successors.
    pub fn predecessor(&self) -> Option<Self> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor is nonzero");
        last.coefficient = last.coefficient.clone() - N::one();
        if last.coefficient.is_zero() {
            terms.pop();
        }
        Some(CnfOrdinal { terms })
    }

    pub fn successor(&self) -> Self {
        self.add(&Self::one())
    }

    /// Finite tail `n` of `ω·α' + n`.
    pub fn finite_part(&self) -> N {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient.clone(),
            _ => N::zero(),
        }
    }

    /// `ω^e` for `e ≥ 0`, i.e. a single term with coefficient one.
    pub fn is_additively_indecomposable(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coefficient.is_one())
    }

    /// `ω^(ω^γ)`; 0, 1 and 2 are excluded.
    pub fn is_multiplicatively_indecomposable(&self) -> bool {
        match self.terms.as_slice() {
            [t] => {
                t.coefficient.is_one()
                    && !t.exponent.is_zero()
                    && t.exponent.is_additively_indecomposable()
            }
            _ => false,
        }
    }

    pub fn class(&self) -> OrdinalClass {
        OrdinalClass {
            is_zero: self.is_zero(),
            is_finite: self.is_finite(),
            is_successor: self.is_successor(),
            is_limit: self.is_limit(),
            is_additively_indecomposable: self.is_additively_indecomposable(),
            is_multiplicatively_indecomposable: self.is_multiplicatively_indecomposable(),
        }
    }

    /// Terms with exponent `≥ e`.
    pub fn truncate_below(&self, e: &Self) -> Self {
        CnfOrdinal {
            terms: self
                .terms
                .iter()
                .take_while(|t| &t.exponent >= e)
                .cloned()
                .collect(),
        }
    }

    /// Nesting depth of exponents; finite ordinals have depth 1, zero has depth 0.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    /// Re-expresses the ordinal over another coefficient type.
    pub fn convert<M: Natural>(&self) -> Option<CnfOrdinal<M>> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Some(Term {
                    exponent: t.exponent.convert()?,
                    coefficient: M::from_str_radix(&t.coefficient.to_string(), 10).ok()?,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CnfOrdinal { terms })
    }
}

impl<N: Natural> Default for CnfOrdinal<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<N: Natural> Ord for CnfOrdinal<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient))
            {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl<N: Natural> PartialOrd for CnfOrdinal<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<N: Natural> Debug for CnfOrdinal<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl<N: Natural> Debug for Term<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^({})*{}", self.exponent, self.coefficient)
    }
}

impl<N: Natural> From<u64> for CnfOrdinal<N> {
    fn from(n: u64) -> Self {
        Self::finite(n)
    }
}

impl<N: Natural> serde::Serialize for CnfOrdinal<N> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, N: Natural> serde::Deserialize<'de> for CnfOrdinal<N> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SmallOrdinal as O;

    fn o(s: &str) -> O {
        s.parse().unwrap()
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(o("w").cmp(&o("w")), Ordering::Equal);
        assert_eq!(o("w*2+1").cmp(&o("w^2")), Ordering::Less);
        assert_eq!(o("w^w").cmp(&o("w^3*9+w")), Ordering::Greater);
        assert!(o("5") < o("w"));
        assert!(o("w+1") > o("w"));
        assert!(o("w^(w+1)") > o("w^w*1000"));
    }

    #[test]
    fn classification() {
        let zero = O::zero().class();
        assert!(zero.is_zero && zero.is_finite && !zero.is_successor && !zero.is_limit);
        let five = o("5").class();
        assert!(five.is_successor && five.is_finite && !five.is_additively_indecomposable);
        assert!(o("1").is_additively_indecomposable());
        assert!(!o("1").is_multiplicatively_indecomposable());
        assert!(!o("2").is_multiplicatively_indecomposable());
        assert!(o("w").is_multiplicatively_indecomposable());
        assert!(o("w^w").is_multiplicatively_indecomposable());
        assert!(o("w^(w^2)").is_multiplicatively_indecomposable());
        assert!(!o("w^2").is_multiplicatively_indecomposable());
        assert!(o("w^2").is_additively_indecomposable());
        assert!(!o("w*2").is_additively_indecomposable());
        let lim = o("w^2+w").class();
        assert!(lim.is_limit && !lim.is_successor && !lim.is_finite);
    }

    #[test]
    fn predecessor_and_parts() {
        assert_eq!(o("w+3").predecessor(), Some(o("w+2")));
        assert_eq!(o("w+1").predecessor(), Some(o("w")));
        assert_eq!(o("w").predecessor(), None);
        assert_eq!(o("w*2+7").finite_part(), 7);
        assert_eq!(o("w^2*3+w+2").truncate_below(&o("1")), o("w^2*3+w"));
        assert_eq!(o("w^2*3+w+2").truncate_below(&o("2")), o("w^2*3"));
    }

    #[test]
    fn from_terms_rejects_non_canonical() {
        let t = |e: O, c: u64| Term {
            exponent: e,
            coefficient: c,
        };
        assert!(O::from_terms(vec![t(o("1"), 1), t(o("2"), 1)]).is_err());
        assert!(O::from_terms(vec![t(o("1"), 0)]).is_err());
        assert_eq!(
            O::from_terms(vec![t(o("2"), 3), t(o("0"), 1)]).unwrap(),
            o("w^2*3+1")
        );
    }

    #[test]
    fn conversion_between_coefficient_types() {
        let big: crate::Ordinal = o("w^(w+2)*3+w*4+5").convert().unwrap();
        assert_eq!(big.to_string(), "w^(w+2)*3+w*4+5");
    }
}
