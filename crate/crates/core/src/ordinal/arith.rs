//! Ordinal (non-commutative) sum and product.

use std::ops::{Add, Mul};

use super::{CnfOrdinal, Natural, OrdinalError, Term};

impl<N: Natural> CnfOrdinal<N> {
    /// Ordinal sum `self + rhs`. Terms of `self` below the leading exponent
    /// of `rhs` are absorbed.
    pub fn add(&self, rhs: &Self) -> Self {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut out: Vec<Term<N>> = self
            .terms
            .iter()
            .take_while(|t| t.exponent > lead.exponent)
            .cloned()
            .collect();
        let mut rest = rhs.terms.clone();
        if let Some(t) = self.terms.get(out.len()) {
            if t.exponent == lead.exponent {
                rest[0].coefficient = t.coefficient.clone() + rest[0].coefficient.clone();
            }
        }
        out.extend(rest);
        Self::from_terms_unchecked(out)
    }

    /// The unique `c` with `self + c = rhs`; requires `self ≤ rhs`.
    pub fn left_subtract(&self, rhs: &Self) -> Result<Self, OrdinalError> {
        if self > rhs {
            return Err(OrdinalError::NotLessOrEqual {
                left: self.to_string(),
                right: rhs.to_string(),
            });
        }
        let common = self
            .terms
            .iter()
            .zip(&rhs.terms)
            .take_while(|(a, b)| a == b)
            .count();
        let (Some(a), Some(b)) = (self.terms.get(common), rhs.terms.get(common)) else {
            return Ok(Self::from_terms_unchecked(rhs.terms[common..].to_vec()));
        };
        let mut out = rhs.terms[common..].to_vec();
        if a.exponent == b.exponent {
            // same exponent, so a.coefficient < b.coefficient
            out[0].coefficient = b.coefficient.clone() - a.coefficient.clone();
        }
        Ok(Self::from_terms_unchecked(out))
    }

    /// Ordinal product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let lead = &self.terms[0];
        let mut acc = Self::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].coefficient = lead.coefficient.clone() * t.coefficient.clone();
                Self::from_terms_unchecked(terms)
            } else {
                Self::monomial(lead.exponent.add(&t.exponent), t.coefficient.clone())
            };
            acc = acc.add(&piece);
        }
        acc
    }
}

impl<N: Natural> Add for &CnfOrdinal<N> {
    type Output = CnfOrdinal<N>;
    fn add(self, rhs: Self) -> CnfOrdinal<N> {
        CnfOrdinal::add(self, rhs)
    }
}

impl<N: Natural> Mul for &CnfOrdinal<N> {
    type Output = CnfOrdinal<N>;
    fn mul(self, rhs: Self) -> CnfOrdinal<N> {
        CnfOrdinal::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use crate::SmallOrdinal as O;

    fn o(s: &str) -> O {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(o("1").add(&o("w")), o("w"));
        assert_eq!(o("w").add(&o("1")), o("w+1"));
        assert_eq!(o("w^2+w").add(&o("w^2")), o("w^2*2"));
        assert_eq!(o("w*3+5").add(&O::zero()), o("w*3+5"));
        assert_eq!(O::zero().add(&o("w+2")), o("w+2"));
        assert_eq!(o("w^w+w^3+1").add(&o("w^3*2+w")), o("w^w+w^3*3+w"));
    }

    #[test]
    fn left_subtraction_examples() {
        assert_eq!(o("1").left_subtract(&o("w")).unwrap(), o("w"));
        assert_eq!(o("w").left_subtract(&o("w*2")).unwrap(), o("w"));
        assert_eq!(o("3").left_subtract(&o("7")).unwrap(), o("4"));
        assert_eq!(o("w+1").left_subtract(&o("w*2")).unwrap(), o("w"));
        assert_eq!(o("w^2").left_subtract(&o("w^2")).unwrap(), O::zero());
        assert_eq!(o("w^2").left_subtract(&o("w^2+3")).unwrap(), o("3"));
        assert!(o("w+1").left_subtract(&o("w")).is_err());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(o("w+1").mul(&o("w")), o("w^2"));
        assert_eq!(o("w^w").mul(&o("w^w")), o("w^(w*2)"));
        assert_eq!(o("w^2+3").mul(&o("1")), o("w^2+3"));
        assert_eq!(o("w+1").mul(&o("2")), o("w*2+1"));
        assert_eq!(o("2").mul(&o("w")), o("w"));
        assert_eq!(o("w+1").mul(&o("w+1")), o("w^2+w+1"));
        assert_eq!(o("w").mul(&O::zero()), O::zero());
    }

    /// `(ω+1)·ω` is the supremum of `(ω+1)·n`: every partial product sits
    /// below `ω²`, and every `ω·k < ω²` is overtaken.
    #[test]
    fn product_with_omega_is_sup_of_finite_multiples() {
        let a = o("w+1");
        let result = a.mul(&o("w"));
        let mut partial = O::zero();
        for n in 1..=20u64 {
            partial = partial.add(&a);
            assert_eq!(partial, a.mul(&O::finite(n)));
            assert!(partial < result);
            assert!(partial > o("w").mul(&O::finite(n - 1)));
        }
    }
}
