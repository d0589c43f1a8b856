//! Derived notations: `2^α`, `α^±`, `α′`, `α̂`, `h*`, `⊙` and `Σ_{β<α} ω^β`.

use super::{CnfOrdinal, Natural, OrdinalError, Term};

/// Largest finite tail `n` for which `2^n` is computed.
const MAX_TWO_POW_EXPONENT: u64 = 1 << 16;

impl<N: Natural> CnfOrdinal<N> {
    /// Writes `self = ω·α' + n`.
    pub fn decompose_omega(&self) -> (Self, N) {
        let n = self.finite_part();
        let terms = self
            .terms
            .iter()
            .filter(|t| !t.exponent.is_zero())
            .map(|t| Term {
                exponent: match t.exponent.predecessor() {
                    Some(p) if t.exponent.is_finite() => p,
                    _ => t.exponent.clone(),
                },
                coefficient: t.coefficient.clone(),
            })
            .collect();
        (Self::from_terms_unchecked(terms), n)
    }

    /// `2^self = ω^α'·2^n` where `self = ω·α' + n`.
    pub fn two_pow(&self) -> Result<Self, OrdinalError> {
        let (head, n) = self.decompose_omega();
        let exp = n
            .to_u64()
            .filter(|&e| e <= MAX_TWO_POW_EXPONENT)
            .ok_or_else(|| OrdinalError::Overflow(format!("2^{n}")))?;
        let two = N::one() + N::one();
        let coefficient = (0..exp)
            .try_fold(N::one(), |acc, _| acc.checked_mul(&two))
            .ok_or_else(|| OrdinalError::Overflow(format!("2^{n}")))?;
        Ok(Self::monomial(head, coefficient))
    }

    /// `α^±`: the predecessor for finite `α`, `α` itself otherwise.
    /// (The `ε + n` case never arises below ε₀.)
    pub fn pm(&self) -> Result<Self, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::ZeroArgument("pm"));
        }
        if self.is_finite() {
            return Ok(self.predecessor().expect("nonzero finite"));
        }
        Ok(self.clone())
    }

    /// `α′`, the identity below ε₀.
    pub fn oprim(&self) -> Self {
        self.clone()
    }

    /// `α̂ = ω^{α₁′} + ⋯ + ω^{α_n′}`, the identity below ε₀.
    pub fn hat(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                exponent: t.exponent.oprim(),
                coefficient: t.coefficient.clone(),
            })
            .collect();
        Self::from_terms_unchecked(terms)
    }

    /// `h*`: `h` when `h ≥ ω` is additively indecomposable, `h·ω` otherwise.
    pub fn hstar(&self) -> Self {
        if self.is_additively_indecomposable() && !self.is_finite() {
            self.clone()
        } else {
            self.mul(&Self::omega())
        }
    }

    /// `α ⊙ β`, defined by `α⊙0 = 0`, `α⊙(β+1) = (α⊙β)⊕α` and continuity.
    ///
    /// Supported when `β` is finite (then `α⊙n = α⊗n`) or when `α = ω^e`.
    pub fn odot(&self, rhs: &Self) -> Result<Self, OrdinalError> {
        if rhs.is_finite() {
            return Ok(self.nat_prod(rhs));
        }
        if !self.is_additively_indecomposable() {
            return Err(OrdinalError::UnsupportedOdot(self.to_string()));
        }
        let e = &self.terms[0].exponent;
        let terms = rhs
            .terms
            .iter()
            .map(|t| Term {
                exponent: e.add(&t.exponent),
                coefficient: t.coefficient.clone(),
            })
            .fold(Vec::<Term<N>>::new(), |mut acc, t| {
                match acc.last_mut() {
                    Some(last) if last.exponent == t.exponent => {
                        last.coefficient = last.coefficient.clone() + t.coefficient;
                    }
                    _ => acc.push(t),
                }
                acc
            });
        Ok(Self::from_terms_unchecked(terms))
    }

    /// `Σ_{β<α} ω^β`.
    pub fn sum_omega_powers(&self) -> Result<Self, OrdinalError> {
        match self.predecessor() {
            None if self.is_zero() => Err(OrdinalError::ZeroArgument("sum_omega_powers")),
            None => Ok(Self::omega_pow(self.clone())),
            Some(p) if p.is_limit() => Ok(Self::monomial(p, N::one() + N::one())),
            Some(p) => Ok(Self::omega_pow(p)),
        }
    }
}
