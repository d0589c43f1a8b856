//! Natural (Hessenberg) sum and product, and the `⊕̂` variant used for
//! heights of Cartesian products.

use super::{CnfOrdinal, Natural, Term};

impl<N: Natural> CnfOrdinal<N> {
    /// Natural sum `self ⊕ rhs`: merge the term lists, adding coefficients
    /// of equal exponents.
    pub fn nat_sum(&self, rhs: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.exponent.cmp(&b.exponent) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(Term {
                        exponent: a.exponent.clone(),
                        coefficient: a.coefficient.clone() + b.coefficient.clone(),
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Self::from_terms_unchecked(out)
    }

    /// Natural product `self ⊗ rhs`: `ω^e·c ⊗ ω^f·d = ω^(e⊕f)·(c·d)`,
    /// extended by distributing over `⊕`.
    pub fn nat_prod(&self, rhs: &Self) -> Self {
        let mut acc = Self::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                let piece = Self::monomial(
                    a.exponent.nat_sum(&b.exponent),
                    a.coefficient.clone() * b.coefficient.clone(),
                );
                acc = acc.nat_sum(&piece);
            }
        }
        acc
    }

    /// `sup { (α' ⊕ β') + 1 : α' < self, β' < rhs }`, zero when either side is zero.
    ///
    /// This is the height of a Cartesian product of chains of heights
    /// `self` and `rhs`; for finite `n, m ≥ 1` it is `n + m − 1`.
    pub fn hat_nat_sum(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        match (self.predecessor(), rhs.predecessor()) {
            (Some(p), Some(q)) => p.nat_sum(&q).successor(),
            (None, Some(q)) => self.sup_nat_sum_below(&q),
            (Some(p), None) => rhs.sup_nat_sum_below(&p),
            (None, None) => {
                let left = self.sup_nat_sum_below(&rhs.last_block_predecessor());
                let right = rhs.sup_nat_sum_below(&self.last_block_predecessor());
                left.max(right)
            }
        }
    }

    /// `sup { α' ⊕ β' : α' < self, β' < rhs }`, the variant without the
    /// successor step. It agrees with [`Self::hat_nat_sum`] unless both
    /// arguments are successors.
    pub fn hat_nat_sum_literal(&self, rhs: &Self) -> Self {
        match (self.predecessor(), rhs.predecessor()) {
            (Some(p), Some(q)) => p.nat_sum(&q),
            _ => self.hat_nat_sum(rhs),
        }
    }

    /// `sup { α' ⊕ δ : α' < self }` for a limit `self = γ + ω^e·c` where `e`
    /// is the smallest exponent. Cofinal `α'` have the form
    /// `γ + ω^e·(c−1) + ξ` with `ξ < ω^e`, and adding such `ξ` only moves
    /// the part of the sum below `ω^e`.
    fn sup_nat_sum_below(&self, delta: &Self) -> Self {
        debug_assert!(self.is_limit());
        let e = self
            .terms
            .last()
            .expect("limit is nonzero")
            .exponent
            .clone();
        let head = self
            .last_block_predecessor()
            .nat_sum(delta)
            .truncate_below(&e);
        head.add(&Self::omega_pow(e))
    }

    /// `γ + ω^e·(c−1)` for `self = γ + ω^e·c`.
    fn last_block_predecessor(&self) -> Self {
        let mut terms = self.terms.clone();
        if let Some(last) = terms.last_mut() {
            last.coefficient = last.coefficient.clone() - N::one();
            if last.coefficient.is_zero() {
                terms.pop();
            }
        }
        Self::from_terms_unchecked(terms)
    }
}

#[cfg(test)]
mod tests {
    use crate::SmallOrdinal as O;

    fn o(s: &str) -> O {
        s.parse().unwrap()
    }

    #[test]
    fn natural_sum_examples() {
        assert_eq!(o("w*2").nat_sum(&o("w*2")), o("w*4"));
        assert_eq!(o("w^3+7").nat_sum(&O::zero()), o("w^3+7"));
        assert_eq!(o("w^2+1").nat_sum(&o("w")), o("w^2+w+1"));
        assert_eq!(o("w").nat_sum(&o("w^2+1")), o("w^2+w+1"));
    }

    #[test]
    fn natural_product_examples() {
        assert_eq!(o("w*2").nat_prod(&o("w*2")), o("w^2*4"));
        assert_eq!(o("w^w+3").nat_prod(&o("1")), o("w^w+3"));
        assert_eq!(o("w+1").nat_prod(&o("w+1")), o("w^2+w*2+1"));
        assert_eq!(o("w").nat_prod(&o("w^w")), o("w^(w+1)"));
        assert_eq!(o("w+1").nat_prod(&O::zero()), O::zero());
    }

    #[test]
    fn hat_sum_examples() {
        assert_eq!(o("w*2").hat_nat_sum(&o("w*2")), o("w*3"));
        assert_eq!(o("w+4").hat_nat_sum(&O::zero()), O::zero());
        assert_eq!(o("w^w+1").hat_nat_sum(&o("w^w+1")), o("w^w*2+1"));
        assert_eq!(o("3").hat_nat_sum(&o("4")), o("6"));
        assert_eq!(o("w").hat_nat_sum(&o("1")), o("w"));
        assert_eq!(o("w+1").hat_nat_sum(&o("w")), o("w*2"));
        assert_eq!(o("w").hat_nat_sum(&o("w")), o("w"));
        assert_eq!(o("w^2").hat_nat_sum(&o("2")), o("w^2"));
        assert_eq!(o("w^2").hat_nat_sum(&o("w*3")), o("w^2"));
        assert_eq!(o("w^2+w").hat_nat_sum(&o("w*3")), o("w^2+w*3"));
    }

    #[test]
    fn literal_variant_differs_only_on_successors() {
        assert_eq!(o("3").hat_nat_sum_literal(&o("4")), o("5"));
        assert_eq!(o("w*2").hat_nat_sum_literal(&o("w*2")), o("w*3"));
        assert_eq!(o("w").hat_nat_sum_literal(&o("w+2")), o("w*2"));
    }
}
