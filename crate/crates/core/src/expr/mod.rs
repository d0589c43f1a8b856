//! Expressions denoting well-quasi-orders.

mod parse;
mod print;

use std::num::NonZeroUsize;

use crate::Ordinal;

pub use parse::{parse, ParseError};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WqoExpr {
    /// The well-order `(α, ∈)`.
    Ord(Ordinal),
    /// Antichain of `k` elements.
    Gamma(NonZeroUsize),
    /// `A ⊔ B`.
    DisjUnion(Box<WqoExpr>, Box<WqoExpr>),
    /// `A + B`: every element of `A` below every element of `B`.
    LexSum(Box<WqoExpr>, Box<WqoExpr>),
    /// `A × B`, ordered componentwise.
    CartProd(Box<WqoExpr>, Box<WqoExpr>),
    /// `A · B`: copies of `A` indexed by `B`, compared on `B` first.
    LexProd(Box<WqoExpr>, Box<WqoExpr>),
    /// `A^{<ω}` under subword embedding.
    Words(Box<WqoExpr>),
    /// `M◇(A)`, finite multisets under multiset embedding.
    Multisets(Box<WqoExpr>),
    /// `M◇_n(A)`, multisets of exactly `n` elements.
    MultisetsN(Box<WqoExpr>, usize),
    /// `Pf(A)`, finite subsets under the Hoare embedding.
    Pf(Box<WqoExpr>),
    /// `Pf(A)` without the empty set.
    PfPlus(Box<WqoExpr>),
    Phi(Ordinal),
    Sim(Ordinal),
    SimExt(Ordinal, u64),
}

use WqoExpr::*;

impl WqoExpr {
    pub fn ord(a: Ordinal) -> Self {
        Ord(a)
    }

    pub fn nat(n: u64) -> Self {
        Ord(Ordinal::finite(n))
    }

    pub fn omega() -> Self {
        Ord(Ordinal::omega())
    }

    /// `Γ_k`; panics when `k = 0`.
    pub fn gamma(k: usize) -> Self {
        Gamma(NonZeroUsize::new(k).expect("Γ_k needs k ≥ 1"))
    }

    pub fn disj(l: Self, r: Self) -> Self {
        DisjUnion(Box::new(l), Box::new(r))
    }

    pub fn lex_sum(l: Self, r: Self) -> Self {
        LexSum(Box::new(l), Box::new(r))
    }

    pub fn prod(l: Self, r: Self) -> Self {
        CartProd(Box::new(l), Box::new(r))
    }

    pub fn lex_prod(l: Self, r: Self) -> Self {
        LexProd(Box::new(l), Box::new(r))
    }

    pub fn words(e: Self) -> Self {
        Words(Box::new(e))
    }

    pub fn multisets(e: Self) -> Self {
        Multisets(Box::new(e))
    }

    pub fn multisets_n(e: Self, n: usize) -> Self {
        MultisetsN(Box::new(e), n)
    }

    pub fn pf(e: Self) -> Self {
        Pf(Box::new(e))
    }

    pub fn pf_plus(e: Self) -> Self {
        PfPlus(Box::new(e))
    }

    pub fn children(&self) -> Vec<&WqoExpr> {
        match self {
            Ord(_) | Gamma(_) | Phi(_) | Sim(_) | SimExt(..) => vec![],
            DisjUnion(l, r) | LexSum(l, r) | CartProd(l, r) | LexProd(l, r) => vec![l, r],
            Words(e) | Multisets(e) | MultisetsN(e, _) | Pf(e) | PfPlus(e) => vec![e],
        }
    }

    pub fn children_mut(&mut self) -> Vec<&mut WqoExpr> {
        match self {
            Ord(_) | Gamma(_) | Phi(_) | Sim(_) | SimExt(..) => vec![],
            DisjUnion(l, r) | LexSum(l, r) | CartProd(l, r) | LexProd(l, r) => vec![l, r],
            Words(e) | Multisets(e) | MultisetsN(e, _) | Pf(e) | PfPlus(e) => vec![e],
        }
    }

    /// Subexpression at a child-index path.
    pub fn at(&self, path: &[usize]) -> Option<&WqoExpr> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i)?.at(rest),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Built from ordinals `≥ ω^ω` that are multiplicatively indecomposable
    /// with `⊔`, `×`, words, multisets and `Pf`.
    pub fn is_elementary(&self) -> bool {
        match self {
            Ord(a) => a.is_multiplicatively_indecomposable() && *a >= omega_omega(),
            DisjUnion(l, r) | CartProd(l, r) => l.is_elementary() && r.is_elementary(),
            Words(e) | Multisets(e) | Pf(e) => e.is_elementary(),
            _ => false,
        }
    }

    /// Built from `ω` with `⊔`, `×`, words, multisets and `Pf`.
    pub fn is_omega_elementary(&self) -> bool {
        match self {
            Ord(a) => *a == Ordinal::omega(),
            DisjUnion(l, r) | CartProd(l, r) => l.is_omega_elementary() && r.is_omega_elementary(),
            Words(e) | Multisets(e) | Pf(e) => e.is_omega_elementary(),
            _ => false,
        }
    }

    /// Denotes a finite quasi-order without needing a word-length cap.
    pub fn is_finite_expr(&self) -> bool {
        self.is_finite_with_words(false)
    }

    /// Like [`Self::is_finite_expr`], treating `A^{<ω}` over finite `A` as
    /// finite (the oracle truncates words to a length cap).
    pub fn is_finite_with_words(&self, words_capped: bool) -> bool {
        match self {
            Ord(a) => a.is_finite(),
            Gamma(_) => true,
            Phi(a) => a.is_finite() && !a.is_zero(),
            Sim(_) | SimExt(..) => false,
            DisjUnion(l, r) | LexSum(l, r) | CartProd(l, r) | LexProd(l, r) => {
                l.is_finite_with_words(words_capped) && r.is_finite_with_words(words_capped)
            }
            Words(e) | Multisets(e) => words_capped && e.is_finite_with_words(words_capped),
            MultisetsN(e, _) | Pf(e) | PfPlus(e) => e.is_finite_with_words(words_capped),
        }
    }

    /// The ordinal leaves, left to right.
    pub fn ordinal_leaves(&self) -> Vec<&Ordinal> {
        match self {
            Ord(a) | Phi(a) | Sim(a) | SimExt(a, _) => vec![a],
            _ => self
                .children()
                .into_iter()
                .flat_map(|c| c.ordinal_leaves())
                .collect(),
        }
    }
}

pub(crate) fn omega_omega() -> Ordinal {
    Ordinal::omega_pow(Ordinal::omega())
}

impl std::str::FromStr for WqoExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl serde::Serialize for WqoExpr {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for WqoExpr {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}
