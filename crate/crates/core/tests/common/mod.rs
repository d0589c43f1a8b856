#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use wqo_meter::{Ordinal, WqoExpr};

pub fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

pub fn e(s: &str) -> WqoExpr {
    s.parse().unwrap()
}

/// Sum of `ω^x·c` over `(x, c)`, in any order, merged into normal form.
pub fn from_pairs(mut pairs: Vec<(Ordinal, u64)>) -> Ordinal {
    pairs.sort_by(|a, b| b.0.cmp(&a.0));
    pairs
        .into_iter()
        .filter(|p| p.1 > 0)
        .fold(Ordinal::zero(), |acc, (x, c)| {
            acc.nat_sum(&Ordinal::monomial(x, c.into()))
        })
}

/// Random ordinal of CNF nesting at most `depth`, small coefficients.
pub fn random_ordinal<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Ordinal {
    if depth == 0 {
        return Ordinal::finite(rng.gen_range(0..6));
    }
    let n = rng.gen_range(0..=3);
    let pairs = (0..n)
        .map(|_| (random_ordinal(rng, depth - 1), rng.gen_range(1..4)))
        .collect();
    from_pairs(pairs)
}

pub fn random_nonzero_ordinal<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Ordinal {
    loop {
        let a = random_ordinal(rng, depth);
        if !a.is_zero() {
            return a;
        }
    }
}

/// `ω^{ω^γ}` with `γ ≥ 1`.
pub fn random_elementary_leaf<R: Rng + ?Sized>(rng: &mut R) -> Ordinal {
    let gamma = random_nonzero_ordinal(rng, 1);
    Ordinal::omega_pow(Ordinal::omega_pow(gamma))
}

/// Random elementary expression with at most `max_size` nodes.
pub fn random_elementary<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> WqoExpr {
    if max_size < 3 || rng.gen_bool(0.15) {
        let leaf = WqoExpr::ord(random_elementary_leaf(rng));
        return if max_size >= 2 && rng.gen_bool(0.3) {
            unary(rng, leaf)
        } else {
            leaf
        };
    }
    match rng.gen_range(0..5) {
        0 | 1 => {
            let left = rng.gen_range(1..max_size - 1);
            let l = random_elementary(rng, left);
            let r = random_elementary(rng, max_size - 1 - l.size());
            if rng.gen_bool(0.5) {
                WqoExpr::disj(l, r)
            } else {
                WqoExpr::prod(l, r)
            }
        }
        _ => {
            let inner = random_elementary(rng, max_size - 1);
            unary(rng, inner)
        }
    }
}

fn unary<R: Rng + ?Sized>(rng: &mut R, e: WqoExpr) -> WqoExpr {
    match rng.gen_range(0..3) {
        0 => WqoExpr::words(e),
        1 => WqoExpr::multisets(e),
        _ => WqoExpr::pf(e),
    }
}

/// No `⊔` directly under `×`, `M◇` or `Pf`, and no `Pf` of an ordinal.
pub fn normal_shape(e: &WqoExpr) -> bool {
    use WqoExpr::*;
    let bad = match e {
        CartProd(l, r) => matches!(**l, DisjUnion(..)) || matches!(**r, DisjUnion(..)),
        Multisets(a) => matches!(**a, DisjUnion(..)),
        Pf(a) => matches!(**a, DisjUnion(..) | Ord(_)),
        _ => false,
    };
    !bad && e.children().into_iter().all(normal_shape)
}

/// Ordinals below `ε₀` with CNF nesting at most `depth`.
pub fn ordinal_strategy(depth: u32) -> BoxedStrategy<Ordinal> {
    let leaf = (0u64..6).prop_map(Ordinal::finite).boxed();
    leaf.prop_recursive(depth, 24, 3, |inner| {
        prop::collection::vec((inner, 1u64..4), 0..4)
            .prop_map(from_pairs)
            .boxed()
    })
    .boxed()
}

pub fn nonzero_ordinal_strategy(depth: u32) -> BoxedStrategy<Ordinal> {
    ordinal_strategy(depth)
        .prop_filter("nonzero", |a| !a.is_zero())
        .boxed()
}
