//! Seeded random quasi-orders and finite expressions.

use rand::seq::SliceRandom;
use rand::Rng;

use super::build::predicted_size;
use super::FinitePoset;
use crate::expr::WqoExpr;
use crate::Ordinal;

/// A random quasi-order on `n` points: DAG edges `i → j` (`i < j`) with
/// probability `density`, closed transitively, then each back edge glued with
/// probability `glue`.
pub fn random_poset<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    density: f64,
    glue: f64,
) -> FinitePoset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push([i, j]);
                if rng.gen_bool(glue) {
                    pairs.push([j, i]);
                }
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let pairs: Vec<[usize; 2]> = pairs.iter().map(|&[i, j]| [perm[i], perm[j]]).collect();
    FinitePoset::from_pairs(n, &pairs).expect("pairs in range")
}

fn leaf<R: Rng + ?Sized>(rng: &mut R) -> WqoExpr {
    match rng.gen_range(0..3) {
        0 => WqoExpr::nat(rng.gen_range(1..=4)),
        1 => WqoExpr::gamma(rng.gen_range(1..=3)),
        _ => WqoExpr::Phi(Ordinal::finite(rng.gen_range(1..=3))),
    }
}

fn expr<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> WqoExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng);
    }
    let op = rng.gen_range(0..8);
    let mut sub = || expr(rng, depth - 1);
    match op {
        0 => WqoExpr::disj(sub(), sub()),
        1 => WqoExpr::lex_sum(sub(), sub()),
        2 => WqoExpr::prod(sub(), sub()),
        3 => WqoExpr::lex_prod(sub(), sub()),
        4 | 5 => WqoExpr::pf(sub()),
        6 => WqoExpr::pf_plus(sub()),
        _ => WqoExpr::multisets_n(sub(), 2),
    }
}

/// A random finite expression whose poset has at most `max_size` elements.
pub fn random_finite_expr<R: Rng + ?Sized>(rng: &mut R, depth: usize, max_size: usize) -> WqoExpr {
    loop {
        let e = expr(rng, depth);
        if predicted_size(&e, 0).is_some_and(|n| n <= max_size) {
            return e;
        }
    }
}
