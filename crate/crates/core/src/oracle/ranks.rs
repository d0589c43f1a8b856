//! `o`, `h`, `w` of a finite quasi-order, two independent ways.

use std::collections::HashMap;

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;
use serde::Serialize;

use super::{FinitePoset, OracleError};

/// Largest input for the subset-memoized residual recursion.
pub const RESIDUAL_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleInvariants {
    pub size: usize,
    pub classes: usize,
    pub mot: u64,
    pub height: u64,
    pub width: u64,
}

/// Direct values, cross-checked against the residual recursion when small enough.
pub fn oracle_invariants(p: &FinitePoset) -> Result<OracleInvariants, OracleError> {
    let q = p.quotient();
    let direct = (direct_mot(p), direct_height(&q), direct_width(&q));
    let residual_input = if p.len() <= RESIDUAL_LIMIT {
        Some(p)
    } else if q.len() <= RESIDUAL_LIMIT {
        Some(&q)
    } else {
        None
    };
    if let Some(r) = residual_input {
        let residual = (residual_mot(r), residual_height(r), residual_width(r));
        if residual != direct {
            return Err(OracleError::Inconsistent(format!(
                "residual ranks {residual:?} differ from direct values {direct:?}"
            )));
        }
    }
    Ok(OracleInvariants {
        size: p.len(),
        classes: q.len(),
        mot: direct.0,
        height: direct.1,
        width: direct.2,
    })
}

/// Number of `≡`-classes.
pub fn direct_mot(p: &FinitePoset) -> u64 {
    p.classes().1 as u64
}

/// Longest strict chain.
pub fn direct_height(p: &FinitePoset) -> u64 {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| p.lt(y, x)).count());
    let mut best = vec![0u64; n];
    for (k, &x) in order.iter().enumerate() {
        best[x] = 1 + order[..k]
            .iter()
            .filter(|&&y| p.lt(y, x))
            .map(|&y| best[y])
            .max()
            .unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

/// Largest antichain: by Dilworth, classes minus a maximum matching on strict comparabilities.
pub fn direct_width(p: &FinitePoset) -> u64 {
    let q = p.quotient();
    let n = q.len();
    let mut g = UnGraph::<(), ()>::with_capacity(2 * n, 0);
    let nodes: Vec<_> = (0..2 * n).map(|_| g.add_node(())).collect();
    for i in 0..n {
        for j in 0..n {
            if q.lt(i, j) {
                g.add_edge(nodes[i], nodes[n + j], ());
            }
        }
    }
    (n - maximum_matching(&g).len()) as u64
}

/// `rank(S) = max_{x∈S} rank(S ∩ R_x) + 1` with memo over bitmasks.
fn residual_rank(p: &FinitePoset, survives: impl Fn(usize, usize) -> bool) -> u64 {
    let n = p.len();
    assert!(
        n <= RESIDUAL_LIMIT,
        "residual recursion is capped at {RESIDUAL_LIMIT} elements"
    );
    let residual: Vec<u32> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| survives(x, y))
                .fold(0, |m, y| m | 1 << y)
        })
        .collect();
    fn go(s: u32, residual: &[u32], memo: &mut HashMap<u32, u64>) -> u64 {
        if s == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&s) {
            return r;
        }
        let mut best = 0;
        let mut rest = s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.max(go(s & residual[x], residual, memo) + 1);
        }
        memo.insert(s, best);
        best
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    go(full, &residual, &mut HashMap::new())
}

/// Bad sequences: after `x`, only elements `y` with `x ≰ y` remain.
pub fn residual_mot(p: &FinitePoset) -> u64 {
    residual_rank(p, |x, y| !p.leq(x, y))
}

/// Strictly decreasing sequences.
pub fn residual_height(p: &FinitePoset) -> u64 {
    residual_rank(p, |x, y| p.lt(y, x))
}

/// Antichain sequences.
pub fn residual_width(p: &FinitePoset) -> u64 {
    residual_rank(p, |x, y| p.incomparable(x, y))
}
