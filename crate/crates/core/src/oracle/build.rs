//! Explicit finite quasi-orders for finite expressions.

use super::{FinitePoset, OracleError};
use crate::expr::WqoExpr::{self, *};

/// Largest poset the oracle will materialize.
pub const SIZE_LIMIT: usize = 5000;

/// Materializes `e`. Words and unbounded multisets need `word_len_cap`.
pub fn build(e: &WqoExpr, word_len_cap: Option<usize>) -> Result<FinitePoset, OracleError> {
    if !e.is_finite_with_words(word_len_cap.is_some()) {
        return Err(OracleError::NotFinite(e.to_string()));
    }
    let cap = word_len_cap.unwrap_or(0);
    match predicted_size(e, cap) {
        Some(n) if n <= SIZE_LIMIT => build_rec(e, cap),
        n => Err(OracleError::TooLarge {
            size: n,
            limit: SIZE_LIMIT,
        }),
    }
}

/// Number of elements `build` would produce, `None` on overflow.
pub fn predicted_size(e: &WqoExpr, cap: usize) -> Option<usize> {
    Some(match e {
        Ord(a) | Phi(a) => usize::try_from(a.to_u64()?).ok()?,
        Gamma(k) => k.get(),
        Sim(_) | SimExt(..) => return None,
        DisjUnion(l, r) | LexSum(l, r) => {
            predicted_size(l, cap)?.checked_add(predicted_size(r, cap)?)?
        }
        CartProd(l, r) | LexProd(l, r) => {
            predicted_size(l, cap)?.checked_mul(predicted_size(r, cap)?)?
        }
        Pf(a) | PfPlus(a) => {
            let n = predicted_size(a, cap)?;
            let full = 1usize.checked_shl(u32::try_from(n).ok()?)?;
            if matches!(e, PfPlus(_)) {
                full - 1
            } else {
                full
            }
        }
        Words(a) => {
            let n = predicted_size(a, cap)?;
            (0..=cap)
                .try_fold((0usize, 1usize), |(sum, pow), _| {
                    Some((sum.checked_add(pow)?, pow.checked_mul(n)?))
                })?
                .0
        }
        Multisets(a) => {
            let n = predicted_size(a, cap)?;
            (0..=cap).try_fold(0usize, |sum, k| sum.checked_add(multichoose(n, k)?))?
        }
        MultisetsN(a, k) => multichoose(predicted_size(a, cap)?, *k)?,
    })
}

fn multichoose(n: usize, k: usize) -> Option<usize> {
    if n == 0 {
        return Some(usize::from(k == 0));
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n + i)? / (i + 1);
    }
    Some(acc)
}

fn build_rec(e: &WqoExpr, cap: usize) -> Result<FinitePoset, OracleError> {
    let b = |x: &WqoExpr| build_rec(x, cap);
    Ok(match e {
        Ord(a) => FinitePoset::chain(finite(a)?),
        Phi(a) => FinitePoset::antichain(finite(a)?),
        Gamma(k) => FinitePoset::antichain(k.get()),
        DisjUnion(l, r) => disjoint_union(&b(l)?, &b(r)?),
        LexSum(l, r) => lex_sum(&b(l)?, &b(r)?),
        CartProd(l, r) => product(&b(l)?, &b(r)?),
        LexProd(l, r) => lex_product(&b(l)?, &b(r)?),
        Pf(a) => powerset(&b(a)?, false)?,
        PfPlus(a) => powerset(&b(a)?, true)?,
        Words(a) => words(&b(a)?, cap)?,
        Multisets(a) => multisets(&b(a)?, 0..=cap)?,
        MultisetsN(a, k) => multisets(&b(a)?, *k..=*k)?,
        Sim(_) | SimExt(..) => return Err(OracleError::NotFinite(e.to_string())),
    })
}

fn finite(a: &crate::Ordinal) -> Result<usize, OracleError> {
    a.to_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| OracleError::NotFinite(a.to_string()))
}

fn guard(size: usize) -> Result<(), OracleError> {
    if size > SIZE_LIMIT {
        return Err(OracleError::TooLarge {
            size: Some(size),
            limit: SIZE_LIMIT,
        });
    }
    Ok(())
}

pub fn disjoint_union(a: &FinitePoset, b: &FinitePoset) -> FinitePoset {
    let n = a.len();
    FinitePoset::from_fn_unchecked(n + b.len(), |i, j| match (i < n, j < n) {
        (true, true) => a.leq(i, j),
        (false, false) => b.leq(i - n, j - n),
        _ => false,
    })
}

pub fn lex_sum(a: &FinitePoset, b: &FinitePoset) -> FinitePoset {
    let n = a.len();
    FinitePoset::from_fn_unchecked(n + b.len(), |i, j| match (i < n, j < n) {
        (true, true) => a.leq(i, j),
        (false, false) => b.leq(i - n, j - n),
        (true, false) => true,
        (false, true) => false,
    })
}

/// Element `(x, y)` sits at index `x + |A|·y`.
pub fn product(a: &FinitePoset, b: &FinitePoset) -> FinitePoset {
    let n = a.len().max(1);
    FinitePoset::from_fn_unchecked(a.len() * b.len(), |i, j| {
        a.leq(i % n, j % n) && b.leq(i / n, j / n)
    })
}

/// `A · B`: compare the `B` components first, then `A` within a class of `B`.
pub fn lex_product(a: &FinitePoset, b: &FinitePoset) -> FinitePoset {
    let n = a.len().max(1);
    FinitePoset::from_fn_unchecked(a.len() * b.len(), |i, j| {
        let (bi, bj) = (i / n, j / n);
        b.lt(bi, bj) || (b.equiv(bi, bj) && a.leq(i % n, j % n))
    })
}

/// Finite subsets under the Hoare embedding, encoded as bitmasks.
pub fn powerset(a: &FinitePoset, nonempty: bool) -> Result<FinitePoset, OracleError> {
    let n = a.len();
    if n >= 16 {
        return Err(OracleError::TooLarge {
            size: 1usize.checked_shl(n as u32),
            limit: SIZE_LIMIT,
        });
    }
    let full = 1usize << n;
    guard(full)?;
    let down: Vec<u64> = (0..n)
        .map(|x| (0..n).filter(|&y| a.leq(y, x)).fold(0, |m, y| m | 1 << y))
        .collect();
    let start = usize::from(nonempty);
    let closure: Vec<u64> = (start..full)
        .map(|s| {
            (0..n)
                .filter(|&x| s >> x & 1 == 1)
                .fold(0, |m, x| m | down[x])
        })
        .collect();
    Ok(FinitePoset::from_fn_unchecked(full - start, |i, j| {
        ((i + start) as u64) & !closure[j] == 0
    }))
}

/// Words of length at most `cap` under Higman's subword embedding.
pub fn words(a: &FinitePoset, cap: usize) -> Result<FinitePoset, OracleError> {
    let mut all: Vec<Vec<usize>> = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..cap {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..a.len()).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
        guard(all.len())?;
    }
    Ok(FinitePoset::from_fn_unchecked(all.len(), |i, j| {
        embeds(a, &all[i], &all[j])
    }))
}

fn embeds(a: &FinitePoset, u: &[usize], v: &[usize]) -> bool {
    let mut p = 0;
    for &y in v {
        if p < u.len() && a.leq(u[p], y) {
            p += 1;
        }
    }
    p == u.len()
}

/// Multisets with sizes in `sizes`, ordered by injective domination.
pub fn multisets(
    a: &FinitePoset,
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<FinitePoset, OracleError> {
    let mut all = Vec::new();
    for k in sizes {
        let mut cur = Vec::with_capacity(k);
        nondecreasing(a.len(), k, 0, &mut cur, &mut all);
        guard(all.len())?;
    }
    Ok(FinitePoset::from_fn_unchecked(all.len(), |i, j| {
        dominated(a, &all[i], &all[j])
    }))
}

fn nondecreasing(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in from..n {
        cur.push(x);
        nondecreasing(n, k, x, cur, out);
        cur.pop();
        if out.len() > SIZE_LIMIT {
            return;
        }
    }
}

/// An injection `f: m → n` with `x ≤ f(x)`, found by augmenting paths.
fn dominated(a: &FinitePoset, m: &[usize], n: &[usize]) -> bool {
    if m.len() > n.len() {
        return false;
    }
    let mut owner: Vec<Option<usize>> = vec![None; n.len()];
    fn augment(
        a: &FinitePoset,
        m: &[usize],
        n: &[usize],
        i: usize,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..n.len() {
            if !seen[j] && a.leq(m[i], n[j]) {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(a, m, n, k, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..m.len()).all(|i| augment(a, m, n, i, &mut vec![false; n.len()], &mut owner))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> FinitePoset {
        build(&s.parse().unwrap(), None).unwrap()
    }

    #[test]
    fn powerset_of_antichain_is_subset_lattice() {
        let p = b("Pf(G(3))");
        assert_eq!(p.len(), 8);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(p.leq(i, j), i & !j == 0);
            }
        }
    }

    #[test]
    fn grid_and_sums() {
        let p = b("2*3");
        assert_eq!(p.len(), 6);
        assert!(p.leq(0, 5) && p.incomparable(1, 2));
        let p = b("G(1)+(G(2)+G(3))");
        assert_eq!(p.len(), 6);
        assert!(p.lt(0, 5) && p.incomparable(1, 2) && p.lt(2, 3));
        assert!(p.is_quasi_order());
    }

    #[test]
    fn lexicographic_product_orientation() {
        let p = b("G(2).2");
        assert_eq!(p.len(), 4);
        assert!(p.incomparable(0, 1));
        assert!(p.lt(0, 3) && p.lt(1, 2));
    }

    #[test]
    fn powerset_is_quasi_order() {
        let p = b("Pf(2|G(1))");
        assert!(p.is_quasi_order());
        assert!(!p.is_antisymmetric());
        assert_eq!(b("PfPlus(G(2))").len(), 3);
    }

    #[test]
    fn words_and_multisets() {
        let e = "G(2)^<w".parse().unwrap();
        let p = build(&e, Some(2)).unwrap();
        assert_eq!(p.len(), 7);
        assert!(p.is_quasi_order());
        assert!(build(&e, None).is_err());
        let p = b("Mn(2,2)");
        assert_eq!(p.len(), 3);
        assert!(p.lt(0, 1) && p.lt(1, 2));
        let p = build(&"M(G(2))".parse().unwrap(), Some(2)).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.is_quasi_order());
    }

    #[test]
    fn size_guard() {
        let e = "Pf(G(13))".parse().unwrap();
        assert!(matches!(build(&e, None), Err(OracleError::TooLarge { .. })));
        assert_eq!(predicted_size(&"Pf(G(13))".parse().unwrap(), 0), Some(8192));
        assert!(matches!(
            build(&"w".parse().unwrap(), None),
            Err(OracleError::NotFinite(_))
        ));
    }
}
