//! Normal forms of elementary expressions, and elimination of `Pf` over
//! ordinals, unions and lexicographic sums.

use serde::Serialize;
use thiserror::Error;

use crate::expr::WqoExpr;
use crate::expr::WqoExpr::*;
use crate::Ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Pf(α) → α` for elementary `α`.
    PfOfOrdinal,
    /// `E × (E₁ ⊔ E₂) → (E × E₁) ⊔ (E × E₂)`.
    ProductOverUnionRight,
    /// `(E₁ ⊔ E₂) × E → (E₁ × E) ⊔ (E₂ × E)`.
    ProductOverUnionLeft,
    /// `M◇(E₁ ⊔ E₂) → M◇(E₁) × M◇(E₂)`.
    MultisetOfUnion,
    /// `Pf(E₁ ⊔ E₂) → Pf(E₁) × Pf(E₂)`.
    PfOfUnion,
    /// `Pf(α) → 1 + α`.
    PfOfOrdinalShift,
    /// `Pf(A + B) → Pf(A) + Pf⁺(B)`.
    PfOfLexSum,
    /// `Pf⁺(α) → α`.
    PfPlusOfOrdinal,
    /// `Pf⁺(A + B) → Pf⁺(A) + Pf⁺(B)`.
    PfPlusOfLexSum,
    /// `α + β → (α + β)` as a single ordinal.
    LexsumOfOrdinals,
    /// Sorting operands of `⊔` and `×` chains.
    AcNormalize,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::PfOfOrdinal => "Pf-of-ordinal",
            Rule::ProductOverUnionRight => "product-over-union-right",
            Rule::ProductOverUnionLeft => "product-over-union-left",
            Rule::MultisetOfUnion => "multiset-of-union",
            Rule::PfOfUnion => "Pf-of-union",
            Rule::PfOfOrdinalShift => "Pf-of-ordinal-shift",
            Rule::PfOfLexSum => "Pf-of-lexsum",
            Rule::PfPlusOfOrdinal => "PfPlus-of-ordinal",
            Rule::PfPlusOfLexSum => "PfPlus-of-lexsum",
            Rule::LexsumOfOrdinals => "lexsum-of-ordinals",
            Rule::AcNormalize => "ac-normalize",
        }
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

const ELEMENTARY_RULES: &[Rule] = &[
    Rule::PfOfOrdinal,
    Rule::ProductOverUnionRight,
    Rule::ProductOverUnionLeft,
    Rule::MultisetOfUnion,
    Rule::PfOfUnion,
];

const ELIMINATION_RULES: &[Rule] = &[
    Rule::PfOfOrdinalShift,
    Rule::PfOfUnion,
    Rule::PfOfLexSum,
    Rule::PfPlusOfOrdinal,
    Rule::PfPlusOfLexSum,
    Rule::LexsumOfOrdinals,
];

/// Order in which redexes are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LeftmostInnermost,
    LeftmostOutermost,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub path: Vec<usize>,
    pub before: WqoExpr,
    pub after: WqoExpr,
}

/// Rule applications from an input expression to its normal form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RewriteTrace {
    pub steps: Vec<TraceStep>,
}

impl RewriteTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("not an elementary expression: {0}")]
    NotElementary(String),
    #[error("rewriting did not terminate within {0} steps")]
    FuelExhausted(u64),
}

fn apply(rule: Rule, e: &WqoExpr) -> Option<WqoExpr> {
    let one = Ordinal::one;
    match (rule, e) {
        (Rule::PfOfOrdinal, Pf(inner)) => match &**inner {
            Ord(_) => Some((**inner).clone()),
            _ => None,
        },
        (Rule::ProductOverUnionRight, CartProd(l, r)) => match &**r {
            DisjUnion(a, b) => Some(WqoExpr::disj(
                WqoExpr::prod((**l).clone(), (**a).clone()),
                WqoExpr::prod((**l).clone(), (**b).clone()),
            )),
            _ => None,
        },
        (Rule::ProductOverUnionLeft, CartProd(l, r)) => match &**l {
            DisjUnion(a, b) => Some(WqoExpr::disj(
                WqoExpr::prod((**a).clone(), (**r).clone()),
                WqoExpr::prod((**b).clone(), (**r).clone()),
            )),
            _ => None,
        },
        (Rule::MultisetOfUnion, Multisets(inner)) => match &**inner {
            DisjUnion(a, b) => Some(WqoExpr::prod(
                WqoExpr::multisets((**a).clone()),
                WqoExpr::multisets((**b).clone()),
            )),
            _ => None,
        },
        (Rule::PfOfUnion, Pf(inner)) => match &**inner {
            DisjUnion(a, b) => Some(WqoExpr::prod(
                WqoExpr::pf((**a).clone()),
                WqoExpr::pf((**b).clone()),
            )),
            _ => None,
        },
        (Rule::PfOfOrdinalShift, Pf(inner)) => match &**inner {
            Ord(a) => Some(Ord(one().add(a))),
            _ => None,
        },
        (Rule::PfOfLexSum, Pf(inner)) => match &**inner {
            LexSum(a, b) => Some(WqoExpr::lex_sum(
                WqoExpr::pf((**a).clone()),
                WqoExpr::pf_plus((**b).clone()),
            )),
            _ => None,
        },
        (Rule::PfPlusOfOrdinal, PfPlus(inner)) => match &**inner {
            Ord(_) => Some((**inner).clone()),
            _ => None,
        },
        (Rule::PfPlusOfLexSum, PfPlus(inner)) => match &**inner {
            LexSum(a, b) => Some(WqoExpr::lex_sum(
                WqoExpr::pf_plus((**a).clone()),
                WqoExpr::pf_plus((**b).clone()),
            )),
            _ => None,
        },
        (Rule::LexsumOfOrdinals, LexSum(l, r)) => match (&**l, &**r) {
            (Ord(a), Ord(b)) => Some(Ord(a.add(b))),
            _ => None,
        },
        _ => None,
    }
}

fn apply_first(rules: &[Rule], e: &WqoExpr) -> Option<(Rule, WqoExpr)> {
    rules
        .iter()
        .find_map(|&rule| apply(rule, e).map(|out| (rule, out)))
}

/// Finds the redex chosen by `strategy` and returns its rule, its path and
/// the rewritten subterm.
fn find_redex(
    rules: &[Rule],
    e: &WqoExpr,
    strategy: Strategy,
    path: &mut Vec<usize>,
) -> Option<(Rule, Vec<usize>, WqoExpr)> {
    if strategy == Strategy::LeftmostOutermost {
        if let Some((rule, out)) = apply_first(rules, e) {
            return Some((rule, path.clone(), out));
        }
    }
    for (i, child) in e.children().into_iter().enumerate() {
        path.push(i);
        let found = find_redex(rules, child, strategy, path);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    if strategy == Strategy::LeftmostInnermost {
        if let Some((rule, out)) = apply_first(rules, e) {
            return Some((rule, path.clone(), out));
        }
    }
    None
}

fn replace_at(e: &mut WqoExpr, path: &[usize], replacement: WqoExpr) {
    match path.split_first() {
        None => *e = replacement,
        Some((&i, rest)) => {
            let mut children = e.children_mut();
            replace_at(&mut *children.swap_remove(i), rest, replacement)
        }
    }
}

fn step_with(
    rules: &[Rule],
    e: &WqoExpr,
    strategy: Strategy,
) -> Option<(Rule, Vec<usize>, WqoExpr)> {
    let (rule, path, sub) = find_redex(rules, e, strategy, &mut Vec::new())?;
    let mut out = e.clone();
    replace_at(&mut out, &path, sub);
    Some((rule, path, out))
}

/// One leftmost-innermost step of the elementary rules.
pub fn step(e: &WqoExpr) -> Option<(Rule, WqoExpr)> {
    step_with(ELEMENTARY_RULES, e, Strategy::LeftmostInnermost).map(|(r, _, out)| (r, out))
}

/// One step of the elementary rules under the given strategy, with the
/// path of the rewritten position.
pub fn step_strategy(e: &WqoExpr, strategy: Strategy) -> Option<(Rule, Vec<usize>, WqoExpr)> {
    step_with(ELEMENTARY_RULES, e, strategy)
}

/// No elementary rule applies anywhere in `e`.
pub fn is_normal(e: &WqoExpr) -> bool {
    apply_first(ELEMENTARY_RULES, e).is_none() && e.children().into_iter().all(is_normal)
}

/// Step budget `4^size`, saturating.
pub fn fuel_for(e: &WqoExpr) -> u64 {
    4u64.checked_pow(e.size() as u32).unwrap_or(u64::MAX)
}

fn run(
    rules: &[Rule],
    e: &WqoExpr,
    strategy: Strategy,
) -> Result<(WqoExpr, RewriteTrace), RewriteError> {
    let fuel = fuel_for(e);
    let mut trace = RewriteTrace::default();
    let mut current = e.clone();
    let mut used = 0u64;
    while let Some((rule, path, next)) = step_with(rules, &current, strategy) {
        used += 1;
        if used > fuel {
            return Err(RewriteError::FuelExhausted(fuel));
        }
        trace.steps.push(TraceStep {
            rule,
            path,
            before: current,
            after: next.clone(),
        });
        current = next;
    }
    Ok((current, trace))
}

/// Normal form of an elementary expression under the default strategy.
///
/// The rules are confluent only up to the order and bracketing of `⊔` and
/// `×` operands, so the fixpoint is finished by [`ac_normalize`].
pub fn normalize_elementary(e: &WqoExpr) -> Result<(WqoExpr, RewriteTrace), RewriteError> {
    normalize_with(e, Strategy::default())
}

pub fn normalize_with(
    e: &WqoExpr,
    strategy: Strategy,
) -> Result<(WqoExpr, RewriteTrace), RewriteError> {
    if !e.is_elementary() {
        return Err(RewriteError::NotElementary(e.to_string()));
    }
    let (fixpoint, mut trace) = run(ELEMENTARY_RULES, e, strategy)?;
    let sorted = ac_normalize(&fixpoint);
    if sorted != fixpoint {
        trace.steps.push(TraceStep {
            rule: Rule::AcNormalize,
            path: Vec::new(),
            before: fixpoint,
            after: sorted.clone(),
        });
    }
    Ok((sorted, trace))
}

/// Flattens every `⊔` and `×` chain, sorts its operands and rebuilds it
/// left-associated.
pub fn ac_normalize(e: &WqoExpr) -> WqoExpr {
    fn collect(e: &WqoExpr, union: bool, out: &mut Vec<WqoExpr>) {
        match e {
            DisjUnion(l, r) if union => {
                collect(l, union, out);
                collect(r, union, out);
            }
            CartProd(l, r) if !union => {
                collect(l, union, out);
                collect(r, union, out);
            }
            _ => out.push(ac_normalize(e)),
        }
    }
    let rebuild = |union: bool| {
        let mut operands = Vec::new();
        collect(e, union, &mut operands);
        operands.sort();
        let mut it = operands.into_iter();
        let first = it.next().expect("chain is nonempty");
        it.fold(first, |acc, x| {
            if union {
                WqoExpr::disj(acc, x)
            } else {
                WqoExpr::prod(acc, x)
            }
        })
    };
    match e {
        DisjUnion(..) => rebuild(true),
        CartProd(..) => rebuild(false),
        _ => {
            let mut out = e.clone();
            for child in out.children_mut() {
                *child = ac_normalize(child);
            }
            out
        }
    }
}

/// Exhaustively rewrites `Pf` over ordinals, unions and lexicographic sums.
pub fn eliminate_pf(e: &WqoExpr) -> WqoExpr {
    eliminate_pf_traced(e).0
}

pub fn eliminate_pf_traced(e: &WqoExpr) -> (WqoExpr, RewriteTrace) {
    run(ELIMINATION_RULES, e, Strategy::LeftmostInnermost)
        .expect("Pf elimination strictly shrinks the Pf-weighted size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    fn p(s: &str) -> WqoExpr {
        parse(s).unwrap()
    }

    #[test]
    fn powerset_of_ordinal_collapses() {
        let (nf, trace) = normalize_elementary(&p("Pf(o(w^w))")).unwrap();
        assert_eq!(nf, p("o(w^w)"));
        assert_eq!(trace.steps[0].rule, Rule::PfOfOrdinal);
        assert_eq!(
            step(&p("Pf(o(w^w))")),
            Some((Rule::PfOfOrdinal, p("o(w^w)")))
        );
    }

    #[test]
    fn multisets_of_union_split() {
        let (nf, _) = normalize_elementary(&p("M(o(w^w)|o(w^(w^2)))")).unwrap();
        assert_eq!(nf, p("M(o(w^w))*M(o(w^(w^2)))"));
    }

    #[test]
    fn product_distributes_in_two_steps() {
        let e = p("o(w^w)*(o(w^w)|Pf(o(w^(w^2))))");
        let expected = p("(o(w^w)*o(w^w))|(o(w^w)*o(w^(w^2)))");
        for strategy in [Strategy::LeftmostInnermost, Strategy::LeftmostOutermost] {
            let (nf, trace) = normalize_with(&e, strategy).unwrap();
            assert_eq!(nf, expected);
            assert_eq!(trace.len(), 2);
            assert!(is_normal(&nf));
        }
    }

    #[test]
    fn trace_steps_chain() {
        let e = p("Pf(o(w^w)|o(w^w))*(o(w^w)|o(w^(w^w)))");
        let (nf, trace) = normalize_elementary(&e).unwrap();
        assert_eq!(trace.steps[0].before, e);
        for pair in trace.steps.windows(2) {
            assert_eq!(pair[0].after, pair[1].before);
        }
        assert_eq!(trace.steps.last().unwrap().after, nf);
        let json: serde_json::Value = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(json[0]["rule"], "Pf-of-union");
        assert_eq!(json[0]["path"], serde_json::json!([0]));
        assert!(json[0]["before"].is_string());
    }

    #[test]
    fn normal_form_has_no_step() {
        let nf = p("M(o(w^w))*M(o(w^w))");
        assert!(is_normal(&nf));
        assert_eq!(step(&nf), None);
    }

    #[test]
    fn rejects_non_elementary_input() {
        assert!(matches!(
            normalize_elementary(&p("w|w")),
            Err(RewriteError::NotElementary(_))
        ));
    }

    #[test]
    fn strategies_agree_after_sorting() {
        let e = p("(o(w^w)|Pf(o(w^(w^2))))*(o(w^(w^w))*(o(w^w)|M(o(w^w))))");
        let (a, _) = normalize_with(&e, Strategy::LeftmostInnermost).unwrap();
        let (b, _) = normalize_with(&e, Strategy::LeftmostOutermost).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eliminates_powerset_of_lexicographic_sum() {
        assert_eq!(eliminate_pf(&p("Pf(w+w)")), p("o(w*2)"));
        assert_eq!(eliminate_pf(&p("Pf(w|w)")), p("w*w"));
        assert_eq!(eliminate_pf(&p("Pf(G(3))")), p("Pf(G(3))"));
        assert_eq!(eliminate_pf(&p("Pf(3)")), p("4"));
        assert_eq!(eliminate_pf(&p("Pf(G(2)+3)")), p("Pf(G(2))+3"));
        assert_eq!(eliminate_pf(&p("Pf((w|w)+(w|w))")), p("w*w+PfPlus(w|w)"));
        assert_eq!(eliminate_pf(&p("Pf((w+w)|(w+w))")), p("o(w*2)*o(w*2)"));
    }
}
