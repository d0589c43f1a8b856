//! Compositional rules for arbitrary expressions.

use num_traits::Zero;

use super::result::{InvariantResult as R, UnsupportedReason};
use super::{elementary, omega_omega, powerset, EngineError, InvariantReport};
use crate::expr::WqoExpr::{self, *};
use crate::rewrite;
use crate::Ordinal;

/// Largest `m` accepted for `FSim_{α+1,m}`.
const MAX_SIM_EXT_COPIES: u64 = 64;

/// Known widths of ordinal products that no implemented rule derives.
const PRODUCT_WIDTH_FIXTURES: &[(&str, &str, &str)] = &[("w*2", "w*2", "w*3")];

pub(crate) fn eval(e: &WqoExpr) -> Result<InvariantReport, EngineError> {
    if e.is_elementary() {
        return elementary::eval(e);
    }
    let report = match e {
        Ord(a) => {
            let w = if a.is_zero() {
                Ordinal::zero()
            } else {
                Ordinal::one()
            };
            InvariantReport::exact(a.clone(), a.clone(), w)
        }
        Gamma(k) => {
            let k = Ordinal::finite(k.get() as u64);
            InvariantReport::exact(k.clone(), Ordinal::one(), k)
        }
        DisjUnion(l, r) => {
            let (a, b) = (eval(l)?, eval(r)?);
            let mut out = InvariantReport {
                mot: a.mot.zip_monotone(&b.mot, |x, y| Ok(x.nat_sum(y))),
                height: a
                    .height
                    .zip_monotone(&b.height, |x, y| Ok(x.clone().max(y.clone()))),
                width: a.width.zip_monotone(&b.width, |x, y| Ok(x.nat_sum(y))),
                weak_mot: None,
                notes: Vec::new(),
            };
            merge_notes(&mut out, &[&a, &b], "disjoint-union");
            out
        }
        LexSum(l, r) => {
            let (a, b) = (eval(l)?, eval(r)?);
            let mut out = InvariantReport {
                mot: a.mot.zip_monotone(&b.mot, |x, y| Ok(x.add(y))),
                height: a.height.zip_monotone(&b.height, |x, y| Ok(x.add(y))),
                width: a
                    .width
                    .zip_monotone(&b.width, |x, y| Ok(x.clone().max(y.clone()))),
                weak_mot: None,
                notes: Vec::new(),
            };
            merge_notes(&mut out, &[&a, &b], "lexicographic-sum");
            out
        }
        CartProd(l, r) => cartesian(e, l, r)?,
        LexProd(l, r) => lexicographic_product(l, r)?,
        Words(a) => words(a)?,
        Multisets(a) => multisets(a)?,
        MultisetsN(a, n) => match n {
            0 => singleton("multisets-of-size-zero"),
            1 => eval(a)?,
            _ => {
                let reason = UnsupportedReason::NoClosedForm("multisets of a fixed size".into());
                let mut out = all_unsupported(reason);
                out.absorb_notes(&eval(a)?);
                out
            }
        },
        Pf(a) => powerset::pf_eval(a)?,
        PfPlus(a) => powerset::pf_plus_eval(a)?,
        Phi(a) => phi(a)?,
        Sim(a) => {
            let mut out = eval(&rewrite::eliminate_pf(&sim_expansion(a)?))?;
            out.note("sim-family");
            out
        }
        SimExt(a, m) => {
            let mut out = eval(&sim_ext_expansion(a, *m)?)?;
            out.note("sim-ext-family");
            out
        }
    };
    Ok(report)
}

pub(crate) fn merge_notes(out: &mut InvariantReport, parts: &[&InvariantReport], rule: &str) {
    for p in parts {
        out.absorb_notes(p);
    }
    out.note(rule);
}

pub(crate) fn singleton(rule: &str) -> InvariantReport {
    let mut r = InvariantReport::exact(Ordinal::one(), Ordinal::one(), Ordinal::one());
    r.note(rule);
    r
}

pub(crate) fn empty(rule: &str) -> InvariantReport {
    let mut r = InvariantReport::exact(Ordinal::zero(), Ordinal::zero(), Ordinal::zero());
    r.note(rule);
    r
}

fn all_unsupported(reason: UnsupportedReason) -> InvariantReport {
    InvariantReport {
        mot: R::Unsupported(reason.clone()),
        height: R::Unsupported(reason.clone()),
        width: R::Unsupported(reason),
        weak_mot: None,
        notes: Vec::new(),
    }
}

fn is_empty(r: &InvariantReport) -> bool {
    r.mot.exact().is_some_and(|o| o.is_zero())
}

/// `FSim_α`: `ω` for `α = ω`, `Pf(α^{<ω})` for indecomposable `α ≥ ω^ω`.
pub(crate) fn sim_expansion(a: &Ordinal) -> Result<WqoExpr, EngineError> {
    if *a == Ordinal::omega() {
        return Ok(WqoExpr::omega());
    }
    if a.is_multiplicatively_indecomposable() && *a >= omega_omega() {
        return Ok(WqoExpr::pf(WqoExpr::words(WqoExpr::ord(a.clone()))));
    }
    Err(EngineError::Precondition(format!(
        "Sim({a}) needs w or a multiplicatively indecomposable ordinal >= w^w"
    )))
}

/// `FSim_{α+1,m} = (FSim_α + 1) × Γ_m`, written as `m` disjoint copies of `FSim_α + 1`.
pub(crate) fn sim_ext_expansion(a: &Ordinal, m: u64) -> Result<WqoExpr, EngineError> {
    sim_expansion(a)?;
    if m == 0 || m > MAX_SIM_EXT_COPIES {
        return Err(EngineError::Precondition(format!(
            "SimExt({a},{m}) needs 1 <= m <= {MAX_SIM_EXT_COPIES}"
        )));
    }
    let copy = WqoExpr::lex_sum(WqoExpr::Sim(a.clone()), WqoExpr::nat(1));
    Ok((1..m).fold(copy.clone(), |acc, _| WqoExpr::disj(acc, copy.clone())))
}

fn phi(a: &Ordinal) -> Result<InvariantReport, EngineError> {
    let Some(lead) = a.leading_exponent() else {
        return Err(EngineError::Precondition("Phi(0) is undefined".into()));
    };
    let mut r = InvariantReport::exact(a.clone(), Ordinal::omega_pow(lead.clone()), a.clone());
    r.note("phi-family");
    Ok(r)
}

fn hypothesis(rule: &str, condition: &str) -> R {
    R::Unsupported(UnsupportedReason::hypothesis(rule, condition))
}

fn lexicographic_product(l: &WqoExpr, r: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let (a, b) = (eval(l)?, eval(r)?);
    if is_empty(&a) || is_empty(&b) {
        return Ok(empty("empty-product"));
    }
    let mot = match (a.mot.exact(), b.mot.exact()) {
        (Some(x), Some(y)) if x.is_finite() && y.is_finite() => R::Exact(x.mul(y)),
        (_, Some(y)) if y.is_limit() => a.mot.map_monotone(|x| Ok(x.mul(y))),
        _ => hypothesis("mot-of-lexicographic-product", "o(B) is a limit"),
    };
    let mut out = InvariantReport {
        mot,
        height: a.height.zip_monotone(&b.height, |x, y| Ok(x.mul(y))),
        width: a.width.zip_monotone(&b.width, |x, y| x.odot(y)),
        weak_mot: None,
        notes: Vec::new(),
    };
    merge_notes(&mut out, &[&a, &b], "lexicographic-product");
    Ok(out)
}

fn words(inner: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let a = eval(inner)?;
    if is_empty(&a) {
        return Ok(singleton("words-over-empty"));
    }
    let mot = a
        .mot
        .map_monotone(|x| Ok(Ordinal::omega_pow(Ordinal::omega_pow(x.pm()?))));
    let width = match a.mot.exact() {
        Some(x) if x.is_one() => R::Exact(Ordinal::one()),
        _ if a.mot.lower().is_some_and(|x| *x > Ordinal::one()) => mot.clone(),
        _ if a.mot.is_unsupported() => a.mot.clone(),
        _ => hypothesis("width-of-words", "o(A) > 1"),
    };
    let mut out = InvariantReport {
        mot,
        height: a.height.map_monotone(|x| Ok(x.hstar())),
        width,
        weak_mot: None,
        notes: Vec::new(),
    };
    merge_notes(&mut out, &[&a], "words");
    Ok(out)
}

fn multisets(inner: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let a = eval(inner)?;
    if is_empty(&a) {
        return Ok(singleton("multisets-over-empty"));
    }
    let mot = a.mot.map_monotone(|x| Ok(Ordinal::omega_pow(x.hat())));
    let width = match a.mot.exact() {
        Some(x) if x.is_one() => R::Exact(Ordinal::one()),
        Some(x) if x.is_additively_indecomposable() && !x.is_finite() => mot.clone(),
        _ if a.mot.is_unsupported() => a.mot.clone(),
        _ => hypothesis(
            "width-of-multisets",
            "o(A) = w^a is additively indecomposable and infinite",
        ),
    };
    let mut out = InvariantReport {
        mot,
        height: a.height.map_monotone(|x| Ok(x.hstar())),
        width,
        weak_mot: None,
        notes: Vec::new(),
    };
    merge_notes(&mut out, &[&a], "multisets");
    Ok(out)
}

fn cartesian(e: &WqoExpr, l: &WqoExpr, r: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let (a, b) = (eval(l)?, eval(r)?);
    if is_empty(&a) || is_empty(&b) {
        return Ok(empty("empty-product"));
    }
    let mot = a.mot.zip_monotone(&b.mot, |x, y| Ok(x.nat_prod(y)));
    let factors = flatten_product(e)
        .into_iter()
        .map(eval)
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&InvariantReport> = factors.iter().collect();
    let mut notes = Vec::new();
    let width = product_width(&refs, &mut notes);
    let mut out = InvariantReport {
        mot,
        height: a
            .height
            .zip_monotone(&b.height, |x, y| Ok(x.hat_nat_sum(y))),
        width,
        weak_mot: None,
        notes: Vec::new(),
    };
    merge_notes(&mut out, &[&a, &b], "cartesian-product");
    for n in notes {
        out.note(n);
    }
    Ok(out)
}

fn flatten_product(e: &WqoExpr) -> Vec<&WqoExpr> {
    match e {
        CartProd(l, r) if !e.is_elementary() => {
            let mut v = flatten_product(l);
            v.extend(flatten_product(r));
            v
        }
        _ => vec![e],
    }
}

fn is_chain(r: &InvariantReport) -> Option<&Ordinal> {
    match (r.mot.exact(), r.width.exact()) {
        (Some(o), Some(w)) if w.is_one() => Some(o),
        _ => None,
    }
}

fn antichain_size(r: &InvariantReport) -> Option<&Ordinal> {
    match (r.mot.exact(), r.width.exact()) {
        (Some(o), Some(w)) if o.is_finite() && o == w => Some(o),
        _ => None,
    }
}

/// `o = ω^{ω·α}` with `α > 0`.
fn is_omega_omega_multiple(o: &Ordinal) -> bool {
    o.is_additively_indecomposable()
        && o.leading_exponent()
            .is_some_and(|e| !e.is_finite() && e.finite_part().is_zero() && !e.is_zero())
}

fn product_width(factors: &[&InvariantReport], notes: &mut Vec<&'static str>) -> R {
    if factors.len() == 1 {
        return factors[0].width.clone();
    }
    if let Some(i) = factors.iter().position(|f| antichain_size(f).is_some()) {
        let k = antichain_size(factors[i]).unwrap().clone();
        let rest: Vec<&InvariantReport> = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| *f)
            .collect();
        notes.push("width-product-with-antichain");
        return product_width(&rest, notes).map_monotone(|w| Ok(w.nat_prod(&k)));
    }
    let mots: Option<Vec<&Ordinal>> = factors.iter().map(|f| f.mot.exact()).collect();
    let total = mots
        .as_ref()
        .map(|m| m.iter().fold(Ordinal::one(), |acc, o| acc.nat_prod(o)));
    let chains: Option<Vec<&Ordinal>> = factors.iter().map(|f| is_chain(f)).collect();
    if let Some(chains) = chains {
        if let Some(w) = chain_product_width(&chains, notes) {
            return R::Exact(w);
        }
    }
    if let (Some(mots), Some(total)) = (&mots, &total) {
        if mots.iter().filter(|o| is_omega_omega_multiple(o)).count() >= 2 {
            notes.push("width-product-theorem");
            return R::Exact(total.clone());
        }
    }
    let mut best: Option<Ordinal> = None;
    for (j, f) in factors.iter().enumerate() {
        let Some(wj) = f.width.exact() else { continue };
        if wj.is_finite() || !wj.is_additively_indecomposable() {
            continue;
        }
        let others: Option<Ordinal> = factors
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .try_fold(Ordinal::one(), |acc, (_, g)| {
                Some(acc.nat_prod(g.mot.lower()?))
            });
        if let Some(others) = others {
            let lb = wj.mul(&others);
            if best.as_ref().is_none_or(|b| lb > *b) {
                best = Some(lb);
            }
        }
    }
    if let Some(lb) = best {
        notes.push("width-product-lower-bound");
        return match total {
            Some(t) if t == lb => R::Exact(lb),
            _ => R::LowerOnly(lb),
        };
    }
    R::Unsupported(UnsupportedReason::WidthOfProductNonFunctional)
}

/// Widths of products of well-orders covered by known results.
fn chain_product_width(chains: &[&Ordinal], notes: &mut Vec<&'static str>) -> Option<Ordinal> {
    let omega = Ordinal::omega();
    if let [a, b] = chains {
        if a.is_finite() || b.is_finite() {
            notes.push("width-chain-product-finite-factor");
            return Some((*a).clone().min((*b).clone()));
        }
        for (x, y, w) in PRODUCT_WIDTH_FIXTURES {
            let (x, y): (Ordinal, Ordinal) = (x.parse().unwrap(), y.parse().unwrap());
            if (**a == x && **b == y) || (**a == y && **b == x) {
                notes.push("width-product-fixture");
                return Some(w.parse().unwrap());
            }
        }
    }
    let k = chains.iter().filter(|c| ***c == omega).count() as u64;
    let rest: Vec<&&Ordinal> = chains.iter().filter(|c| ***c != omega).collect();
    if k >= 1 && rest.len() <= 1 {
        notes.push("width-omega-power-product");
        let base = Ordinal::omega_pow(Ordinal::finite(k - 1));
        return Some(match rest.first() {
            Some(a) => a.nat_prod(&base),
            None => base,
        });
    }
    None
}
