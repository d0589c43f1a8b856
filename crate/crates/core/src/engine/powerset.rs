//! Invariants of `Pf(A)` and `Pf⁺(A)`: exact cases and bounds.

use num_bigint::BigUint;

use super::general::{self, empty, eval, singleton};
use super::result::{InvariantResult as R, UpperModifier};
use super::{invariants, EngineError, InvariantReport};
use crate::expr::WqoExpr::{self, *};
use crate::rewrite;
use crate::Ordinal;

/// Bounds for `Pf(e)` derived from the invariants of `e` alone.
pub fn pf_bounds(e: &WqoExpr) -> Result<InvariantReport, EngineError> {
    Ok(pf_bounds_from(&invariants(e)?))
}

pub fn pf_bounds_from(a: &InvariantReport) -> InvariantReport {
    let one = Ordinal::one();
    let mot = bracket(&a.mot, |x| Ok(one.add(x)), |x| x.two_pow());
    let height = match &a.height {
        R::Unsupported(_) => a.height.clone(),
        h => {
            let lower = one.add(h.lower().unwrap());
            let limit = h.exact().is_some_and(|x| x.is_limit() || x.is_zero());
            match h.strict_upper().and_then(|u| u.two_pow().ok()) {
                Some(upper) if limit => R::from_bounds(lower, Some(upper)),
                Some(upper) => R::Interval {
                    lower,
                    upper,
                    upper_modifier: UpperModifier::FiniteMultiple,
                },
                None => R::LowerOnly(lower),
            }
        }
    };
    let width = match a.width.lower() {
        None => a.width.clone(),
        Some(w) => match w.to_u64() {
            Some(k) => R::LowerOnly(Ordinal::from_nat(central_binomial(k))),
            None if w.is_finite() => R::LowerOnly(w.clone()),
            None => match w.two_pow() {
                Ok(v) => R::LowerOnly(v),
                Err(_) => R::LowerOnly(w.clone()),
            },
        },
    };
    let width = match (&width, mot.strict_upper()) {
        (R::LowerOnly(lb), Some(cap)) if lb == cap => R::Exact(lb.clone()),
        _ => width,
    };
    let mut out = InvariantReport {
        mot,
        height,
        width,
        weak_mot: None,
        notes: Vec::new(),
    };
    out.absorb_notes(a);
    out.note("powerset-bounds");
    out.note("w <= o");
    out
}

fn bracket(
    r: &R,
    lo: impl Fn(&Ordinal) -> Result<Ordinal, crate::OrdinalError>,
    hi: impl Fn(&Ordinal) -> Result<Ordinal, crate::OrdinalError>,
) -> R {
    let Some(l) = r.lower() else {
        return r.clone();
    };
    match lo(l) {
        Ok(lower) => R::from_bounds(lower, r.strict_upper().and_then(|u| hi(u).ok())),
        Err(e) => R::Unsupported(super::UnsupportedReason::NoClosedForm(e.to_string())),
    }
}

/// `C(k, ⌊k/2⌋)`, the width of `Pf(Γ_k)`.
pub(crate) fn central_binomial(k: u64) -> BigUint {
    (0..k / 2).fold(BigUint::from(1u32), |acc, i| acc * (k - i) / (i + 1))
}

pub(crate) fn pf_eval(inner: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let whole = WqoExpr::pf(inner.clone());
    let eliminated = rewrite::eliminate_pf(&whole);
    if eliminated != whole {
        return eval(&eliminated);
    }
    match inner {
        Sim(a) => {
            let expanded = WqoExpr::pf(general::sim_expansion(a)?);
            let mut out = eval(&rewrite::eliminate_pf(&expanded))?;
            out.note("sim-family");
            return Ok(out);
        }
        SimExt(a, m) => {
            let expanded = WqoExpr::pf(general::sim_ext_expansion(a, *m)?);
            let mut out = eval(&rewrite::eliminate_pf(&expanded))?;
            let floor = a.two_pow()?.mul(&Ordinal::finite(*m));
            out.height = out.height.raise_lower(&floor);
            out.note("sim-ext-family");
            return Ok(out);
        }
        _ => {}
    }
    let a = eval(inner)?;
    let mut out = if a.mot.exact().is_some_and(|o| o.is_zero()) {
        singleton("powerset-of-empty")
    } else if let Some(k) = antichain(&a) {
        let mut r = InvariantReport::exact(
            two_pow_finite(k)?,
            Ordinal::finite(k + 1),
            Ordinal::from_nat(central_binomial(k)),
        );
        r.note("powerset-of-antichain");
        r
    } else if let Some(o) = chain(&a) {
        let n = Ordinal::one().add(o);
        let mut r = InvariantReport::exact(n.clone(), n, Ordinal::one());
        r.note("powerset-of-chain");
        r
    } else if let Some(o) = sandwich(&a) {
        let v = o.two_pow()?;
        let mut r = pf_bounds_from(&a);
        r.mot = R::Exact(v.clone());
        r.width = R::Exact(v);
        r.notes.retain(|n| n != "w <= o");
        r.note("powerset-sandwich");
        r
    } else {
        pf_bounds_from(&a)
    };
    out.absorb_notes(&a);
    Ok(out)
}

fn two_pow_finite(k: u64) -> Result<Ordinal, EngineError> {
    Ok(Ordinal::finite(k).two_pow()?)
}

fn antichain(a: &InvariantReport) -> Option<u64> {
    match (a.mot.exact(), a.width.exact()) {
        (Some(o), Some(w)) if o.is_finite() && o == w => o.to_u64(),
        _ => None,
    }
}

fn chain(a: &InvariantReport) -> Option<&Ordinal> {
    match (a.mot.exact(), a.width.exact()) {
        (Some(o), Some(w)) if w.is_one() => Some(o),
        _ => None,
    }
}

/// `w(A) = o(A)` infinite gives `w(Pf(A)) = o(Pf(A)) = 2^{o(A)}`.
fn sandwich(a: &InvariantReport) -> Option<&Ordinal> {
    match (a.mot.exact(), a.width.exact()) {
        (Some(o), Some(w)) if !o.is_finite() && o == w => Some(o),
        _ => None,
    }
}

/// `Pf(A) ≅ 1 + Pf⁺(A)`: subtract the bottom from `o` and `h`, keep `w`.
pub(crate) fn pf_plus_eval(inner: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let a = eval(inner)?;
    if a.mot.exact().is_some_and(|o| o.is_zero()) {
        return Ok(empty("nonempty-powerset-of-empty"));
    }
    let pf = pf_eval(inner)?;
    let mut out = InvariantReport {
        mot: drop_bottom(&pf.mot),
        height: drop_bottom(&pf.height),
        width: pf.width.clone(),
        weak_mot: None,
        notes: Vec::new(),
    };
    out.absorb_notes(&pf);
    out.note("nonempty-powerset");
    Ok(out)
}

fn drop_bottom(r: &R) -> R {
    let one = Ordinal::one();
    let sub = |x: &Ordinal| one.left_subtract(x).unwrap_or_else(|_| x.clone());
    match r {
        R::Exact(v) => R::Exact(sub(v)),
        R::LowerOnly(v) => R::LowerOnly(sub(v)),
        R::Interval {
            lower,
            upper,
            upper_modifier,
        } => R::Interval {
            lower: sub(lower),
            upper: sub(upper),
            upper_modifier: *upper_modifier,
        },
        R::Unsupported(_) => r.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_binomials() {
        let got: Vec<u64> = (0..=8)
            .map(|k| central_binomial(k).try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 1, 2, 3, 6, 10, 20, 35, 70]);
    }
}
