//! Exact invariants of elementary expressions, read off their normal form.

use super::{EngineError, InvariantReport};
use crate::expr::WqoExpr::{self, *};
use crate::rewrite;
use crate::Ordinal;

pub(crate) fn eval(e: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let (nf, trace) = rewrite::normalize_elementary(e)?;
    let (o, h, w) = table(&nf)?;
    let mut report = InvariantReport::exact(o, h, w);
    if !trace.is_empty() {
        report.note("normalize-elementary");
    }
    report.note("elementary-tables");
    Ok(report)
}

fn table(e: &WqoExpr) -> Result<(Ordinal, Ordinal, Ordinal), EngineError> {
    Ok(match e {
        Ord(a) => (a.clone(), a.clone(), Ordinal::one()),
        DisjUnion(l, r) => {
            let ((o1, h1, w1), (o2, h2, w2)) = (table(l)?, table(r)?);
            (o1.nat_sum(&o2), h1.max(h2), w1.nat_sum(&w2))
        }
        CartProd(l, r) => {
            let ((o1, h1, _), (o2, h2, _)) = (table(l)?, table(r)?);
            let o = o1.nat_prod(&o2);
            (o.clone(), h1.hat_nat_sum(&h2), o)
        }
        Words(a) => {
            let (o1, h1, _) = table(a)?;
            let o = Ordinal::omega_pow(Ordinal::omega_pow(o1.pm()?));
            (o.clone(), h1.hstar(), o)
        }
        Multisets(a) => {
            let (o1, h1, _) = table(a)?;
            if !o1.is_additively_indecomposable() || o1.is_finite() {
                return Err(EngineError::InternalInvariant(format!(
                    "multiset argument {a} of a normal form has o = {o1}"
                )));
            }
            let o = Ordinal::omega_pow(o1.hat());
            (o.clone(), h1.hstar(), o)
        }
        Pf(a) => {
            let (o1, _, _) = table(a)?;
            let o = o1.two_pow()?;
            (o.clone(), weak_mot_nf(a)?, o)
        }
        _ => return Err(EngineError::NotElementary(e.to_string())),
    })
}

/// The weakened maximal order type `ô(e)` of an elementary expression.
pub fn weak_mot(e: &WqoExpr) -> Result<Ordinal, EngineError> {
    if !e.is_elementary() {
        return Err(EngineError::NotElementary(e.to_string()));
    }
    let (nf, _) = rewrite::normalize_elementary(e)?;
    weak_mot_nf(&nf)
}

fn weak_mot_nf(e: &WqoExpr) -> Result<Ordinal, EngineError> {
    let v = match e {
        Ord(a) => a.clone(),
        DisjUnion(l, r) | CartProd(l, r) => weak_mot_nf(l)?.max(weak_mot_nf(r)?),
        Words(a) | Multisets(a) => weak_mot_nf(a)?,
        Pf(a) => weak_mot_nf(a)?.two_pow()?,
        _ => return Err(EngineError::NotElementary(e.to_string())),
    };
    if !v.is_multiplicatively_indecomposable() {
        return Err(EngineError::InternalInvariant(format!(
            "weak maximal order type {v} of {e} is not multiplicatively indecomposable"
        )));
    }
    Ok(v)
}
