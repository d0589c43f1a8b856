//! Ordinal invariants of expressions: exact tables, composition rules and bounds.

mod elementary;
mod general;
mod powerset;
mod result;

use serde::Serialize;
use thiserror::Error;

use crate::expr::WqoExpr;
use crate::rewrite::{self, RewriteError};
use crate::{Ordinal, OrdinalError};

pub use elementary::weak_mot;
pub use powerset::{pf_bounds, pf_bounds_from};
pub use result::{InvariantResult, UnsupportedReason, UpperModifier};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not an elementary expression: {0}")]
    NotElementary(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub mot: InvariantResult,
    pub height: InvariantResult,
    pub width: InvariantResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_mot: Option<Ordinal>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn exact(o: Ordinal, h: Ordinal, w: Ordinal) -> Self {
        InvariantReport {
            mot: InvariantResult::Exact(o),
            height: InvariantResult::Exact(h),
            width: InvariantResult::Exact(w),
            weak_mot: None,
            notes: Vec::new(),
        }
    }

    pub fn is_fully_exact(&self) -> bool {
        self.mot.is_exact() && self.height.is_exact() && self.width.is_exact()
    }

    /// The first unsupported component, in `o, h, w` order.
    pub fn first_unsupported(&self) -> Option<&UnsupportedReason> {
        [&self.mot, &self.height, &self.width]
            .into_iter()
            .find_map(|r| r.unsupported())
    }

    pub(crate) fn note(&mut self, rule: &str) {
        if !self.notes.iter().any(|n| n == rule) {
            self.notes.push(rule.to_string());
        }
    }

    pub(crate) fn absorb_notes(&mut self, other: &InvariantReport) {
        for n in &other.notes {
            self.note(n);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// `h ≤ o`, `w ≤ o` and `o ≤ h ⊗ w` on the exact components.
    pub fn check_consistency(&self) -> Result<(), EngineError> {
        let (o, h, w) = (self.mot.exact(), self.height.exact(), self.width.exact());
        if let (Some(o), Some(h)) = (o, h) {
            if h > o {
                return Err(EngineError::InternalInvariant(format!(
                    "h = {h} exceeds o = {o}"
                )));
            }
        }
        if let (Some(o), Some(w)) = (o, w) {
            if w > o {
                return Err(EngineError::InternalInvariant(format!(
                    "w = {w} exceeds o = {o}"
                )));
            }
        }
        if let (Some(o), Some(h), Some(w)) = (o, h, w) {
            if *o > h.nat_prod(w) {
                return Err(EngineError::InternalInvariant(format!(
                    "o = {o} exceeds h ⊗ w = {}",
                    h.nat_prod(w)
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "o = {}", self.mot)?;
        writeln!(f, "h = {}", self.height)?;
        write!(f, "w = {}", self.width)?;
        if let Some(wm) = &self.weak_mot {
            write!(f, "\nweak o = {wm}")?;
        }
        if !self.notes.is_empty() {
            write!(f, "\nrules: {}", self.notes.join(", "))?;
        }
        Ok(())
    }
}

/// Computes `o`, `h` and `w` of `e`.
pub fn invariants(e: &WqoExpr) -> Result<InvariantReport, EngineError> {
    let eliminated = rewrite::eliminate_pf(e);
    let mut report = general::eval(&eliminated)?;
    if eliminated != *e {
        report.notes.insert(0, "eliminate-pf".to_string());
    }
    if e.is_omega_elementary() {
        let omega = Ordinal::omega();
        if !report.height.contains(&omega) {
            return Err(EngineError::InternalInvariant(format!(
                "height {} of an omega-elementary expression excludes w",
                report.height
            )));
        }
        report.height = InvariantResult::Exact(omega);
        report.note("omega-elementary-height");
    }
    if eliminated.is_elementary() {
        report.weak_mot = Some(weak_mot(&eliminated)?);
    }
    report.check_consistency()?;
    Ok(report)
}

/// `o = w = α`, `h = ω^{α₁}` where `α₁` is the leading exponent.
pub fn phi_invariants(a: &Ordinal) -> Result<InvariantReport, EngineError> {
    invariants(&WqoExpr::Phi(a.clone()))
}

pub fn pf_phi_invariants(a: &Ordinal) -> Result<InvariantReport, EngineError> {
    invariants(&WqoExpr::pf(WqoExpr::Phi(a.clone())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimVariant {
    Base,
    Ext(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimReport {
    pub family: InvariantReport,
    pub powerset: InvariantReport,
}

/// Invariants of `FSim_α` (or `FSim_{α+1,m}`) and of its powerset.
pub fn sim_invariants(a: &Ordinal, variant: SimVariant) -> Result<SimReport, EngineError> {
    let family = match variant {
        SimVariant::Base => WqoExpr::Sim(a.clone()),
        SimVariant::Ext(m) => WqoExpr::SimExt(a.clone(), m),
    };
    Ok(SimReport {
        family: invariants(&family)?,
        powerset: invariants(&WqoExpr::pf(family))?,
    })
}

fn omega_omega() -> Ordinal {
    crate::expr::omega_omega()
}
