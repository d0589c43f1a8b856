//! Engine values against brute force.

use serde::Serialize;

use super::{build, oracle_invariants, OracleError, OracleInvariants};
use crate::engine::{invariants, EngineError, InvariantResult};
use crate::expr::WqoExpr;
use crate::Ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exact engine value equal to the oracle's.
    Match,
    /// Oracle value inside the engine's bounds.
    Contained,
    Mismatch,
    /// The engine gave no value.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub invariant: &'static str,
    pub engine: String,
    pub oracle: u64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub expr: String,
    pub oracle: OracleInvariants,
    pub rows: Vec<CheckRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine_error: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict != Verdict::Mismatch)
    }
}

fn verdict(r: &InvariantResult, v: u64) -> Verdict {
    let v = Ordinal::finite(v);
    match r {
        InvariantResult::Exact(x) if *x == v => Verdict::Match,
        InvariantResult::Exact(_) => Verdict::Mismatch,
        InvariantResult::Unsupported(_) => Verdict::Skipped,
        _ if r.contains(&v) => Verdict::Contained,
        _ => Verdict::Mismatch,
    }
}

/// Compares `invariants(e)` with brute force on the materialized poset.
pub fn check_engine(e: &WqoExpr) -> Result<CheckReport, OracleError> {
    if !e.is_finite_expr() {
        return Err(OracleError::NotFinite(e.to_string()));
    }
    let oracle = oracle_invariants(&build(e, None)?)?;
    let values = [
        ("mot", oracle.mot),
        ("height", oracle.height),
        ("width", oracle.width),
    ];
    let (rows, engine_error) = match invariants(e) {
        Ok(report) => {
            let results = [&report.mot, &report.height, &report.width];
            let rows = values
                .iter()
                .zip(results)
                .map(|(&(invariant, v), r)| CheckRow {
                    invariant,
                    engine: r.to_string(),
                    oracle: v,
                    verdict: verdict(r, v),
                })
                .collect();
            (rows, None)
        }
        Err(err) => {
            let verdict = match err {
                EngineError::InternalInvariant(_) => Verdict::Mismatch,
                _ => Verdict::Skipped,
            };
            let rows = values
                .iter()
                .map(|&(invariant, v)| CheckRow {
                    invariant,
                    engine: format!("error: {err}"),
                    oracle: v,
                    verdict,
                })
                .collect();
            (rows, Some(err.to_string()))
        }
    };
    Ok(CheckReport {
        expr: e.to_string(),
        oracle,
        rows,
        engine_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(s: &str) -> CheckReport {
        check_engine(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let r = check("G(2)|3");
        assert!(r.rows.iter().all(|r| r.verdict == Verdict::Match));
        let r = check("3*4");
        assert_eq!(r.rows[1].verdict, Verdict::Match);
        assert_eq!(r.rows[1].oracle, 6);
        let r = check("Pf(G(4))");
        assert!(r.passed());
        assert_eq!(r.rows[2].oracle, 6);
    }

    #[test]
    fn bounds_are_contained() {
        let r = check("Pf(G(2)*2)");
        assert!(r.passed(), "{r:?}");
        assert!(r.rows.iter().any(|r| r.verdict == Verdict::Contained));
    }
}
