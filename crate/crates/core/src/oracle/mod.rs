//! Brute force on explicit finite quasi-orders.

pub mod build;
mod check;
mod iso;
mod poset;
pub mod random;
mod ranks;

use thiserror::Error;

pub use build::{build, predicted_size, SIZE_LIMIT};
pub use check::{check_engine, CheckReport, CheckRow, Verdict};
pub use iso::{iso, ISO_LIMIT};
pub use poset::FinitePoset;
pub use ranks::{
    direct_height, direct_mot, direct_width, oracle_invariants, residual_height, residual_mot,
    residual_width, OracleInvariants, RESIDUAL_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("too large: {} elements exceed the limit of {limit}", size.map_or("too many".to_string(), |s| s.to_string()))]
    TooLarge { size: Option<usize>, limit: usize },
    #[error("not a finite expression: {0}")]
    NotFinite(String),
    #[error("invalid poset: {0}")]
    Json(String),
    #[error("oracle disagrees with itself: {0}")]
    Inconsistent(String),
}
