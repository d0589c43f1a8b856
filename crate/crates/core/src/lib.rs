//! Ordinal invariants of well-quasi-orders.
//!
//! * [`ordinal`]: Cantor normal forms below ε₀ and the operators on them.
//! * [`expr`]: the expression language for wqos.
//! * [`rewrite`]: normal forms of elementary expressions and powerset elimination.
//! * [`engine`]: maximal order type, height and width of expressions.
//! * [`oracle`]: brute force on explicit finite posets.

pub mod engine;
pub mod expr;
pub mod oracle;
pub mod ordinal;
pub mod rewrite;

pub use expr::{parse, ParseError, WqoExpr};
pub use ordinal::{CnfOrdinal, Natural, OrdinalClass, OrdinalError, Term};

/// Ordinals with arbitrary-precision coefficients.
pub type Ordinal = CnfOrdinal<num_bigint::BigUint>;

/// Ordinals with `u64` coefficients.
pub type SmallOrdinal = CnfOrdinal<u64>;
