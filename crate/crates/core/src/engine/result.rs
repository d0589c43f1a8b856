use std::fmt::{self, Display};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::{Ordinal, OrdinalError};

/// Qualifier on an interval's upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UpperModifier {
    #[default]
    None,
    /// The value is below `upper · m` for some unknown finite `m`.
    FiniteMultiple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnsupportedReason {
    /// The width of a Cartesian product is not a function of the factors' invariants.
    WidthOfProductNonFunctional,
    /// A side condition of a composition rule fails.
    HypothesisNotMet {
        rule: String,
        condition: String,
    },
    NoClosedForm(String),
}

impl UnsupportedReason {
    pub fn code(&self) -> &'static str {
        match self {
            UnsupportedReason::WidthOfProductNonFunctional => "width-of-product-non-functional",
            UnsupportedReason::HypothesisNotMet { .. } => "hypothesis-not-met",
            UnsupportedReason::NoClosedForm(_) => "no-closed-form",
        }
    }

    pub fn hypothesis(rule: &str, condition: &str) -> Self {
        UnsupportedReason::HypothesisNotMet {
            rule: rule.to_string(),
            condition: condition.to_string(),
        }
    }
}

impl Display for UnsupportedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnsupportedReason::WidthOfProductNonFunctional => f.write_str(self.code()),
            UnsupportedReason::HypothesisNotMet { rule, condition } => {
                write!(f, "hypothesis-not-met({rule}: {condition})")
            }
            UnsupportedReason::NoClosedForm(detail) => write!(f, "no-closed-form({detail})"),
        }
    }
}

/// Value of one invariant: exact, bracketed, bounded below, or unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantResult {
    Exact(Ordinal),
    Interval {
        lower: Ordinal,
        upper: Ordinal,
        upper_modifier: UpperModifier,
    },
    LowerOnly(Ordinal),
    Unsupported(UnsupportedReason),
}

use InvariantResult::*;

impl InvariantResult {
    pub fn exact(&self) -> Option<&Ordinal> {
        match self {
            Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<&Ordinal> {
        match self {
            Exact(v) | LowerOnly(v) | Interval { lower: v, .. } => Some(v),
            Unsupported(_) => None,
        }
    }

    /// An upper bound that holds without any finite multiplier.
    pub fn strict_upper(&self) -> Option<&Ordinal> {
        match self {
            Exact(v) => Some(v),
            Interval {
                upper,
                upper_modifier: UpperModifier::None,
                ..
            } => Some(upper),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Exact(_))
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, Unsupported(_))
    }

    pub fn unsupported(&self) -> Option<&UnsupportedReason> {
        match self {
            Unsupported(r) => Some(r),
            _ => None,
        }
    }

    /// Builds the tightest result from bounds: equal bounds collapse to exact.
    pub fn from_bounds(lower: Ordinal, upper: Option<Ordinal>) -> Self {
        match upper {
            Some(u) if u == lower => Exact(lower),
            Some(u) => Interval {
                lower,
                upper: u,
                upper_modifier: UpperModifier::None,
            },
            None => LowerOnly(lower),
        }
    }

    /// Whether `v` is consistent with this result.
    pub fn contains(&self, v: &Ordinal) -> bool {
        match self {
            Exact(x) => x == v,
            LowerOnly(l) => l <= v,
            Interval {
                lower,
                upper,
                upper_modifier,
            } => {
                lower <= v
                    && match upper_modifier {
                        UpperModifier::None => v <= upper,
                        UpperModifier::FiniteMultiple => v < &upper.mul(&Ordinal::omega()),
                    }
            }
            Unsupported(_) => true,
        }
    }

    /// Applies a monotone map to both bounds. A failing lower bound makes the
    /// result unsupported; a failing upper bound is dropped.
    pub fn map_monotone(&self, f: impl Fn(&Ordinal) -> Result<Ordinal, OrdinalError>) -> Self {
        let Some(lo) = self.lower() else {
            return self.clone();
        };
        let lower = match f(lo) {
            Ok(v) => v,
            Err(e) => return Unsupported(UnsupportedReason::NoClosedForm(e.to_string())),
        };
        let upper = self.strict_upper().and_then(|u| f(u).ok());
        Self::from_bounds(lower, upper)
    }

    /// Applies a map monotone in both arguments.
    pub fn zip_monotone(
        &self,
        other: &Self,
        f: impl Fn(&Ordinal, &Ordinal) -> Result<Ordinal, OrdinalError>,
    ) -> Self {
        if let Unsupported(_) = self {
            return self.clone();
        }
        if let Unsupported(_) = other {
            return other.clone();
        }
        let (a, b) = (self.lower().unwrap(), other.lower().unwrap());
        let lower = match f(a, b) {
            Ok(v) => v,
            Err(e) => return Unsupported(UnsupportedReason::NoClosedForm(e.to_string())),
        };
        let upper = match (self.strict_upper(), other.strict_upper()) {
            (Some(x), Some(y)) => f(x, y).ok(),
            _ => None,
        };
        Self::from_bounds(lower, upper)
    }

    /// Raises the lower bound to at least `floor`.
    pub fn raise_lower(&self, floor: &Ordinal) -> Self {
        match self {
            Exact(_) | Unsupported(_) => self.clone(),
            LowerOnly(l) => LowerOnly(l.clone().max(floor.clone())),
            Interval { upper, .. } if floor > upper => LowerOnly(floor.clone()),
            Interval {
                lower,
                upper,
                upper_modifier,
            } => Interval {
                lower: lower.clone().max(floor.clone()),
                upper: upper.clone(),
                upper_modifier: *upper_modifier,
            },
        }
    }
}

impl Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact(v) => write!(f, "{v}"),
            Interval {
                lower,
                upper,
                upper_modifier: UpperModifier::None,
            } => write!(f, "[{lower}, {upper}]"),
            Interval {
                lower,
                upper,
                upper_modifier: UpperModifier::FiniteMultiple,
            } => write!(f, "[{lower}, {upper}*m] for some finite m"),
            LowerOnly(v) => write!(f, ">= {v}"),
            Unsupported(r) => write!(f, "unsupported: {r}"),
        }
    }
}

impl Serialize for InvariantResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            Exact(v) => {
                map.serialize_entry("kind", "exact")?;
                map.serialize_entry("value", v)?;
            }
            Interval {
                lower,
                upper,
                upper_modifier,
            } => {
                map.serialize_entry("kind", "interval")?;
                map.serialize_entry("lower", lower)?;
                map.serialize_entry("upper", upper)?;
                if *upper_modifier == UpperModifier::FiniteMultiple {
                    map.serialize_entry("upper_modifier", "finite-multiple")?;
                }
            }
            LowerOnly(v) => {
                map.serialize_entry("kind", "lower")?;
                map.serialize_entry("lower", v)?;
            }
            Unsupported(reason) => {
                map.serialize_entry("kind", "unsupported")?;
                map.serialize_entry("reason", reason.code())?;
                match reason {
                    UnsupportedReason::HypothesisNotMet { rule, condition } => {
                        map.serialize_entry("rule", rule)?;
                        map.serialize_entry("condition", condition)?;
                    }
                    UnsupportedReason::NoClosedForm(detail) => {
                        map.serialize_entry("detail", detail)?;
                    }
                    UnsupportedReason::WidthOfProductNonFunctional => {}
                }
            }
        }
        map.end()
    }
}
