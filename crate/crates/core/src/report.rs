//! Inequality reports with a three-way verdict.
//!
//! Every checked inequality is reduced to a margin. Strict claims pass only
//! when the margin clears [`EPSILON_STRICT`]; margins inside the epsilon
//! band are reported as [`Verdict::Indeterminate`] rather than silently
//! rounded to a pass or a fail.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalar::{real, Real};

/// Margin below which a strict inequality is not considered settled by
/// floating-point evidence.
pub const EPSILON_STRICT: f64 = 1e-9;

/// Outcome of checking one inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

/// The claimed relation between left- and right-hand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    StrictGreater,
    GreaterOrEqual,
    StrictLess,
}

/// One checked inequality with its margin, verdict, and free-form context.
///
/// The margin is oriented so that positive means the claim holds:
/// `lhs - rhs` for the greater-than relations, `rhs - lhs` for
/// [`Relation::StrictLess`].
#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport<F> {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: F,
    pub rhs: F,
    pub margin: F,
    pub verdict: Verdict,
    pub context: BTreeMap<&'static str, String>,
}

fn strict_verdict<F: Real>(margin: F, epsilon: F) -> Verdict {
    if margin >= epsilon {
        Verdict::Pass
    } else if margin <= -epsilon {
        Verdict::Fail
    } else {
        Verdict::Indeterminate
    }
}

fn non_strict_verdict<F: Real>(margin: F, epsilon: F) -> Verdict {
    if margin >= F::zero() {
        Verdict::Pass
    } else if margin <= -epsilon {
        Verdict::Fail
    } else {
        Verdict::Indeterminate
    }
}

impl<F: Real> InequalityReport<F> {
    /// Checks `lhs > rhs` with strictness threshold `epsilon`.
    pub fn strict_greater(name: &'static str, lhs: F, rhs: F, epsilon: F) -> Self {
        let margin = lhs - rhs;
        InequalityReport {
            name,
            relation: Relation::StrictGreater,
            lhs,
            rhs,
            margin,
            verdict: strict_verdict(margin, epsilon),
            context: BTreeMap::new(),
        }
    }

    /// Checks `lhs < rhs` with strictness threshold `epsilon`.
    pub fn strict_less(name: &'static str, lhs: F, rhs: F, epsilon: F) -> Self {
        let margin = rhs - lhs;
        InequalityReport {
            name,
            relation: Relation::StrictLess,
            lhs,
            rhs,
            margin,
            verdict: strict_verdict(margin, epsilon),
            context: BTreeMap::new(),
        }
    }

    /// Checks `lhs >= rhs`; any nonnegative margin passes, and margins in
    /// `(-epsilon, 0)` are indeterminate.
    pub fn at_least(name: &'static str, lhs: F, rhs: F, epsilon: F) -> Self {
        let margin = lhs - rhs;
        InequalityReport {
            name,
            relation: Relation::GreaterOrEqual,
            lhs,
            rhs,
            margin,
            verdict: non_strict_verdict(margin, epsilon),
            context: BTreeMap::new(),
        }
    }

    /// Attaches a context entry, consuming and returning the report.
    pub fn with(mut self, key: &'static str, value: impl Into<String>) -> Self {
        self.context.insert(key, value.into());
        self
    }

    /// Replaces the margin with a value computed by a numerically stabler
    /// route than `lhs - rhs`, re-deriving the verdict. `lhs` and `rhs`
    /// stay as recorded.
    pub fn refine_margin(mut self, margin: F, epsilon: F) -> Self {
        self.margin = margin;
        self.verdict = match self.relation {
            Relation::GreaterOrEqual => non_strict_verdict(margin, epsilon),
            Relation::StrictGreater | Relation::StrictLess => strict_verdict(margin, epsilon),
        };
        self
    }

    /// True exactly when the verdict is [`Verdict::Pass`].
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Default-epsilon constructor for strict greater-than claims.
    pub fn strict_greater_default(name: &'static str, lhs: F, rhs: F) -> Self {
        Self::strict_greater(name, lhs, rhs, real(EPSILON_STRICT))
    }
}
