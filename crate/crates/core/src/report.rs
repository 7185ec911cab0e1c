//! Report types shared by the theorem checkers and the harness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::norms::NormKind;

/// Relative slack below which an inequality counts as violated.
///
/// Derived from the eigensolver contract (1e-11) amplified through at most
/// ~100× conditioning in the products at the dimensions used here; a true
/// inequality never trips it, a real violation is orders of magnitude larger.
pub const SLACK_TOLERANCE: f64 = 1e-9;

/// Identifiers for the checkable inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Geometric ≤ Heinz ≤ arithmetic cross-term chain.
    #[serde(rename = "chain_1_1")]
    Chain11,
    /// Geometric ≤ integral mean ≤ arithmetic chain.
    #[serde(rename = "chain_1_2")]
    Chain12,
    /// Heinz cross-term vs twice the full integral mean, t ∈ [1/4, 3/4].
    #[serde(rename = "drissi_1_3")]
    Drissi13,
    /// Heinz cross-term vs scaled truncated integral mean.
    #[serde(rename = "thm_2_3")]
    Thm23,
    /// Truncated integral mean vs scaled Heinz cross-term at s.
    #[serde(rename = "thm_2_6")]
    Thm26,
    /// Difference-map comparison between parameters t and s.
    #[serde(rename = "thm_2_8")]
    Thm28,
    /// Difference map vs commutator bound.
    #[serde(rename = "cor_2_10")]
    Cor210,
    /// Schur multiplier bound for PSD Y.
    #[serde(rename = "schur_2_4")]
    Schur24,
    /// Strong dominance of the Heinz mean by the generalized log mean.
    #[serde(rename = "dominance_2_2")]
    Dominance22,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Chain11,
        TheoremId::Chain12,
        TheoremId::Drissi13,
        TheoremId::Thm23,
        TheoremId::Thm26,
        TheoremId::Thm28,
        TheoremId::Cor210,
        TheoremId::Schur24,
        TheoremId::Dominance22,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Chain11 => "chain_1_1",
            TheoremId::Chain12 => "chain_1_2",
            TheoremId::Drissi13 => "drissi_1_3",
            TheoremId::Thm23 => "thm_2_3",
            TheoremId::Thm26 => "thm_2_6",
            TheoremId::Thm28 => "thm_2_8",
            TheoremId::Cor210 => "cor_2_10",
            TheoremId::Schur24 => "schur_2_4",
            TheoremId::Dominance22 => "dominance_2_2",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .iter()
            .find(|id| id.as_str() == s)
            .copied()
            .ok_or_else(|| Error::Config(format!("unknown theorem id '{s}'")))
    }
}

/// One verified inequality instance.
///
/// `slack = rhs − lhs`, `relative_slack = slack / max(rhs, 1e-300)` and
/// `holds ⇔ relative_slack ≥ −SLACK_TOLERANCE`. For dominance checks (which
/// are norm-free PSD tests) `lhs` is the negated minimum eigenvalue, `rhs`
/// the PSD tolerance, and the operator norm is recorded by convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem: TheoremId,
    pub s: f64,
    pub t: f64,
    pub dim: usize,
    pub seed: u64,
    pub trial: usize,
    pub norm: NormKind,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub relative_slack: f64,
    pub holds: bool,
    pub hypothesis_satisfied: bool,
}

impl InequalityReport {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        theorem: TheoremId,
        s: f64,
        t: f64,
        dim: usize,
        norm: NormKind,
        lhs: f64,
        rhs: f64,
        hypothesis_satisfied: bool,
    ) -> Self {
        let slack = rhs - lhs;
        let relative_slack = slack / rhs.max(1e-300);
        Self {
            theorem,
            s,
            t,
            dim,
            seed: 0,
            trial: 0,
            norm,
            lhs,
            rhs,
            slack,
            relative_slack,
            holds: relative_slack >= -SLACK_TOLERANCE,
            hypothesis_satisfied,
        }
    }

    /// Attach the generator provenance recorded by the harness.
    pub fn with_provenance(mut self, seed: u64, trial: usize) -> Self {
        self.seed = seed;
        self.trial = trial;
        self
    }
}
