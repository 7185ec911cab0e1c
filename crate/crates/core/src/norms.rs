//! Unitarily invariant norms computed from singular values.
//!
//! The quantified statements "for every unitarily invariant norm" are tested
//! against the generating family of Ky Fan norms (k = 1..n), which by Ky Fan
//! dominance covers all of them, plus a few Schatten norms as smoke tests.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matops::CMatrix;

/// Singular values below this fraction of σ_max are clamped to zero before
/// a norm is assembled, so rank-deficient results (e.g. an exactly-zero
/// difference map) do not pick up spurious p-norm noise.
pub const SV_CLAMP_REL: f64 = 1e-14;

/// Unitarily invariant norm selector.
///
/// `Operator ≡ SchattenP(∞) ≡ KyFan(1)`, `Trace ≡ SchattenP(1)` and
/// `Frobenius ≡ SchattenP(2)`; the aliases agree to 1e-13 relative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormKind {
    /// `(Σ σ_i^p)^{1/p}` for `p ≥ 1`; `p = ∞` is the operator norm.
    SchattenP(f64),
    /// Sum of the k largest singular values, `1 ≤ k ≤ min(rows, cols)`.
    KyFan(usize),
    Operator,
    Trace,
    Frobenius,
}

impl NormKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            NormKind::SchattenP(p) => {
                if p.is_nan() || p < 1.0 {
                    return Err(Error::Parameter(format!(
                        "Schatten exponent must satisfy p >= 1, got {p}"
                    )));
                }
            }
            NormKind::KyFan(k) => {
                if k == 0 {
                    return Err(Error::Parameter("Ky Fan index must be >= 1".into()));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NormKind::SchattenP(p) if p.is_infinite() => write!(f, "schatten_inf"),
            NormKind::SchattenP(p) => write!(f, "schatten_{p}"),
            NormKind::KyFan(k) => write!(f, "ky_fan_{k}"),
            NormKind::Operator => write!(f, "operator"),
            NormKind::Trace => write!(f, "trace"),
            NormKind::Frobenius => write!(f, "frobenius"),
        }
    }
}

impl FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let kind = match s {
            "operator" | "op" => NormKind::Operator,
            "trace" => NormKind::Trace,
            "frobenius" | "fro" => NormKind::Frobenius,
            _ => {
                if let Some(rest) = s.strip_prefix("schatten_").or_else(|| s.strip_prefix("schatten:")) {
                    let p = if rest == "inf" {
                        f64::INFINITY
                    } else {
                        rest.parse::<f64>().map_err(|_| {
                            Error::Parameter(format!("invalid Schatten exponent '{rest}'"))
                        })?
                    };
                    NormKind::SchattenP(p)
                } else if let Some(rest) = s.strip_prefix("ky_fan_").or_else(|| s.strip_prefix("kyfan:")) {
                    let k = rest.parse::<usize>().map_err(|_| {
                        Error::Parameter(format!("invalid Ky Fan index '{rest}'"))
                    })?;
                    NormKind::KyFan(k)
                } else {
                    return Err(Error::Parameter(format!("unknown norm kind '{s}'")));
                }
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl Serialize for NormKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NormKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Singular values of `x`, sorted descending; length `min(rows, cols)`.
pub fn singular_values(x: &CMatrix) -> Vec<f64> {
    let svd = x.clone().svd(false, false);
    let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Evaluate a unitarily invariant norm of `x`.
pub fn norm(x: &CMatrix, kind: NormKind) -> Result<f64> {
    kind.validate()?;
    let min_dim = x.nrows().min(x.ncols());
    if let NormKind::KyFan(k) = kind {
        if k > min_dim {
            return Err(Error::Parameter(format!(
                "Ky Fan index {k} exceeds min dimension {min_dim}"
            )));
        }
    }

    let mut sv = singular_values(x);
    let clamp = SV_CLAMP_REL * sv.first().copied().unwrap_or(0.0);
    for v in &mut sv {
        if *v < clamp {
            *v = 0.0;
        }
    }

    Ok(match kind {
        NormKind::Operator => sv[0],
        NormKind::Trace => sv.iter().sum(),
        NormKind::Frobenius => sv.iter().map(|v| v * v).sum::<f64>().sqrt(),
        NormKind::KyFan(k) => sv[..k].iter().sum(),
        NormKind::SchattenP(p) if p.is_infinite() => sv[0],
        NormKind::SchattenP(p) => sv.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p),
    })
}
