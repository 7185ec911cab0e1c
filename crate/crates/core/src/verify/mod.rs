//! The verification harness: randomized theorem checkers for every
//! inequality, trial configuration and execution, dominance sweeps, and
//! report output.

mod rand;
mod sweep;
mod output;

pub use output::{render_report, write_report, ReportDocument, ReportFormat};
pub use rand::{random_ginibre, random_log_uniform_points, random_positive, random_unitary};
pub use sweep::{
    sweep_dominance, GridSpec, MeanFamily, PointGridKind, PointGridSpec, SweepConfig, SweepReport,
    SweepRow,
};

use ::rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matops::{
    diff_map, heinz_map, integral_mean, integral_mean_quadrature, schur_multiplier_check, CMatrix,
    PositiveMatrix,
};
use crate::means::MeanKind;
use crate::norms::{norm, NormKind};
use crate::posdef::dominance;
use crate::report::{InequalityReport, TheoremId};

/// Configuration for a batch of randomized trials of one theorem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub dim: usize,
    pub trials: usize,
    pub s: f64,
    pub t: f64,
    pub norms: Vec<NormKind>,
    pub theorem: TheoremId,
    /// Allow parameters that violate the theorem hypothesis; such trials are
    /// reported with `hypothesis_satisfied = false` and excluded from the
    /// exit-code accounting.
    #[serde(default)]
    pub explore: bool,
}

impl TrialConfig {
    /// The default norm family for a given dimension: the generating Ky Fan
    /// norms 1..=dim plus Schatten p ∈ {1, 2, 3, ∞} as smoke tests.
    pub fn default_norms(dim: usize) -> Vec<NormKind> {
        let mut norms: Vec<NormKind> = (1..=dim).map(NormKind::KyFan).collect();
        norms.extend([
            NormKind::SchattenP(1.0),
            NormKind::SchattenP(2.0),
            NormKind::SchattenP(3.0),
            NormKind::SchattenP(f64::INFINITY),
        ]);
        norms
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Config("dim must be >= 1".into()));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        if !self.s.is_finite() || !self.t.is_finite() {
            return Err(Error::Config(format!(
                "parameters must be finite, got s = {}, t = {}",
                self.s, self.t
            )));
        }
        if self.norms.is_empty() {
            return Err(Error::Config("at least one norm is required".into()));
        }
        for kind in &self.norms {
            kind.validate()?;
            if let NormKind::KyFan(k) = kind {
                if *k > self.dim {
                    return Err(Error::Config(format!(
                        "Ky Fan index {k} exceeds dim {}",
                        self.dim
                    )));
                }
            }
        }
        // Domain constraints that no exploration flag can bypass.
        let (s, t) = (self.s, self.t);
        match self.theorem {
            TheoremId::Chain11 | TheoremId::Drissi13 | TheoremId::Cor210 => {
                if !(0.0..=1.0).contains(&t) {
                    return Err(Error::Config(format!("t must lie in [0, 1], got {t}")));
                }
            }
            TheoremId::Chain12 => {}
            TheoremId::Thm23 => {
                if !(0.0..0.5).contains(&s) {
                    return Err(Error::Config(format!("s must lie in [0, 1/2), got {s}")));
                }
                if !(0.0..=1.0).contains(&t) {
                    return Err(Error::Config(format!("t must lie in [0, 1], got {t}")));
                }
            }
            TheoremId::Thm26 => {
                if !(0.0..0.5).contains(&s) {
                    return Err(Error::Config(format!("s must lie in [0, 1/2), got {s}")));
                }
            }
            TheoremId::Thm28 => {
                if !(0.0..=1.0).contains(&t) || !(0.0..=1.0).contains(&s) {
                    return Err(Error::Config(format!(
                        "s and t must lie in [0, 1], got s = {s}, t = {t}"
                    )));
                }
            }
            TheoremId::Schur24 => {}
            TheoremId::Dominance22 => {
                if !(0.0..=1.0).contains(&t) || !(0.0..=1.0).contains(&s) {
                    return Err(Error::Config(format!(
                        "s and t must lie in [0, 1], got s = {s}, t = {t}"
                    )));
                }
            }
        }
        if !self.explore && !hypothesis_satisfied(self.theorem, s, t) {
            return Err(Error::Config(format!(
                "parameters (s = {s}, t = {t}) violate the hypothesis of {}; pass the \
                 exploration flag to run anyway",
                self.theorem
            )));
        }
        Ok(())
    }
}

/// Does `(s, t)` satisfy the hypothesis of the given theorem?
///
/// For `thm_2_8` the same-sign requirement is read as
/// `(1−2t)(1−2s) ≥ 0`: at `t = 1/2` the left side is identically zero and
/// the inequality holds for any admissible s.
pub fn hypothesis_satisfied(theorem: TheoremId, s: f64, t: f64) -> bool {
    match theorem {
        TheoremId::Chain11 | TheoremId::Chain12 | TheoremId::Cor210 => (0.0..=1.0).contains(&t),
        TheoremId::Drissi13 => (0.25..=0.75).contains(&t),
        TheoremId::Thm23 | TheoremId::Dominance22 => {
            (0.0..0.5).contains(&s) && (1.0 - 2.0 * t).abs() < (1.0 - 2.0 * s) / 2.0
        }
        TheoremId::Thm26 => (0.0..0.5).contains(&s),
        TheoremId::Thm28 => {
            let (dt, ds) = (1.0 - 2.0 * t, 1.0 - 2.0 * s);
            dt.abs() < ds.abs() && dt * ds >= 0.0
        }
        TheoremId::Schur24 => true,
    }
}

fn geometric_term(a: &PositiveMatrix, x: &CMatrix, b: &PositiveMatrix) -> Result<CMatrix> {
    Ok(a.frac_power(0.5)?.into_matrix() * x * b.frac_power(0.5)?.into_matrix())
}

fn arithmetic_term(a: &PositiveMatrix, x: &CMatrix, b: &PositiveMatrix) -> Result<CMatrix> {
    Ok(a.matrix() * x + x * b.matrix())
}

/// `‖A^{1/2}XB^{1/2}‖ ≤ ½‖A^{1−t}XB^t + A^tXB^{1−t}‖ ≤ ½‖AX + XB‖`.
pub fn check_chain_1_1(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    t: f64,
    kind: NormKind,
) -> Result<(InequalityReport, InequalityReport)> {
    let geo = norm(&geometric_term(a, x, b)?, kind)?;
    let heinz = norm(&heinz_map(a, x, b, t)?, kind)?;
    let arith = norm(&arithmetic_term(a, x, b)?, kind)?;
    let dim = x.nrows();
    let first = InequalityReport::new(TheoremId::Chain11, 0.0, t, dim, kind, geo, 0.5 * heinz, true);
    let second =
        InequalityReport::new(TheoremId::Chain11, 0.0, t, dim, kind, 0.5 * heinz, 0.5 * arith, true);
    Ok((first, second))
}

/// `‖A^{1/2}XB^{1/2}‖ ≤ ‖∫_0^1 A^vXB^{1−v} dv‖ ≤ ½‖AX + XB‖`.
pub fn check_chain_1_2(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    kind: NormKind,
) -> Result<(InequalityReport, InequalityReport)> {
    let geo = norm(&geometric_term(a, x, b)?, kind)?;
    let mid = norm(&integral_mean(a, x, b, 0.0)?, kind)?;
    let arith = norm(&arithmetic_term(a, x, b)?, kind)?;
    let dim = x.nrows();
    let first = InequalityReport::new(TheoremId::Chain12, 0.0, 0.0, dim, kind, geo, mid, true);
    let second = InequalityReport::new(TheoremId::Chain12, 0.0, 0.0, dim, kind, mid, 0.5 * arith, true);
    Ok((first, second))
}

/// `‖A^{1−t}XB^t + A^tXB^{1−t}‖ ≤ (2/(1−2s))‖∫_s^{1−s} A^vXB^{1−v} dv‖`.
pub fn check_thm_2_3(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    s: f64,
    t: f64,
    kind: NormKind,
    explore: bool,
) -> Result<InequalityReport> {
    let hyp = hypothesis_satisfied(TheoremId::Thm23, s, t);
    if !hyp && !explore {
        return Err(Error::Hypothesis(format!(
            "thm_2_3 requires 0 <= s < 1/2 and |1-2t| < (1-2s)/2, got s = {s}, t = {t}"
        )));
    }
    let lhs = norm(&heinz_map(a, x, b, t)?, kind)?;
    let rhs = 2.0 / (1.0 - 2.0 * s) * norm(&integral_mean(a, x, b, s)?, kind)?;
    Ok(InequalityReport::new(TheoremId::Thm23, s, t, x.nrows(), kind, lhs, rhs, hyp))
}

/// Drissi's inequality: `thm_2_3` at `s = 0` on the closed interval
/// `t ∈ [1/4, 3/4]`.
pub fn check_drissi_1_3(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    t: f64,
    kind: NormKind,
    explore: bool,
) -> Result<InequalityReport> {
    let hyp = hypothesis_satisfied(TheoremId::Drissi13, 0.0, t);
    if !hyp && !explore {
        return Err(Error::Hypothesis(format!(
            "drissi_1_3 requires t in [1/4, 3/4], got {t}"
        )));
    }
    let lhs = norm(&heinz_map(a, x, b, t)?, kind)?;
    let rhs = 2.0 * norm(&integral_mean(a, x, b, 0.0)?, kind)?;
    Ok(InequalityReport::new(TheoremId::Drissi13, 0.0, t, x.nrows(), kind, lhs, rhs, hyp))
}

/// `‖∫_s^{1−s} A^vXB^{1−v} dv‖ ≤ ((1−2s)/2)‖A^{1−s}XB^s + A^sXB^{1−s}‖`.
pub fn check_thm_2_6(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    s: f64,
    kind: NormKind,
) -> Result<InequalityReport> {
    let lhs = norm(&integral_mean(a, x, b, s)?, kind)?;
    let rhs = (1.0 - 2.0 * s) / 2.0 * norm(&heinz_map(a, x, b, s)?, kind)?;
    Ok(InequalityReport::new(TheoremId::Thm26, s, 0.0, x.nrows(), kind, lhs, rhs, true))
}

/// `‖A^{1−t}XB^t − A^tXB^{1−t}‖ ≤ |(1−2t)/(1−2s)|‖A^{1−s}XB^s − A^sXB^{1−s}‖`.
pub fn check_thm_2_8(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    s: f64,
    t: f64,
    kind: NormKind,
    explore: bool,
) -> Result<InequalityReport> {
    let hyp = hypothesis_satisfied(TheoremId::Thm28, s, t);
    if !hyp && !explore {
        return Err(Error::Hypothesis(format!(
            "thm_2_8 requires |1-2t| < |1-2s| with matching signs, got s = {s}, t = {t}"
        )));
    }
    let lhs = norm(&diff_map(a, x, b, t)?, kind)?;
    // When 1−2t = 0 the left side is identically zero; keep the coefficient
    // finite so exploration at s = 1/2 cannot produce NaN.
    let coef = if 1.0 - 2.0 * t == 0.0 {
        0.0
    } else {
        ((1.0 - 2.0 * t) / (1.0 - 2.0 * s)).abs()
    };
    let rhs = coef * norm(&diff_map(a, x, b, s)?, kind)?;
    Ok(InequalityReport::new(TheoremId::Thm28, s, t, x.nrows(), kind, lhs, rhs, hyp))
}

/// `‖A^{1−t}XB^t − A^tXB^{1−t}‖ ≤ |1−2t|·‖AX − XB‖`.
pub fn check_cor_2_10(
    a: &PositiveMatrix,
    x: &CMatrix,
    b: &PositiveMatrix,
    t: f64,
    kind: NormKind,
) -> Result<InequalityReport> {
    let lhs = norm(&diff_map(a, x, b, t)?, kind)?;
    let commutator = a.matrix() * x - x * b.matrix();
    let rhs = (1.0 - 2.0 * t).abs() * norm(&commutator, kind)?;
    Ok(InequalityReport::new(TheoremId::Cor210, 0.0, t, x.nrows(), kind, lhs, rhs, true))
}

/// Run `config.trials` randomized trials of the configured theorem.
///
/// Trial `i` draws from a ChaCha stream derived from `(seed, i)`, so the
/// report list is deterministic and independent of execution order. Each
/// trial generates fresh instances and emits reports in `(trial, norm)`
/// order; the chain checkers contribute their two sub-inequalities per norm,
/// dominance trials are norm-free and emit a single report per trial.
pub fn run_trials(config: &TrialConfig) -> Result<Vec<InequalityReport>> {
    config.validate()?;
    let mut reports = Vec::new();
    for trial in 0..config.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(trial as u64);
        match config.theorem {
            TheoremId::Schur24 => {
                let y = random_positive(config.dim, &mut rng)?;
                let x = random_ginibre(config.dim, config.dim, &mut rng);
                for &kind in &config.norms {
                    let rep = schur_multiplier_check(y.matrix(), &x, kind)?
                        .with_provenance(config.seed, trial);
                    reports.push(rep);
                }
            }
            TheoremId::Dominance22 => {
                let lambdas = random_log_uniform_points(config.dim, &mut rng);
                let gram = dominance(
                    MeanKind::Heinz(config.t),
                    MeanKind::GenLog(config.s),
                    &lambdas,
                )?;
                let hyp = hypothesis_satisfied(TheoremId::Dominance22, config.s, config.t);
                let rep = InequalityReport::new(
                    TheoremId::Dominance22,
                    config.s,
                    config.t,
                    config.dim,
                    NormKind::Operator,
                    -gram.min_eigenvalue,
                    gram.tolerance_used,
                    hyp,
                )
                .with_provenance(config.seed, trial);
                reports.push(rep);
            }
            theorem => {
                let a = random_positive(config.dim, &mut rng)?;
                let b = random_positive(config.dim, &mut rng)?;
                let x = random_ginibre(config.dim, config.dim, &mut rng);
                for &kind in &config.norms {
                    match theorem {
                        TheoremId::Chain11 => {
                            let (r1, r2) = check_chain_1_1(&a, &x, &b, config.t, kind)?;
                            reports.push(r1.with_provenance(config.seed, trial));
                            reports.push(r2.with_provenance(config.seed, trial));
                        }
                        TheoremId::Chain12 => {
                            let (r1, r2) = check_chain_1_2(&a, &x, &b, kind)?;
                            reports.push(r1.with_provenance(config.seed, trial));
                            reports.push(r2.with_provenance(config.seed, trial));
                        }
                        TheoremId::Drissi13 => {
                            let rep =
                                check_drissi_1_3(&a, &x, &b, config.t, kind, config.explore)?;
                            reports.push(rep.with_provenance(config.seed, trial));
                        }
                        TheoremId::Thm23 => {
                            let rep = check_thm_2_3(
                                &a, &x, &b, config.s, config.t, kind, config.explore,
                            )?;
                            reports.push(rep.with_provenance(config.seed, trial));
                        }
                        TheoremId::Thm26 => {
                            let rep = check_thm_2_6(&a, &x, &b, config.s, kind)?;
                            reports.push(rep.with_provenance(config.seed, trial));
                        }
                        TheoremId::Thm28 => {
                            let rep = check_thm_2_8(
                                &a, &x, &b, config.s, config.t, kind, config.explore,
                            )?;
                            reports.push(rep.with_provenance(config.seed, trial));
                        }
                        TheoremId::Cor210 => {
                            let rep = check_cor_2_10(&a, &x, &b, config.t, kind)?;
                            reports.push(rep.with_provenance(config.seed, trial));
                        }
                        _ => unreachable!(),
                    }
                }
            }
        }
    }
    Ok(reports)
}

/// Closed-form integral mean vs the Simpson oracle on seeded random
/// instances; returns the worst relative Frobenius deviation.
pub fn oracle_integral_deviation(trials: usize, seed: u64) -> Result<f64> {
    let dims = [2usize, 3, 5, 8];
    let s_values = [0.0, 0.1, 0.25, 0.4];
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let dim = dims[trial % dims.len()];
        let s = s_values[(trial / dims.len()) % s_values.len()];
        let a = random_positive(dim, &mut rng)?;
        let b = random_positive(dim, &mut rng)?;
        let x = random_ginibre(dim, dim, &mut rng);
        let closed = integral_mean(&a, &x, &b, s)?;
        let quad = integral_mean_quadrature(&a, &x, &b, s, 1001)?;
        let dev = (&closed - &quad).norm() / quad.norm();
        worst = worst.max(dev);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::SLACK_TOLERANCE;

    fn instance(dim: usize, seed: u64) -> (PositiveMatrix, CMatrix, PositiveMatrix) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_positive(dim, &mut rng).unwrap();
        let b = random_positive(dim, &mut rng).unwrap();
        let x = random_ginibre(dim, dim, &mut rng);
        (a, x, b)
    }

    #[test]
    fn chain_1_1_equality_at_half() {
        let (a, x, b) = instance(4, 1);
        for kind in TrialConfig::default_norms(4) {
            let (r1, _) = check_chain_1_1(&a, &x, &b, 0.5, kind).unwrap();
            assert!(r1.slack.abs() <= 1e-10 * r1.rhs, "{kind:?}: {}", r1.slack);
        }
    }

    #[test]
    fn chain_1_1_second_equality_at_zero() {
        let (a, x, b) = instance(4, 2);
        let (_, r2) = check_chain_1_1(&a, &x, &b, 0.0, NormKind::Trace).unwrap();
        assert!(r2.slack.abs() <= 1e-10 * r2.rhs);
    }

    #[test]
    fn chain_1_2_scalar_case() {
        // 1×1 scalars a = 4, b = 1: 2 ≤ 3/ln 4 ≈ 2.164 ≤ 2.5.
        let a = PositiveMatrix::from_real_diagonal(&[4.0]).unwrap();
        let b = PositiveMatrix::identity(1);
        let x = CMatrix::from_element(1, 1, crate::matops::C64::new(1.0, 0.0));
        let (r1, r2) = check_chain_1_2(&a, &x, &b, NormKind::Operator).unwrap();
        assert!((r1.lhs - 2.0).abs() < 1e-12);
        assert!((r1.rhs - 2.164042561333445).abs() < 1e-12);
        assert!((r2.rhs - 2.5).abs() < 1e-12);
        assert!(r1.holds && r2.holds);
    }

    #[test]
    fn thm_2_3_identity_equality() {
        let i3 = PositiveMatrix::identity(3);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = random_ginibre(3, 3, &mut rng);
        let rep = check_thm_2_3(&i3, &x, &i3, 0.2, 0.5, NormKind::Frobenius, false).unwrap();
        assert!(rep.slack.abs() <= 1e-12 * rep.rhs);
    }

    #[test]
    fn thm_2_3_hypothesis_enforcement() {
        let (a, x, b) = instance(3, 5);
        assert!(matches!(
            check_thm_2_3(&a, &x, &b, 0.3, 0.9, NormKind::Trace, false),
            Err(Error::Hypothesis(_))
        ));
        let rep = check_thm_2_3(&a, &x, &b, 0.3, 0.9, NormKind::Trace, true).unwrap();
        assert!(!rep.hypothesis_satisfied);
    }

    #[test]
    fn thm_2_8_trivial_at_half_and_signs() {
        let (a, x, b) = instance(3, 6);
        let rep = check_thm_2_8(&a, &x, &b, 0.2, 0.5, NormKind::Trace, false).unwrap();
        assert!(rep.lhs <= 1e-12 && rep.holds && rep.hypothesis_satisfied);

        // opposite signs violate the hypothesis
        assert!(matches!(
            check_thm_2_8(&a, &x, &b, 0.8, 0.4, NormKind::Trace, false),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn cor_2_10_equalities() {
        let (a, x, b) = instance(4, 7);
        let rep = check_cor_2_10(&a, &x, &b, 0.5, NormKind::Operator).unwrap();
        assert!(rep.lhs <= 1e-10 && rep.rhs <= 1e-10);

        let rep = check_cor_2_10(&a, &x, &b, 0.0, NormKind::Trace).unwrap();
        assert!(rep.slack.abs() <= 1e-10 * rep.rhs.max(1.0));
    }

    #[test]
    fn run_trials_holds_across_theorems() {
        for theorem in [
            TheoremId::Chain11,
            TheoremId::Chain12,
            TheoremId::Drissi13,
            TheoremId::Thm23,
            TheoremId::Thm26,
            TheoremId::Thm28,
            TheoremId::Cor210,
            TheoremId::Schur24,
            TheoremId::Dominance22,
        ] {
            let config = TrialConfig {
                seed: 11,
                dim: 3,
                trials: 5,
                s: 0.1,
                t: 0.45,
                norms: TrialConfig::default_norms(3),
                theorem,
                explore: false,
            };
            let reports = run_trials(&config).unwrap();
            assert!(!reports.is_empty());
            for rep in &reports {
                assert!(rep.hypothesis_satisfied);
                assert!(
                    rep.holds,
                    "{theorem}: norm {}, relative slack {}",
                    rep.norm, rep.relative_slack
                );
            }
        }
    }

    #[test]
    fn run_trials_is_deterministic() {
        let config = TrialConfig {
            seed: 31,
            dim: 4,
            trials: 4,
            s: 0.05,
            t: 0.5,
            norms: TrialConfig::default_norms(4),
            theorem: TheoremId::Thm23,
            explore: false,
        };
        let r1 = run_trials(&config).unwrap();
        let r2 = run_trials(&config).unwrap();
        assert_eq!(r1, r2);
        // one report per (trial, norm), ordered by trial then norm index
        assert_eq!(r1.len(), 4 * config.norms.len());
        assert!(r1.windows(2).all(|w| w[0].trial <= w[1].trial));
    }

    #[test]
    fn run_trials_scale_covariance() {
        let config = TrialConfig {
            seed: 77,
            dim: 3,
            trials: 1,
            s: 0.0,
            t: 0.3,
            norms: vec![NormKind::Trace],
            theorem: TheoremId::Cor210,
            explore: false,
        };
        let base = run_trials(&config).unwrap();

        // scaling X by c > 0 scales both sides of every report by c
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        rng.set_stream(0);
        let a = random_positive(3, &mut rng).unwrap();
        let b = random_positive(3, &mut rng).unwrap();
        let x = random_ginibre(3, 3, &mut rng);
        let c = 3.5;
        let scaled_x = &x * crate::matops::C64::new(c, 0.0);
        let rep = check_cor_2_10(&a, &scaled_x, &b, 0.3, NormKind::Trace).unwrap();
        assert!((rep.lhs - c * base[0].lhs).abs() <= 1e-12 * rep.lhs.abs().max(1.0));
        assert!((rep.rhs - c * base[0].rhs).abs() <= 1e-12 * rep.rhs.abs().max(1.0));
    }

    #[test]
    fn nested_truncations_both_hold() {
        let (a, x, b) = instance(4, 15);
        let t = 0.48;
        for s in [0.05, 0.2] {
            let rep = check_thm_2_3(&a, &x, &b, s, t, NormKind::Trace, false).unwrap();
            assert!(rep.holds && rep.hypothesis_satisfied);
        }
    }

    #[test]
    fn config_validation_errors() {
        let mut config = TrialConfig {
            seed: 1,
            dim: 3,
            trials: 1,
            s: 0.1,
            t: 0.9,
            norms: TrialConfig::default_norms(3),
            theorem: TheoremId::Thm23,
            explore: false,
        };
        // hypothesis violated without explore
        assert!(config.validate().is_err());
        config.explore = true;
        assert!(config.validate().is_ok());
        // domain violations are rejected even when exploring
        config.s = 0.6;
        assert!(config.validate().is_err());
        config.s = 0.1;
        config.norms = vec![NormKind::KyFan(5)];
        assert!(config.validate().is_err());
    }

    #[test]
    fn slack_tolerance_is_pinned() {
        assert_eq!(SLACK_TOLERANCE, 1e-9);
    }
}
