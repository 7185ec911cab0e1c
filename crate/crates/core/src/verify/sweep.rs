//! Parameter sweeps over dominance regions.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::means::MeanKind;
use crate::posdef::{dominance, witness_search, KernelKind};

/// Point-set size used by the per-cell witness search.
const SWEEP_WITNESS_NMAX: usize = 8;

/// A mean family; `Heinz` and `GenLog` take their parameter from the sweep
/// grid, the others ignore it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanFamily {
    Arithmetic,
    Geometric,
    Log,
    Heinz,
    GenLog,
}

impl MeanFamily {
    pub fn parameterized(&self) -> bool {
        matches!(self, MeanFamily::Heinz | MeanFamily::GenLog)
    }

    pub fn at(&self, param: f64) -> MeanKind {
        match self {
            MeanFamily::Arithmetic => MeanKind::Arithmetic,
            MeanFamily::Geometric => MeanKind::Geometric,
            MeanFamily::Log => MeanKind::Log,
            MeanFamily::Heinz => MeanKind::Heinz(param),
            MeanFamily::GenLog => MeanKind::GenLog(param),
        }
    }
}

impl fmt::Display for MeanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MeanFamily::Arithmetic => "arithmetic",
            MeanFamily::Geometric => "geometric",
            MeanFamily::Log => "log",
            MeanFamily::Heinz => "heinz",
            MeanFamily::GenLog => "genlog",
        };
        f.write_str(name)
    }
}

impl FromStr for MeanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "arithmetic" | "arith" => Ok(MeanFamily::Arithmetic),
            "geometric" | "geom" => Ok(MeanFamily::Geometric),
            "log" => Ok(MeanFamily::Log),
            "heinz" => Ok(MeanFamily::Heinz),
            "genlog" => Ok(MeanFamily::GenLog),
            other => Err(Error::Config(format!("unknown mean family '{other}'"))),
        }
    }
}

/// Inclusive arithmetic grid `start, start + step, ..., end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn single(value: f64) -> Self {
        Self { start: value, end: value, step: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.end.is_finite() && self.step.is_finite()) {
            return Err(Error::Config(format!("grid bounds must be finite: {self:?}")));
        }
        if self.end < self.start {
            return Err(Error::Config(format!("grid end precedes start: {self:?}")));
        }
        if self.end > self.start && self.step <= 0.0 {
            return Err(Error::Config(format!("grid step must be positive: {self:?}")));
        }
        Ok(())
    }

    /// Grid values, computed as `start + k·step` to avoid accumulation drift.
    pub fn values(&self) -> Vec<f64> {
        if self.end == self.start {
            return vec![self.start];
        }
        let count = ((self.end - self.start) / self.step + 0.5).floor() as usize;
        (0..=count).map(|k| self.start + k as f64 * self.step).collect()
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let parse = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("invalid grid component '{p}' in '{s}'")))
        };
        let spec = match parts.as_slice() {
            [one] => GridSpec::single(parse(one)?),
            [start, end, step] => GridSpec {
                start: parse(start)?,
                end: parse(end)?,
                step: parse(step)?,
            },
            _ => {
                return Err(Error::Config(format!(
                    "grid spec must be 'start:end:step' or a single value, got '{s}'"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointGridKind {
    Uniform,
    Geometric,
    Random,
}

/// Where the dominance test points live: `λ_i = e^{x_i}` with the `x_i`
/// spread over a log-window of width `span`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointGridSpec {
    pub kind: PointGridKind,
    pub count: usize,
    pub span: f64,
}

impl PointGridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.count < 2 || self.count > crate::posdef::MAX_POINTS {
            return Err(Error::Config(format!(
                "point count must lie in 2..={}, got {}",
                crate::posdef::MAX_POINTS,
                self.count
            )));
        }
        if !self.span.is_finite() || self.span <= 0.0 {
            return Err(Error::Config(format!("span must be positive, got {}", self.span)));
        }
        Ok(())
    }

    fn log_points<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let half = self.span / 2.0;
        match self.kind {
            PointGridKind::Uniform => (0..self.count)
                .map(|i| -half + self.span * i as f64 / (self.count - 1) as f64)
                .collect(),
            PointGridKind::Geometric => {
                (0..self.count).map(|i| half * 0.5f64.powi(i as i32)).collect()
            }
            PointGridKind::Random => {
                (0..self.count).map(|_| -half + self.span * rng.random::<f64>()).collect()
            }
        }
    }

    /// The positive dominance points.
    pub fn lambdas<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.log_points(rng).into_iter().map(f64::exp).collect()
    }
}

impl FromStr for PointGridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Config(format!(
                "point spec must be '<uniform|geometric|random>,<n>,<span>', got '{s}'"
            )));
        }
        let kind = match parts[0].trim() {
            "uniform" => PointGridKind::Uniform,
            "geometric" => PointGridKind::Geometric,
            "random" => PointGridKind::Random,
            other => return Err(Error::Config(format!("unknown point grid kind '{other}'"))),
        };
        let count = parts[1]
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Config(format!("invalid point count '{}'", parts[1])))?;
        let span = parts[2]
            .trim()
            .parse::<f64>()
            .map_err(|_| Error::Config(format!("invalid span '{}'", parts[2])))?;
        let spec = PointGridSpec { kind, count, span };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub num: MeanFamily,
    pub den: MeanFamily,
    pub t_grid: GridSpec,
    pub s_grid: GridSpec,
    pub points: PointGridSpec,
    pub seed: u64,
}

/// One sweep cell: the parameters, a description of the point grid, the most
/// negative eigenvalue seen (dominance grid and witness search combined) and
/// the PSD verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub t: f64,
    pub s: f64,
    pub grid: String,
    pub min_eigenvalue: f64,
    pub is_psd: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
}

/// Map the dominance region of `num(t) << den(s)` over the parameter grids.
///
/// Each cell evaluates the ratio matrix on the configured point grid and
/// additionally runs a witness search over the corresponding mean-ratio
/// kernel, so failures that the fixed grid misses are still certified. Rows
/// are ordered lexicographically by `(t, s)`.
pub fn sweep_dominance(config: &SweepConfig) -> Result<SweepReport> {
    config.t_grid.validate()?;
    config.s_grid.validate()?;
    config.points.validate()?;

    let t_values = if config.num.parameterized() {
        config.t_grid.values()
    } else {
        vec![0.0]
    };
    let s_values = if config.den.parameterized() {
        config.s_grid.values()
    } else {
        vec![0.0]
    };

    let grid_desc = format!(
        "{:?},{},{}",
        config.points.kind, config.points.count, config.points.span
    )
    .to_lowercase();

    let mut rows = Vec::with_capacity(t_values.len() * s_values.len());
    for &t in &t_values {
        for &s in &s_values {
            let num_kind = config.num.at(t);
            let den_kind = config.den.at(s);
            num_kind.validate()?;
            den_kind.validate()?;

            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let lambdas = config.points.lambdas(&mut rng);
            let gram = dominance(num_kind, den_kind, &lambdas)?;

            let witness = witness_search(
                KernelKind::MeanRatio { num: num_kind, den: den_kind },
                SWEEP_WITNESS_NMAX,
                config.points.span,
            )?;

            rows.push(SweepRow {
                t,
                s,
                grid: grid_desc.clone(),
                min_eigenvalue: gram.min_eigenvalue.min(witness.min_eigenvalue),
                is_psd: gram.is_psd && !witness.found,
            });
        }
    }

    Ok(SweepReport { config: config.clone(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_values_inclusive() {
        let g: GridSpec = "0:1:0.25".parse().unwrap();
        let v = g.values();
        assert_eq!(v.len(), 5);
        assert_eq!(v[0], 0.0);
        assert_eq!(*v.last().unwrap(), 1.0);

        let single: GridSpec = "0.3".parse().unwrap();
        assert_eq!(single.values(), vec![0.3]);

        assert!("1:0:0.1".parse::<GridSpec>().is_err());
        assert!("0:1:stuff".parse::<GridSpec>().is_err());
    }

    #[test]
    fn point_spec_parsing() {
        let p: PointGridSpec = "uniform,12,40".parse().unwrap();
        assert_eq!(p.kind, PointGridKind::Uniform);
        assert_eq!(p.count, 12);
        assert_eq!(p.span, 40.0);
        assert!("nope,3,1".parse::<PointGridSpec>().is_err());
        assert!("uniform,1,1".parse::<PointGridSpec>().is_err());
    }

    #[test]
    fn self_dominance_sweep_is_all_psd() {
        let config = SweepConfig {
            num: MeanFamily::GenLog,
            den: MeanFamily::GenLog,
            t_grid: "0.1:0.4:0.1".parse().unwrap(),
            s_grid: "0.1:0.4:0.1".parse().unwrap(),
            points: "uniform,8,10".parse().unwrap(),
            seed: 5,
        };
        let report = sweep_dominance(&config).unwrap();
        // L_t << L_s requires s <= t on [0, 1/2); the diagonal cells are the
        // self-comparison and must be PSD.
        for row in report.rows.iter().filter(|r| r.t == r.s) {
            assert!(row.is_psd, "t = s = {}: {}", row.t, row.min_eigenvalue);
        }
        // rows are ordered lexicographically by (t, s)
        for w in report.rows.windows(2) {
            assert!(w[0].t < w[1].t || (w[0].t == w[1].t && w[0].s < w[1].s));
        }
    }

    #[test]
    fn genlog_theorem_region_psd() {
        // L_t << L_s for 0 <= s < t < 1/2
        let config = SweepConfig {
            num: MeanFamily::GenLog,
            den: MeanFamily::GenLog,
            t_grid: "0.2:0.4:0.1".parse().unwrap(),
            s_grid: "0:0.1:0.05".parse().unwrap(),
            points: "geometric,10,20".parse().unwrap(),
            seed: 6,
        };
        let report = sweep_dominance(&config).unwrap();
        for row in &report.rows {
            assert!(row.is_psd, "t = {}, s = {}: {}", row.t, row.s, row.min_eigenvalue);
        }
    }

    #[test]
    fn unparameterized_family_collapses_grid() {
        let config = SweepConfig {
            num: MeanFamily::Heinz,
            den: MeanFamily::Log,
            t_grid: "0.3:0.7:0.2".parse().unwrap(),
            s_grid: "0:1:0.1".parse().unwrap(),
            points: "uniform,6,10".parse().unwrap(),
            seed: 7,
        };
        let report = sweep_dominance(&config).unwrap();
        // Log has no parameter: one s value per t
        assert_eq!(report.rows.len(), 3);
        for row in &report.rows {
            assert!(row.is_psd);
        }
    }
}
