//! Machine-readable report output: JSON documents and flat CSV.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::InequalityReport;
use crate::verify::TrialConfig;

/// A full verification run: the configuration plus one report per check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub config: TrialConfig,
    pub reports: Vec<InequalityReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Config(format!("unknown report format '{other}'"))),
        }
    }
}

const CSV_HEADER: &str =
    "theorem,s,t,dim,seed,trial,norm,lhs,rhs,slack,relative_slack,holds,hypothesis_satisfied";

/// Render a report document; field order is fixed so identical runs produce
/// byte-identical output.
pub fn render_report(doc: &ReportDocument, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(doc)?;
            out.push('\n');
            Ok(out)
        }
        ReportFormat::Csv => {
            let mut out = String::with_capacity(64 * (doc.reports.len() + 1));
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in &doc.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.theorem,
                    r.s,
                    r.t,
                    r.dim,
                    r.seed,
                    r.trial,
                    r.norm,
                    r.lhs,
                    r.rhs,
                    r.slack,
                    r.relative_slack,
                    r.holds,
                    r.hypothesis_satisfied
                )
                .expect("write to String cannot fail");
            }
            Ok(out)
        }
    }
}

/// Write the rendered report to a file.
pub fn write_report(doc: &ReportDocument, format: ReportFormat, path: &Path) -> Result<()> {
    fs::write(path, render_report(doc, format)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::NormKind;
    use crate::report::TheoremId;
    use crate::verify::run_trials;

    fn sample_document() -> ReportDocument {
        let config = TrialConfig {
            seed: 9,
            dim: 3,
            trials: 2,
            s: 0.1,
            t: 0.45,
            norms: vec![NormKind::Trace, NormKind::Operator],
            theorem: TheoremId::Thm23,
            explore: false,
        };
        let reports = run_trials(&config).unwrap();
        ReportDocument { config, reports }
    }

    #[test]
    fn empty_report_is_valid() {
        let mut doc = sample_document();
        doc.reports.clear();
        let json = render_report(&doc, ReportFormat::Json).unwrap();
        let parsed: ReportDocument = serde_json::from_str(&json).unwrap();
        assert!(parsed.reports.is_empty());

        let csv = render_report(&doc, ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
    }

    #[test]
    fn json_round_trip_preserves_reports() {
        let doc = sample_document();
        let json = render_report(&doc, ReportFormat::Json).unwrap();
        let parsed: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.reports, doc.reports);
        assert_eq!(parsed.config.seed, doc.config.seed);
        assert_eq!(parsed.config.norms, doc.config.norms);
    }

    #[test]
    fn csv_row_count_and_field_order() {
        let doc = sample_document();
        let csv = render_report(&doc, ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), doc.reports.len() + 1);
        let first = csv.lines().nth(1).unwrap();
        let fields: Vec<&str> = first.split(',').collect();
        assert_eq!(fields.len(), 13);
        assert_eq!(fields[0], "thm_2_3");
        assert_eq!(fields[12], "true");
    }

    #[test]
    fn rendering_is_deterministic() {
        let d1 = sample_document();
        let d2 = sample_document();
        for format in [ReportFormat::Json, ReportFormat::Csv] {
            assert_eq!(
                render_report(&d1, format).unwrap(),
                render_report(&d2, format).unwrap()
            );
        }
    }

    #[test]
    fn write_report_creates_file() {
        let doc = sample_document();
        let dir = std::env::temp_dir().join("meanineq-output-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("report.csv");
        write_report(&doc, ReportFormat::Csv, &path).unwrap();
        let content = std::fs::read_to_string(&path).unwrap();
        assert!(content.starts_with("theorem,"));
        std::fs::remove_dir_all(&dir).ok();
    }
}
