use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use meanineq_core::verify::{
    oracle_integral_deviation, run_trials, sweep_dominance, write_report, GridSpec, MeanFamily,
    PointGridSpec, ReportDocument, ReportFormat, SweepConfig,
};
use meanineq_core::{KernelKind, MeanKind, NormKind, TheoremId, TrialConfig};

/// Numerical verification of Heinz / logarithmic mean norm inequalities.
#[derive(Parser)]
#[command(name = "meanineq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run randomized trials of one theorem and report every check.
    Verify(VerifyArgs),
    /// Map a dominance region over (t, s) parameter grids.
    Sweep(SweepArgs),
    /// Search for a negative certificate of positive definiteness.
    Witness(WitnessArgs),
    /// Cross-check a closed form against its independent oracle.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem to check: chain_1_1, chain_1_2, drissi_1_3, thm_2_3, thm_2_6,
    /// thm_2_8, cor_2_10, schur_2_4 or dominance_2_2.
    #[arg(long)]
    theorem: String,
    /// Number of randomized trials.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Matrix dimension.
    #[arg(long, default_value_t = 5)]
    dim: usize,
    /// Integral-mean truncation parameter.
    #[arg(long, default_value_t = 0.0)]
    s: f64,
    /// Cross-term interpolation parameter.
    #[arg(long, default_value_t = 0.5)]
    t: f64,
    /// Comma-separated norm list (operator, trace, frobenius, schatten:P,
    /// kyfan:K) or "default" for Ky Fan 1..=dim plus Schatten {1,2,3,inf}.
    #[arg(long, default_value = "default")]
    norms: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow parameters that violate the theorem hypothesis; such trials are
    /// excluded from the exit-code accounting.
    #[arg(long)]
    explore: bool,
    /// Write the full report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format for --out.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    /// Mean pair as "<num>:<den>", e.g. "heinz:log" or "genlog:genlog".
    #[arg(long)]
    dominance: String,
    /// Grid for the numerator parameter, "start:end:step".
    #[arg(long, default_value = "0:1:0.05")]
    t_grid: String,
    /// Grid for the denominator parameter, "start:end:step".
    #[arg(long, default_value = "0:0:1")]
    s_grid: String,
    /// Dominance point grid, "<uniform|geometric|random>,<n>,<span>".
    #[arg(long, default_value = "uniform,12,20")]
    points: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; ".csv" selects CSV rows, anything else JSON.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct WitnessArgs {
    /// Kernel name: cosh_ratio, sinh_ratio, x_cosh_over_sinh, tanh_over_x,
    /// cauchy, x_over_sinh or mean_ratio.
    #[arg(long)]
    kernel: String,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Numerator mean for mean_ratio, e.g. "heinz:0.1".
    #[arg(long)]
    num: Option<String>,
    /// Denominator mean for mean_ratio, e.g. "log".
    #[arg(long)]
    den: Option<String>,
    /// Largest point-set size to try (2..=16).
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    /// Scale of the searched point sets.
    #[arg(long, default_value_t = 20.0)]
    span: f64,
}

#[derive(Args)]
struct OracleArgs {
    /// Which oracle pair to compare; only "integral" exists today.
    #[arg(long, default_value = "integral")]
    check: String,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_norms(spec: &str, dim: usize) -> Result<Vec<NormKind>, meanineq_core::Error> {
    if spec.trim() == "default" {
        return Ok(TrialConfig::default_norms(dim));
    }
    spec.split(',').map(|tok| tok.trim().parse()).collect()
}

fn parse_mean(spec: &str) -> Result<MeanKind, meanineq_core::Error> {
    let (family, param) = match spec.split_once(':') {
        Some((f, p)) => {
            let v = p.trim().parse::<f64>().map_err(|_| {
                meanineq_core::Error::Config(format!("invalid mean parameter '{p}'"))
            })?;
            (f.trim(), Some(v))
        }
        None => (spec.trim(), None),
    };
    let family: MeanFamily = family.parse()?;
    if family.parameterized() && param.is_none() {
        return Err(meanineq_core::Error::Config(format!(
            "mean family '{family}' needs a parameter, e.g. '{family}:0.3'"
        )));
    }
    let kind = family.at(param.unwrap_or(0.0));
    kind.validate()?;
    Ok(kind)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, meanineq_core::Error> {
    let theorem: TheoremId = args.theorem.parse()?;
    let norms = parse_norms(&args.norms, args.dim)?;
    let config = TrialConfig {
        seed: args.seed,
        dim: args.dim,
        trials: args.trials,
        s: args.s,
        t: args.t,
        norms,
        theorem,
        explore: args.explore,
    };
    config.validate()?;
    let format: ReportFormat = args.format.parse()?;

    let reports = run_trials(&config)?;
    let total = reports.len();
    let satisfied = reports.iter().filter(|r| r.hypothesis_satisfied).count();
    let violations: Vec<_> = reports
        .iter()
        .filter(|r| r.hypothesis_satisfied && !r.holds)
        .collect();
    let worst = reports
        .iter()
        .filter(|r| r.hypothesis_satisfied)
        .map(|r| r.relative_slack)
        .fold(f64::INFINITY, f64::min);

    println!(
        "{theorem}: {total} checks ({} trials x {} norms), seed {}",
        config.trials,
        config.norms.len(),
        config.seed
    );
    if satisfied < total {
        println!("hypothesis satisfied in {satisfied}/{total} checks (exploration)");
    }
    if worst.is_finite() {
        println!("worst relative slack: {worst:.3e}");
    }
    for v in violations.iter().take(10) {
        println!(
            "VIOLATION trial {} norm {}: lhs {} > rhs {} (relative slack {:.3e})",
            v.trial, v.norm, v.lhs, v.rhs, v.relative_slack
        );
    }

    let doc = ReportDocument { config, reports };
    if let Some(path) = &args.out {
        write_report(&doc, format, path)?;
        println!("report written to {}", path.display());
    }

    if violations.is_empty() {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL: {} violation(s)", violations.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<ExitCode, meanineq_core::Error> {
    let (num, den) = args.dominance.split_once(':').ok_or_else(|| {
        meanineq_core::Error::Config(format!(
            "--dominance expects '<num>:<den>', got '{}'",
            args.dominance
        ))
    })?;
    let config = SweepConfig {
        num: num.parse()?,
        den: den.parse()?,
        t_grid: args.t_grid.parse::<GridSpec>()?,
        s_grid: args.s_grid.parse::<GridSpec>()?,
        points: args.points.parse::<PointGridSpec>()?,
        seed: args.seed,
    };
    let report = sweep_dominance(&config)?;

    let psd = report.rows.iter().filter(|r| r.is_psd).count();
    println!(
        "{}:{} sweep over {} cells: {} PSD, {} with witnesses",
        config.num,
        config.den,
        report.rows.len(),
        psd,
        report.rows.len() - psd
    );

    let is_csv = args.out.extension().is_some_and(|e| e == "csv");
    let rendered = if is_csv {
        let mut out = String::from("t,s,grid,min_eigenvalue,is_psd\n");
        for row in &report.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.t, row.s, row.grid, row.min_eigenvalue, row.is_psd
            ));
        }
        out
    } else {
        let mut out = serde_json::to_string_pretty(&report)?;
        out.push('\n');
        out
    };
    std::fs::write(&args.out, rendered)?;
    println!("sweep written to {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(args: &WitnessArgs) -> Result<ExitCode, meanineq_core::Error> {
    let kind = match args.kernel.trim() {
        "cosh_ratio" => KernelKind::CoshRatio { alpha: args.alpha, beta: args.beta },
        "sinh_ratio" => KernelKind::SinhRatio { alpha: args.alpha, beta: args.beta },
        "x_cosh_over_sinh" => KernelKind::XCoshOverSinh { alpha: args.alpha, beta: args.beta },
        "tanh_over_x" => KernelKind::TanhOverX { beta: args.beta },
        "cauchy" => KernelKind::Cauchy { b: args.beta },
        "x_over_sinh" => KernelKind::XOverSinh { beta: args.beta },
        "mean_ratio" => {
            let num = args.num.as_deref().ok_or_else(|| {
                meanineq_core::Error::Config("mean_ratio needs --num".into())
            })?;
            let den = args.den.as_deref().ok_or_else(|| {
                meanineq_core::Error::Config("mean_ratio needs --den".into())
            })?;
            KernelKind::MeanRatio { num: parse_mean(num)?, den: parse_mean(den)? }
        }
        other => {
            return Err(meanineq_core::Error::Config(format!("unknown kernel '{other}'")));
        }
    };

    let witness = meanineq_core::posdef::witness_search(kind, args.nmax, args.span)?;
    println!("kernel: {}", witness.kernel);
    println!("min eigenvalue over candidates: {:.6e}", witness.min_eigenvalue);
    if witness.found {
        println!("WITNESS FOUND at points {:?}", witness.points);
    } else {
        println!("no witness found (kernel looks positive definite on the searched sets)");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: &OracleArgs) -> Result<ExitCode, meanineq_core::Error> {
    if args.check != "integral" {
        return Err(meanineq_core::Error::Config(format!(
            "unknown oracle check '{}'",
            args.check
        )));
    }
    let worst = oracle_integral_deviation(args.trials, args.seed)?;
    println!(
        "closed-form integral mean vs Simpson(1001) over {} trials: worst relative error {:.3e}",
        args.trials, worst
    );
    if worst <= 1e-8 {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL: tolerance 1e-8 exceeded");
        Ok(ExitCode::from(1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Witness(args) => cmd_witness(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            // Verification failures exit 1 through the Ok path; anything
            // surfacing here is a usage/config problem.
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
