//! Command-line front end.
//!
//! Three subcommands:
//! * `norm` — estimate one induced p->p norm for a channel described by a
//!   JSON spec file;
//! * `bound` — print a closed-form bound value;
//! * `verify` — run the verification suites and emit a JSON or CSV report.
//!
//! Exit codes: 0 when every invoked check passes, 1 on a numerical failure
//! (a suite case failing its inequality, or an estimate violating its own
//! certificate), 2 on usage errors and malformed spec files. Reports are
//! written even when the verdict is a failure.
//!
//! The default seed is 42, overridable per invocation with `--seed` or
//! globally with the `SCHATTEN_SEED` environment variable.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::channel_file::ChannelSpecFile;
use crate::norm::{
    estimate_norm, h01_bound, saturation_ratio, theorem1_bound, EstimatorConfig, NormDomain,
};
use crate::pexp::PExponent;
use crate::report::{CaseBuilder, SuiteReport};
use crate::suites::{
    suite_h01, suite_qubit, suite_qutrit_probe, suite_riesz_thorin, suite_thm1,
    suite_unital_equivalence,
};

/// Environment variable holding the default seed when `--seed` is absent.
pub const SEED_ENV: &str = "SCHATTEN_SEED";

const DEFAULT_SEED: u64 = 42;
const DEFAULT_SAMPLES: usize = 20;

fn default_seed() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn parse_p(s: &str) -> Result<PExponent, String> {
    PExponent::from_str(s).map_err(|e| e.to_string())
}

fn parse_domain(s: &str) -> Result<NormDomain, String> {
    NormDomain::from_str(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(
    name = "schatten",
    version,
    about = "Induced p->p norms of positive trace-preserving maps: \
             estimates, closed-form bounds, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate the induced p->p norm of a channel from a JSON spec file
    Norm(NormArgs),
    /// Print a closed-form bound value (7 decimals)
    Bound(BoundArgs),
    /// Run verification suites and emit a report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct NormArgs {
    /// Path to the channel spec file (JSON)
    #[arg(long)]
    channel: PathBuf,
    /// Exponent p: a decimal >= 1 or `inf`
    #[arg(long, value_parser = parse_p)]
    p: PExponent,
    /// Input domain: all | hermitian | traceless_hermitian | traceless_all
    #[arg(long, value_parser = parse_domain)]
    domain: NormDomain,
    /// Number of random restarts
    #[arg(long)]
    restarts: Option<usize>,
    /// Convergence tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Seed (default: SCHATTEN_SEED or 42)
    #[arg(long)]
    seed: Option<u64>,
    /// Write a one-case JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    /// Dimension bound n^(1 - 1/p)
    Thm1,
    /// Traceless-hyperplane bound
    H01,
    /// Saturation ratio of the rank-d projector measurement
    Ratio,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(value_enum)]
    kind: BoundKind,
    /// Input dimension
    #[arg(long)]
    n: usize,
    /// Exponent p: a decimal >= 1 or `inf`
    #[arg(long, value_parser = parse_p)]
    p: PExponent,
    /// Projector rank (ratio only)
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Thm1,
    Unital,
    H01,
    Qubit,
    Qutrit,
    RieszThorin,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: VerifySuite,
    /// Dimensions to run (suite-specific defaults otherwise)
    #[arg(long, num_args(1..), value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Exponent grid (default: 1 1.5 2 3 inf)
    #[arg(long = "p-grid", num_args(1..), value_delimiter = ',', value_parser = parse_p)]
    p_grid: Option<Vec<PExponent>>,
    /// Random samples per dimension (default: 20)
    #[arg(long)]
    samples: Option<usize>,
    /// Seed (default: SCHATTEN_SEED or 42)
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Strip the timestamp and per-case wall times (byte-identical reruns)
    #[arg(long)]
    no_timestamp: bool,
}

/// Parses `argv` (including the program name) and runs one command,
/// returning the process exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Norm(args) => run_norm(args),
        Command::Bound(args) => run_bound(args),
        Command::Verify(args) => run_verify(args),
    }
}

/// [`run_cli`] on the process arguments.
pub fn run() -> i32 {
    run_cli(std::env::args_os())
}

fn usage_error(e: impl std::fmt::Display) -> i32 {
    eprintln!("error: {e}");
    2
}

fn run_norm(args: NormArgs) -> i32 {
    let spec = match ChannelSpecFile::from_path(&args.channel) {
        Ok(spec) => spec,
        Err(e) => return usage_error(format!("{}: {e}", args.channel.display())),
    };
    let t = match spec.to_channel() {
        Ok(t) => t,
        Err(e) => return usage_error(format!("{}: {e}", args.channel.display())),
    };
    let mut cfg = EstimatorConfig::default();
    cfg.seed = args.seed.unwrap_or_else(default_seed);
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    if let Some(tol) = args.tol {
        cfg.tol = tol;
    }
    let case = CaseBuilder::begin(t.label().to_string(), t.dim_in())
        .p(args.p)
        .domain(args.domain);
    let est = match estimate_norm(&t, args.p, args.domain, &cfg) {
        Ok(est) => est,
        Err(e) => return usage_error(e),
    };
    println!("channel: {} ({} -> {})", t.label(), t.dim_in(), t.dim_out());
    println!("p = {}, domain = {}, seed = {}", args.p, args.domain, cfg.seed);
    println!("lower = {:.12}  (witness-backed, via {})", est.lower, est.method);
    match (est.upper.value(), est.upper.method()) {
        (Some(u), Some(m)) => println!("upper = {u:.12}  (certified: {m})"),
        _ => println!("upper = none  (no certificate applies)"),
    }
    // a lower estimate above its own certificate is a numerical failure
    let pass = est.upper.value().is_none_or(|u| est.lower <= u + 1e-6);
    if !pass {
        eprintln!("FAIL: estimate exceeds its certified upper bound");
    }
    if let Some(path) = &args.out {
        let mut report = SuiteReport::new("norm", cfg.seed);
        report.push(case.finish(Some(est.lower), est.upper.value(), None, pass));
        report.stamp();
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return usage_error(format!("{}: {e}", path.display()));
        }
    }
    if pass {
        0
    } else {
        1
    }
}

fn run_bound(args: BoundArgs) -> i32 {
    let value = match args.kind {
        BoundKind::Thm1 => {
            if args.d.is_some() {
                return usage_error("--d only applies to `bound ratio`");
            }
            Ok(theorem1_bound(args.n, args.p))
        }
        BoundKind::H01 => {
            if args.d.is_some() {
                return usage_error("--d only applies to `bound ratio`");
            }
            h01_bound(args.n, args.p)
        }
        BoundKind::Ratio => match args.d {
            Some(d) => saturation_ratio(args.n, d, args.p),
            None => return usage_error("`bound ratio` requires --d"),
        },
    };
    match value {
        Ok(v) => {
            println!("{v:.7}");
            0
        }
        Err(e) => usage_error(e),
    }
}

/// Folds per-dimension sub-reports into one suite report (cases already
/// carry their n, so no label prefixing is needed).
fn concat(name: &str, seed: u64, parts: Vec<SuiteReport>) -> SuiteReport {
    let mut out = SuiteReport::new(name, seed);
    for part in parts {
        for case in part.cases {
            out.push(case);
        }
    }
    out
}

fn run_verify(args: VerifyArgs) -> i32 {
    let seed = args.seed.unwrap_or_else(default_seed);
    let samples = args.samples.unwrap_or(DEFAULT_SAMPLES);
    let grid = args.p_grid.clone().unwrap_or_else(PExponent::default_grid);
    let ns = |default: &[usize]| args.n.clone().unwrap_or_else(|| default.to_vec());

    let thm1 = |g: &[PExponent]| suite_thm1(&ns(&[2, 3]), g, samples, seed);
    let unital = |g: &[PExponent]| {
        concat(
            "unital_equivalence",
            seed,
            ns(&[3])
                .iter()
                .map(|&n| suite_unital_equivalence(n, g, samples, seed))
                .collect(),
        )
    };
    let h01 = |g: &[PExponent]| suite_h01(&ns(&[2, 3, 4]), g, seed);
    let qubit = |g: &[PExponent]| suite_qubit(samples, g, seed);
    let qutrit = |g: &[PExponent]| suite_qutrit_probe(g, seed);
    let riesz = |g: &[PExponent]| suite_riesz_thorin(&ns(&[2, 3]), g, samples, seed);

    let mut report = match args.suite {
        VerifySuite::Thm1 => thm1(&grid),
        VerifySuite::Unital => unital(&grid),
        VerifySuite::H01 => h01(&grid),
        VerifySuite::Qubit => qubit(&grid),
        VerifySuite::Qutrit => qutrit(&grid),
        VerifySuite::RieszThorin => riesz(&grid),
        VerifySuite::All => SuiteReport::merge(
            "all",
            seed,
            vec![
                thm1(&grid),
                unital(&grid),
                h01(&grid),
                qubit(&grid),
                qutrit(&grid),
                riesz(&grid),
            ],
        ),
    };
    if args.no_timestamp {
        report.strip_timing();
    } else {
        report.stamp();
    }
    let body = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                return usage_error(format!("{}: {e}", path.display()));
            }
            let failed = report.cases.iter().filter(|c| !c.pass).count();
            println!(
                "{}: {} cases, {} failed, verdict {} -> {}",
                report.suite,
                report.cases.len(),
                failed,
                report.verdict,
                path.display()
            );
        }
        None => print!("{body}"),
    }
    if report.passed() {
        0
    } else {
        1
    }
}
