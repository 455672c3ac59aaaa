//! Command-line front end: knot analysis, family verification, candidate
//! search, calibration report, and raw expansion dumps.

mod report;
mod search;

use std::process::ExitCode;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use bridgeslope_core::{
    analyze, calibrate, calibration_trials, enumerate_expansions, verify_family, BigInt,
    Calibration, Error as CoreError, TwoBridgeKnot,
};
use clap::{Args, Parser, Subcommand};
use num_traits::One;
use serde::Serialize;

use report::{
    print_knot_table, rational_str, write_classes_csv, Big, CalibrationTrialDto, DiagnosticDto,
    ExpansionDto, FamilyReportDto, KnotReportDto, ReportDocument,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_CALIBRATION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bridgeslope",
    about = "Boundary slopes and essential-surface classes of 2-bridge knots K(alpha, beta)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Include a generation timestamp in JSON output (breaks byte stability).
    #[arg(long, global = true)]
    timestamps: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one knot: expansions, surface classes, slopes, genus,
    /// fiberedness.
    Analyze {
        /// Odd alpha >= 3, as a decimal string of any size.
        alpha: String,
        /// Beta with 0 < beta < alpha, coprime to alpha.
        beta: String,
        #[command(flatten)]
        format: FormatFlags,
    },
    /// Verify the combinatorial premises for the family K(6g-1, 2g) over
    /// g = 2..=g-max.
    VerifyPaper {
        #[arg(long, value_name = "G")]
        g_max: String,
        /// Also run g = 1 as a negative control (its c-distinctness check
        /// must fail).
        #[arg(long)]
        allow_g1: bool,
        #[arg(long)]
        json: bool,
    },
    /// Analyze every K(alpha, beta) with alpha <= alpha-max and list the
    /// knots with a unique slope-0 surface class.
    Search {
        #[arg(long, value_name = "N")]
        alpha_max: u64,
        #[arg(long)]
        require_fibered: bool,
        /// Worker threads; defaults to BRIDGESLOPE_JOBS or 1.
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
        #[command(flatten)]
        format: FormatFlags,
    },
    /// Report the slope-map calibration evidence and the selected
    /// scale/sign.
    Calibrate {
        /// Force one scale candidate (1/2, 1, or 2) instead of selecting
        /// automatically; 1/2 demonstrates the integrality failure.
        #[arg(long, value_name = "SCALE")]
        scale: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Dump all strict expansions (every |entry| >= 2) of beta/alpha.
    Enumerate {
        alpha: String,
        beta: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FormatFlags {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::EvenAlpha { .. }
            | CoreError::NotCoprime { .. }
            | CoreError::OutOfRange { .. }
            | CoreError::AlphaTooSmall { .. }
            | CoreError::ParameterError(_) => EXIT_VALIDATION,
            CoreError::CalibrationFailed => EXIT_CALIBRATION,
            _ => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timestamp = cli
        .timestamps
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).unwrap().as_secs());
    let result = match cli.command {
        Command::Analyze { alpha, beta, format } => cmd_analyze(&alpha, &beta, &format, timestamp),
        Command::VerifyPaper { g_max, allow_g1, json } => {
            cmd_verify_paper(&g_max, allow_g1, json, timestamp)
        }
        Command::Search { alpha_max, require_fibered, jobs, format } => {
            cmd_search(alpha_max, require_fibered, jobs, &format, timestamp)
        }
        Command::Calibrate { scale, json } => cmd_calibrate(scale.as_deref(), json, timestamp),
        Command::Enumerate { alpha, beta, json } => cmd_enumerate(&alpha, &beta, json, timestamp),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_bigint(s: &str, what: &str) -> Result<BigInt, Failure> {
    BigInt::from_str(s)
        .map_err(|_| Failure::new(EXIT_VALIDATION, format!("{what} must be an integer, got {s:?}")))
}

fn parse_knot(alpha: &str, beta: &str) -> Result<TwoBridgeKnot, Failure> {
    let alpha = parse_bigint(alpha, "alpha")?;
    let beta = parse_bigint(beta, "beta")?;
    Ok(TwoBridgeKnot::new(alpha, beta)?)
}

fn get_calibration() -> Result<Calibration, Failure> {
    Ok(calibrate()?)
}

#[derive(Serialize)]
struct KnotInputs {
    alpha: Big,
    beta: Big,
}

fn knot_inputs(k: &TwoBridgeKnot) -> KnotInputs {
    KnotInputs {
        alpha: Big(k.alpha().clone()),
        beta: Big(k.beta().clone()),
    }
}

fn cmd_analyze(
    alpha: &str,
    beta: &str,
    format: &FormatFlags,
    timestamp: Option<u64>,
) -> Result<u8, Failure> {
    let knot = parse_knot(alpha, beta)?;
    let cal = get_calibration()?;
    let r = analyze(&knot, &cal)?;
    if format.json {
        let mut doc = ReportDocument::new("analyze", knot_inputs(&knot), KnotReportDto::from(&r));
        doc.generated_at = timestamp;
        doc.print_json();
    } else if format.csv {
        write_classes_csv(std::io::stdout(), &[&r])
            .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    } else {
        print_knot_table(&r);
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyInputs {
    g_max: Big,
    allow_g1: bool,
}

#[derive(Serialize)]
struct VerifyPayload {
    reports: Vec<FamilyReportDto>,
    all_passed: bool,
}

fn cmd_verify_paper(
    g_max: &str,
    allow_g1: bool,
    json: bool,
    timestamp: Option<u64>,
) -> Result<u8, Failure> {
    let g_max = parse_bigint(g_max, "g-max")?;
    let g_min = if allow_g1 { BigInt::one() } else { BigInt::from(2) };
    if g_max < g_min {
        return Err(Failure::new(
            EXIT_VALIDATION,
            format!("g-max must be at least {g_min} (the family needs g >= 2), got {g_max}"),
        ));
    }
    let cal = get_calibration()?;
    let mut reports = Vec::new();
    let mut g = g_min;
    while g <= g_max {
        reports.push(verify_family(&g, allow_g1, &cal)?);
        g += 1;
    }
    let all_passed = reports.iter().all(|r| r.all_passed);
    if json {
        let mut doc = ReportDocument::new(
            "verify-paper",
            VerifyInputs { g_max: Big(g_max), allow_g1 },
            VerifyPayload {
                reports: reports.iter().map(FamilyReportDto::from).collect(),
                all_passed,
            },
        );
        doc.generated_at = timestamp;
        doc.print_json();
    } else {
        println!(
            "{:>8}  {:^9} {:^9} {:^9} {:^10} {:^7} {:^7} {:^11}  c-values (computed = expected: -2, 1, 1-2g, -1-2g)",
            "g", "expansion", "subtuples", "c-values", "c-distinct", "fibered", "genus", "unique-zero"
        );
        for r in &reports {
            let mark = |b: bool| if b { "pass" } else { "FAIL" };
            let cs: Vec<String> = r.computed_c.iter().map(|c| c.to_string()).collect();
            println!(
                "{:>8}  {:^9} {:^9} {:^9} {:^10} {:^7} {:^7} {:^11}  ({})",
                r.g.to_string(),
                mark(r.expansion_matches),
                mark(r.subtuples_match),
                mark(r.c_values_match),
                mark(r.c_distinct),
                mark(r.fibered),
                mark(r.genus_is_g),
                mark(r.unique_zero_slope),
                cs.join(", ")
            );
        }
        println!(
            "{} of {} family members passed all checks",
            reports.iter().filter(|r| r.all_passed).count(),
            reports.len()
        );
    }
    Ok(if all_passed { 0 } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct SearchInputs {
    alpha_max: u64,
    require_fibered: bool,
    jobs: usize,
}

#[derive(Serialize)]
struct SearchPayload {
    candidates: Vec<KnotReportDto>,
}

fn cmd_search(
    alpha_max: u64,
    require_fibered: bool,
    jobs: Option<usize>,
    format: &FormatFlags,
    timestamp: Option<u64>,
) -> Result<u8, Failure> {
    let jobs = jobs
        .or_else(|| {
            std::env::var("BRIDGESLOPE_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);
    let cal = get_calibration()?;
    let outcome = search::run(alpha_max, require_fibered, jobs, &cal);
    let has_internal_failure = !outcome.diagnostics.is_empty();
    if format.json {
        let mut doc = ReportDocument::new(
            "search",
            SearchInputs { alpha_max, require_fibered, jobs },
            SearchPayload {
                candidates: outcome.candidates.iter().map(KnotReportDto::from).collect(),
            },
        );
        doc.diagnostics = outcome.diagnostics.iter().map(DiagnosticDto::from).collect();
        doc.generated_at = timestamp;
        doc.print_json();
    } else if format.csv {
        let refs: Vec<_> = outcome.candidates.iter().collect();
        write_classes_csv(std::io::stdout(), &refs)
            .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    } else {
        println!(
            "{:>8} {:>8} {:>7} {:>8} {:>9}  slopes",
            "alpha", "beta", "classes", "genus", "fibered"
        );
        for r in &outcome.candidates {
            let slopes: Vec<String> = r.slope_multiset.iter().map(|s| s.to_string()).collect();
            println!(
                "{:>8} {:>8} {:>7} {:>8} {:>9}  {{{}}}",
                r.knot.alpha().to_string(),
                r.knot.beta().to_string(),
                r.classes.len(),
                r.genus,
                r.fibered,
                slopes.join(", ")
            );
        }
        println!("{} candidates", outcome.candidates.len());
        for d in &outcome.diagnostics {
            eprintln!("diagnostic: {}: {}", d.knot, d.error);
        }
    }
    Ok(if has_internal_failure { EXIT_INTERNAL } else { 0 })
}

#[derive(Serialize)]
struct CalibrateInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    forced_scale: Option<String>,
}

#[derive(Serialize)]
struct SelectedCalibration {
    scale: String,
    sign: i8,
}

#[derive(Serialize)]
struct CalibratePayload {
    selected: Option<SelectedCalibration>,
    trials: Vec<CalibrationTrialDto>,
    oracle_figure_eight_slopes: Vec<i64>,
    oracle_trefoil_slopes: Vec<i64>,
}

fn cmd_calibrate(scale: Option<&str>, json: bool, timestamp: Option<u64>) -> Result<u8, Failure> {
    let trials = calibration_trials()?;
    let trials: Vec<_> = match scale {
        None => trials,
        Some(s) => {
            let keep: Vec<_> = trials
                .into_iter()
                .filter(|t| {
                    rational_str(&t.scale) == s
                        || (s == "0.5" && rational_str(&t.scale) == "1/2")
                })
                .collect();
            if keep.is_empty() {
                return Err(Failure::new(
                    EXIT_VALIDATION,
                    format!("unknown scale {s:?}; candidates are 1/2, 1, 2"),
                ));
            }
            keep
        }
    };
    let selected = trials.iter().find(|t| t.accepted);
    let payload = CalibratePayload {
        selected: selected.map(|t| SelectedCalibration {
            scale: rational_str(&t.scale),
            sign: t.sign,
        }),
        trials: trials.iter().map(CalibrationTrialDto::from).collect(),
        oracle_figure_eight_slopes: vec![-4, 0, 4],
        oracle_trefoil_slopes: vec![0, 6],
    };
    let failed = payload.selected.is_none();
    if json {
        let mut doc = ReportDocument::new(
            "calibrate",
            CalibrateInputs { forced_scale: scale.map(String::from) },
            payload,
        );
        doc.generated_at = timestamp;
        doc.print_json();
    } else {
        println!(
            "{:>6} {:>5} {:>22} {:>12} {:>9} {:>9}   (oracle: figure-eight {{-4, 0, 4}}, trefoil {{0, 6}})",
            "scale", "sign", "figure-eight slopes", "K(11,4) c=-2", "integral", "accepted"
        );
        for t in &payload.trials {
            println!(
                "{:>6} {:>5} {:>22} {:>12} {:>9} {:>9}",
                t.scale,
                t.sign,
                t.figure_eight_slopes.join(", "),
                t.k11_4_probe,
                t.integral,
                t.accepted
            );
        }
        match &payload.selected {
            Some(s) => println!("selected: scale = {}, sign = {:+}", s.scale, s.sign),
            None => println!("no candidate accepted"),
        }
    }
    if failed {
        return Err(Failure::new(
            EXIT_CALIBRATION,
            "calibration failed: no candidate reproduces the figure-eight slopes with integral output",
        ));
    }
    Ok(0)
}

#[derive(Serialize)]
struct EnumeratePayload {
    expansions: Vec<ExpansionDto>,
}

fn cmd_enumerate(alpha: &str, beta: &str, json: bool, timestamp: Option<u64>) -> Result<u8, Failure> {
    let knot = parse_knot(alpha, beta)?;
    let set = enumerate_expansions(&knot)?;
    if json {
        let mut doc = ReportDocument::new(
            "enumerate",
            knot_inputs(&knot),
            EnumeratePayload {
                expansions: set.expansions().iter().map(ExpansionDto::from).collect(),
            },
        );
        doc.generated_at = timestamp;
        doc.print_json();
    } else {
        println!("{}: {} strict expansions", knot, set.len());
        for e in set.expansions() {
            println!("  {e}");
        }
    }
    Ok(0)
}
