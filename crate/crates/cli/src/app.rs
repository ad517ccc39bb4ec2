//! Command-line interface. Exit codes: 0 when every verified claim holds,
//! 1 on usage or parameter errors, 2 when a mismatch or degeneracy is found.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use ccc_forge_core::ccc::{check_subcode, BoundReport, CccParameters, CompositionPrediction, SubcodeCheck};
use ccc_forge_core::codes::{
    check_weight_distribution, generator_matrix, predict_weight_distribution, WeightDistribution, WeightTable,
};
use ccc_forge_core::poly::{display_polynomial, format_modulus, parse_modulus};
use ccc_forge_core::report::{Claim, ReportEntry, Verdict};
use ccc_forge_core::{ExtField, Parameters};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;
use crate::grid::{GridSpec, DEFAULT_GRID};
use crate::limits::max_q;
use crate::parallel::code_data;
use crate::verify::{verify, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ccc-forge",
    version,
    about = "Trace codes over F_{p^m}, their constant-composition subcodes, and verification of their closed forms"
)]
pub struct Cli {
    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field summary: modulus, q, s and the sign ε or τ.
    Field {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Parameters and weight distribution of the code for one α.
    Code {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        alpha: u32,
        #[arg(long, value_enum, default_value_t = CodeFormat::Json)]
        format: CodeFormat,
    },
    /// Constant-composition subcode for one (α, γ) with all its verdicts.
    Ccc {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        gamma: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Json)]
        format: TextFormat,
    },
    /// Every applicable claim check over a parameter grid, as one JSON report.
    Verify {
        /// Sub-grids joined by `|`, e.g. `p=3,5;m=2,4;alpha=square;gamma=all`.
        #[arg(long, default_value = DEFAULT_GRID)]
        grid: String,
        /// Modulus `c_0,…,c_m`; the grid must name a single field.
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Deterministic text artifacts for golden tests.
    Export {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        alpha: u32,
        #[arg(long, value_enum)]
        kind: ExportKind,
    },
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub m: u32,
    /// Modulus coefficients `c_0,…,c_m`, lowest degree first.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CodeFormat {
    Json,
    Csv,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    GeneratorMatrix,
    DefiningSet,
}

/// Rendered output and exit code of one command.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli).and_then(|outcome| emit(&cli, stdout, &outcome.text).map(|()| outcome.code)) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::usage("--threads must be at least 1"));
        }
        builder = builder.num_threads(threads);
    }
    let pool = builder.build().map_err(|e| CliError::usage(format!("cannot start worker threads: {e}")))?;
    pool.install(|| dispatch(&cli.command))
}

fn dispatch(command: &Command) -> Result<Outcome, CliError> {
    let limit = max_q()?;
    match command {
        Command::Field { field, format } => cmd_field(&build_field(field, limit)?, *format),
        Command::Code { field, alpha, format } => cmd_code(&build_field(field, limit)?, *alpha, *format),
        Command::Ccc { field, alpha, gamma, format } => cmd_ccc(&build_field(field, limit)?, *alpha, *gamma, *format),
        Command::Verify { grid, modulus } => cmd_verify(grid, modulus.as_deref(), limit),
        Command::Export { field, alpha, kind } => cmd_export(&build_field(field, limit)?, *alpha, *kind),
    }
}

fn modulus_coeffs(text: Option<&str>, p: u64, m: u32) -> Result<Option<Vec<u32>>, CliError> {
    text.map(|text| {
        let params = Parameters::new(p, m)?;
        Ok(parse_modulus(text, params.p())?)
    })
    .transpose()
}

fn build_field(args: &FieldArgs, limit: u64) -> Result<ExtField, CliError> {
    let modulus = modulus_coeffs(args.modulus.as_deref(), args.p, args.m)?;
    Ok(ExtField::build(args.p, args.m, modulus.as_deref(), limit)?)
}

fn check_alpha(field: &ExtField, alpha: u32) -> Result<(), CliError> {
    if alpha >= field.p() {
        return Err(CliError::usage(format!("alpha must be in 0..{} (got {alpha})", field.p())));
    }
    Ok(())
}

fn sign(v: i64) -> &'static str {
    if v > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct FieldJson {
    p: u32,
    m: u32,
    q: u64,
    modulus: String,
    polynomial: String,
    s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<i64>,
}

fn cmd_field(field: &ExtField, format: TextFormat) -> Result<Outcome, CliError> {
    let params = field.params();
    let summary = FieldJson {
        p: field.p(),
        m: field.m(),
        q: field.q(),
        modulus: format_modulus(field.modulus()),
        polynomial: display_polynomial(field.modulus()),
        s: params.s(),
        epsilon: params.epsilon(),
        tau: params.tau(),
    };
    let text = match format {
        TextFormat::Json => json(&summary)?,
        TextFormat::Text => {
            let mut text = format!(
                "p = {}\nm = {}\nq = {}\nmodulus = {} ({})\ns = {}\n",
                summary.p, summary.m, summary.q, summary.modulus, summary.polynomial, summary.s
            );
            if let Some(eps) = summary.epsilon {
                text.push_str(&format!("epsilon = {}\n", sign(eps)));
            }
            if let Some(tau) = summary.tau {
                text.push_str(&format!("tau = {}\n", sign(tau)));
            }
            text
        }
    };
    Ok(Outcome::ok(text))
}

/// Overall verdict: mismatch over degenerate over match.
fn overall(entries: &[ReportEntry]) -> Verdict {
    if entries.iter().any(|e| e.verdict == Verdict::Mismatch) {
        Verdict::Mismatch
    } else if entries.iter().any(|e| e.verdict == Verdict::Degenerate) {
        Verdict::Degenerate
    } else if entries.is_empty() {
        Verdict::Inapplicable
    } else {
        Verdict::Match
    }
}

fn exit_for(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Match | Verdict::Inapplicable => EXIT_OK,
        Verdict::Mismatch | Verdict::Degenerate => EXIT_MISMATCH,
    }
}

#[derive(Serialize)]
struct CodeJson<'a> {
    p: u32,
    m: u32,
    alpha: u32,
    modulus: String,
    #[serde(flatten)]
    measured: &'a WeightDistribution,
    predicted: Option<WeightTable>,
    verdict: Verdict,
    entries: Vec<ReportEntry>,
}

fn cmd_code(field: &ExtField, alpha: u32, format: CodeFormat) -> Result<Outcome, CliError> {
    check_alpha(field, alpha)?;
    let params = field.params();
    let data = code_data(field, alpha);
    // The closed forms need `α ≠ 0` and `m ≥ 2`; elsewhere the code is only measured.
    let (predicted, entries) = if alpha != 0 && params.m() >= 2 {
        (
            Some(predict_weight_distribution(params, alpha)?),
            check_weight_distribution(params, alpha, &data.distribution)?,
        )
    } else {
        (None, Vec::new())
    };
    let verdict = overall(&entries);
    let text = match format {
        CodeFormat::Json => json(&CodeJson {
            p: field.p(),
            m: field.m(),
            alpha,
            modulus: format_modulus(field.modulus()),
            measured: &data.distribution,
            predicted,
            verdict,
            entries,
        })?,
        CodeFormat::Csv => {
            let mut text = String::from("weight,frequency\n");
            for (w, a) in &data.distribution.weights {
                text.push_str(&format!("{w},{a}\n"));
            }
            text
        }
        CodeFormat::Matrix => matrix_text(&generator_matrix(field, &data.set)),
    };
    Ok(Outcome { text, code: exit_for(verdict) })
}

fn matrix_text(rows: &[Vec<u32>]) -> String {
    let mut text = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    text
}

/// The LFVC verdict with the bound it was read from.
#[derive(Serialize)]
struct LfvcJson<'a> {
    verdict: Option<Verdict>,
    #[serde(flatten)]
    bound: &'a BoundReport,
}

#[derive(Serialize)]
struct CccVerdicts<'a> {
    theorem2_printed: Option<Verdict>,
    theorem2_derived: Option<Verdict>,
    prop1_residual: Option<i64>,
    lfvc: Option<LfvcJson<'a>>,
}

#[derive(Serialize)]
struct CccJson<'a> {
    p: u32,
    m: u32,
    alpha: u32,
    gamma: u32,
    modulus: String,
    #[serde(flatten)]
    measured: &'a CccParameters,
    degenerate: bool,
    printed: Option<&'a CompositionPrediction>,
    derived: Option<&'a CompositionPrediction>,
    verdicts: CccVerdicts<'a>,
    entries: &'a [ReportEntry],
}

/// Exit 2 when no composition variant holds in full, when an applicable LFVC
/// check fails, or when the point is degenerate. The square-sum identity is
/// reported but does not gate.
fn ccc_exit(check: &SubcodeCheck) -> i32 {
    let entries = check.entries();
    if entries.is_empty() {
        return EXIT_OK;
    }
    let variant_holds = |claims: [Claim; 3]| {
        entries
            .iter()
            .filter(|e| claims.contains(&e.claim))
            .all(|e| matches!(e.verdict, Verdict::Match | Verdict::Inapplicable))
    };
    let theorem = variant_holds([Claim::CompositionPrinted, Claim::PartitionPrinted, Claim::DistancePrinted])
        || variant_holds([Claim::CompositionDerived, Claim::PartitionDerived, Claim::DistanceDerived]);
    let lfvc = check.verdict(Claim::LfvcInapplicable) != Some(Verdict::Mismatch);
    let degenerate = entries.iter().any(|e| e.verdict == Verdict::Degenerate);
    if theorem && lfvc && !degenerate {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn cmd_ccc(field: &ExtField, alpha: u32, gamma: u32, format: TextFormat) -> Result<Outcome, CliError> {
    check_alpha(field, alpha)?;
    if gamma >= field.p() {
        return Err(CliError::usage(format!("gamma must be in 0..{} (got {gamma})", field.p())));
    }
    let params = field.params();
    let data = code_data(field, alpha);
    let degenerate = alpha != 0 && params.m() >= 2 && predict_weight_distribution(params, alpha)?.degenerate;
    let check = check_subcode(field, &data.table, alpha, gamma, degenerate)?;
    let code = ccc_exit(&check);
    let verdicts = CccVerdicts {
        theorem2_printed: check.verdict(Claim::CompositionPrinted),
        theorem2_derived: check.verdict(Claim::CompositionDerived),
        prop1_residual: check.square_sum_residual(),
        lfvc: check.lfvc.as_ref().map(|bound| LfvcJson { verdict: check.verdict(Claim::LfvcInapplicable), bound }),
    };
    let text = match format {
        TextFormat::Json => json(&CccJson {
            p: field.p(),
            m: field.m(),
            alpha: check.alpha,
            gamma: check.gamma,
            modulus: format_modulus(field.modulus()),
            measured: &check.measured,
            degenerate: check.degenerate,
            printed: check.printed.as_ref(),
            derived: check.derived.as_ref(),
            verdicts,
            entries: check.entries(),
        })?,
        TextFormat::Text => ccc_text(&check, &verdicts),
    };
    Ok(Outcome { text, code })
}

fn ccc_text(check: &SubcodeCheck, verdicts: &CccVerdicts) -> String {
    let ccc = &check.measured;
    let opt = |v: Option<u64>| v.map_or_else(|| "undefined".to_string(), |x| x.to_string());
    let omega = ccc.omega.as_ref().map_or_else(
        || "none".to_string(),
        |w| format!("({})", w.0.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
    );
    let mut text = format!(
        "n = {}\nM = {}\nd = {}\nomega = {}\nconstant = {}\n",
        ccc.n,
        ccc.size,
        opt(ccc.d),
        omega,
        ccc.constant
    );
    let name = |v: Option<Verdict>| match v {
        Some(Verdict::Match) => "match",
        Some(Verdict::Mismatch) => "mismatch",
        Some(Verdict::Degenerate) => "degenerate",
        Some(Verdict::Inapplicable) => "inapplicable",
        None => "no closed-form claim",
    };
    text.push_str(&format!("printed = {}\n", name(verdicts.theorem2_printed)));
    text.push_str(&format!("derived = {}\n", name(verdicts.theorem2_derived)));
    if let Some(r) = verdicts.prop1_residual {
        text.push_str(&format!("square-sum residual = {r}\n"));
    }
    if let Some(bound) = &check.lfvc {
        let status = if bound.applicable { "applicable" } else { "inapplicable" };
        text.push_str(&format!("lfvc = {status} (denominator {})\n", bound.denominator));
    }
    text
}

fn cmd_verify(grid: &str, modulus: Option<&str>, limit: u64) -> Result<Outcome, CliError> {
    let points = grid.parse::<GridSpec>()?.expand(limit)?;
    let coeffs = match (modulus, points.as_slice()) {
        (None, _) => None,
        (Some(text), [point]) => modulus_coeffs(Some(text), point.p, point.m)?,
        (Some(_), _) => return Err(CliError::usage("--modulus needs a grid with exactly one field")),
    };
    let report: Report = verify(&points, coeffs.as_deref(), limit)?;
    let code = if report.summary.passed { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { text: json(&report)?, code })
}

fn cmd_export(field: &ExtField, alpha: u32, kind: ExportKind) -> Result<Outcome, CliError> {
    check_alpha(field, alpha)?;
    let set = ccc_forge_core::codes::DefiningSet::new(field, alpha);
    let text = match kind {
        ExportKind::GeneratorMatrix => matrix_text(&generator_matrix(field, &set)),
        ExportKind::DefiningSet => set.indices().iter().map(|i| format!("{i}\n")).collect(),
    };
    Ok(Outcome::ok(text))
}
