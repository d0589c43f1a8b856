//! Argument handling and dispatch for the `wqo-meter` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wqo_meter::engine::{self, EngineError, InvariantReport, UnsupportedReason};
use wqo_meter::oracle::{self, FinitePoset, OracleError, Verdict};
use wqo_meter::rewrite::{self, RewriteError, RewriteTrace, Strategy};
use wqo_meter::{parse, WqoExpr};

pub const SEED_ENV: &str = "WQO_METER_SEED";

pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const HYPOTHESIS: i32 = 3;
    pub const UNSUPPORTED: i32 = 4;
    pub const TOO_LARGE: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "wqo-meter",
    version,
    about = "Ordinal invariants of well-quasi-orders"
)]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Longest word or multiset materialized by the oracle.
    #[arg(long, global = true)]
    pub word_len_cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal order type, height and width.
    Invariants { expr: String },
    /// Normal form of an elementary expression.
    Normalize {
        expr: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Innermost)]
        strategy: StrategyArg,
    },
    /// Bounds for the powerset of an expression.
    Bounds { expr: String },
    /// Weakened maximal order type of an elementary expression.
    Weakmot { expr: String },
    /// Brute-force invariants of a finite expression or poset file.
    Oracle {
        #[arg(required_unless_present = "poset", conflicts_with = "poset")]
        expr: Option<String>,
        /// JSON file `{"n": .., "leq": [[i, j], ..]}`.
        #[arg(long)]
        poset: Option<PathBuf>,
    },
    /// Engine values against brute force.
    Check {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        expr: Option<String>,
        /// Check this many seeded random finite expressions.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Isomorphism of two finite expressions up to equivalence.
    Iso { left: String, right: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Innermost,
    Outermost,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Innermost => Strategy::LeftmostInnermost,
            StrategyArg::Outermost => Strategy::LeftmostOutermost,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match &e {
            EngineError::Precondition(_)
            | EngineError::NotElementary(_)
            | EngineError::Rewrite(RewriteError::NotElementary(_)) => exit::HYPOTHESIS,
            _ => exit::UNSUPPORTED,
        };
        Failure::new(code, e)
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match &e {
            OracleError::TooLarge { .. } => exit::TOO_LARGE,
            OracleError::Json(_) => exit::PARSE,
            _ => exit::UNSUPPORTED,
        };
        Failure::new(code, e)
    }
}

/// Runs with the seed override read from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(SEED_ENV).ok(), out, err)
}

/// Runs with an explicit value for the seed override.
pub fn run_with_env<I, T>(
    args: I,
    env_seed: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                exit::PARSE
            } else {
                let _ = write!(out, "{text}");
                exit::OK
            };
        }
    };
    if let Some(s) = env_seed {
        match s.trim().parse() {
            Ok(seed) => cli.seed = seed,
            Err(_) => {
                let _ = writeln!(err, "error: {SEED_ENV} is not an unsigned integer: {s}");
                return exit::PARSE;
            }
        }
    }
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn expr(text: &str) -> Result<WqoExpr, Failure> {
    parse(text).map_err(|e| Failure::new(exit::PARSE, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::new(exit::UNSUPPORTED, e))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Invariants { expr: text } => {
            let report = engine::invariants(&expr(text)?)?;
            report_out(cli, out, &report)
        }
        Command::Bounds { expr: text } => {
            let report = engine::pf_bounds(&expr(text)?)?;
            report_out(cli, out, &report)
        }
        Command::Normalize {
            expr: text,
            trace,
            strategy,
        } => {
            let e = expr(text)?;
            let (nf, steps) = rewrite::normalize_with(&e, (*strategy).into())
                .map_err(|r| Failure::from(EngineError::from(r)))?;
            if cli.json {
                let mut v = json!({ "input": e, "normal_form": nf });
                if *trace {
                    v["trace"] = serde_json::to_value(&steps).expect("traces serialize");
                }
                emit(out, &pretty(&v))?;
            } else {
                emit(out, &nf.to_string())?;
                if *trace {
                    emit(out, &trace_text(&steps))?;
                }
            }
            Ok(exit::OK)
        }
        Command::Weakmot { expr: text } => {
            let e = expr(text)?;
            let (nf, _) = rewrite::normalize_elementary(&e)
                .map_err(|r| Failure::from(EngineError::from(r)))?;
            let value = engine::weak_mot(&nf)?;
            if cli.json {
                emit(out, &pretty(&json!({ "expr": e, "weak_mot": value })))?;
            } else {
                emit(out, &value.to_string())?;
            }
            Ok(exit::OK)
        }
        Command::Oracle { expr: text, poset } => {
            let p = match (text, poset) {
                (_, Some(path)) => {
                    let body = std::fs::read_to_string(path).map_err(|e| {
                        Failure::new(exit::PARSE, format!("{}: {e}", path.display()))
                    })?;
                    FinitePoset::from_json(&body)?
                }
                (Some(text), None) => oracle::build(&expr(text)?, cli.word_len_cap)?,
                (None, None) => unreachable!("clap requires an expression or a poset"),
            };
            let inv = oracle::oracle_invariants(&p)?;
            if cli.json {
                emit(
                    out,
                    &serde_json::to_string_pretty(&inv).expect("serializes"),
                )?;
            } else {
                emit(
                    out,
                    &format!(
                        "size = {}\nclasses = {}\no = {}\nh = {}\nw = {}",
                        inv.size, inv.classes, inv.mot, inv.height, inv.width
                    ),
                )?;
            }
            Ok(exit::OK)
        }
        Command::Check { expr: text, random } => match (text, random) {
            (_, Some(count)) => check_random(cli, out, *count),
            (Some(text), None) => {
                let report = oracle::check_engine(&expr(text)?)?;
                if cli.json {
                    emit(
                        out,
                        &serde_json::to_string_pretty(&report).expect("serializes"),
                    )?;
                } else {
                    emit(out, &check_text(&report))?;
                }
                Ok(if report.passed() {
                    exit::OK
                } else {
                    exit::MISMATCH
                })
            }
            (None, None) => unreachable!("clap requires an expression or --random"),
        },
        Command::Iso { left, right } => {
            let (l, r) = (expr(left)?, expr(right)?);
            let same = oracle::iso(
                &oracle::build(&l, cli.word_len_cap)?,
                &oracle::build(&r, cli.word_len_cap)?,
            )?;
            if cli.json {
                emit(
                    out,
                    &pretty(&json!({ "left": l, "right": r, "isomorphic": same })),
                )?;
            } else {
                emit(out, if same { "isomorphic" } else { "not isomorphic" })?;
            }
            Ok(exit::OK)
        }
    }
}

fn report_out(cli: &Cli, out: &mut dyn Write, report: &InvariantReport) -> Result<i32, Failure> {
    if cli.json {
        emit(out, &report.to_json())?;
    } else {
        emit(out, &report.to_string())?;
    }
    Ok(match report.first_unsupported() {
        None => exit::OK,
        Some(UnsupportedReason::HypothesisNotMet { .. }) => exit::HYPOTHESIS,
        Some(_) => exit::UNSUPPORTED,
    })
}

fn trace_text(trace: &RewriteTrace) -> String {
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let path = if s.path.is_empty() {
                "root".to_string()
            } else {
                s.path
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(".")
            };
            format!(
                "{:>3}. {} at {}: {} => {}",
                i + 1,
                s.rule.name(),
                path,
                s.before,
                s.after
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn check_text(report: &oracle::CheckReport) -> String {
    let mut lines = vec![format!(
        "{} ({} elements, {} classes)",
        report.expr, report.oracle.size, report.oracle.classes
    )];
    for row in &report.rows {
        lines.push(format!(
            "  {:<6} engine {:<24} oracle {:<6} {}",
            row.invariant,
            row.engine,
            row.oracle,
            verdict_name(row.verdict)
        ));
    }
    if let Some(e) = &report.engine_error {
        lines.push(format!("  engine error: {e}"));
    }
    lines.join("\n")
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Match => "match",
        Verdict::Contained => "contained",
        Verdict::Mismatch => "MISMATCH",
        Verdict::Skipped => "skipped",
    }
}

fn check_random(cli: &Cli, out: &mut dyn Write, count: usize) -> Result<i32, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut reports = Vec::with_capacity(count);
    for _ in 0..count {
        let e = oracle::random::random_finite_expr(&mut rng, 4, 300);
        reports.push(oracle::check_engine(&e)?);
    }
    let failures: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    if cli.json {
        let v = json!({
            "seed": cli.seed,
            "count": count,
            "mismatches": failures.len(),
            "reports": reports,
        });
        emit(out, &pretty(&v))?;
    } else {
        for r in &failures {
            emit(out, &check_text(r))?;
        }
        emit(
            out,
            &format!(
                "seed {}: {} checked, {} mismatched",
                cli.seed,
                count,
                failures.len()
            ),
        )?;
    }
    Ok(if failures.is_empty() {
        exit::OK
    } else {
        exit::MISMATCH
    })
}
