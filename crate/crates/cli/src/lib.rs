// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: argument parsing, dispatch and output formats.

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wbrst::arith::{ArithError, Rational};
use wbrst::brst::{BrstError, Complex, Tag};
use wbrst::calculus::{render_by_weight, render_scalar, Style, VAExpr};
use wbrst::catalog::{
    builtin_algebra, builtin_datum, expand_claims, latex_document, latex_text, load_datum, verify_claims, CatalogError,
    Report, RunOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "wbrst", version, about = "Exact verification of BRST constructions for W-algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for the randomized property suites.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Record per-claim wall time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the datum and check d_(0)² = 0.
    Check { datum: String },
    /// Run a claim group.
    Verify {
        datum: String,
        #[arg(long, default_value = "all")]
        claim: String,
    },
    /// Central charge, symbolic or at a level.
    CentralCharge {
        datum: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Free field realization of `L`, `Jhat0:<a>` or `Jhalf:<v>`.
    Ffr {
        datum: String,
        #[arg(long)]
        element: String,
    },
    /// Print a named element of the complex.
    Show {
        datum: String,
        #[arg(long)]
        element: String,
    },
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(m: impl ToString) -> Self {
        CliError { code: EXIT_INPUT, message: m.to_string() }
    }

    fn internal(m: impl ToString) -> Self {
        CliError { code: EXIT_INTERNAL, message: m.to_string() }
    }
}

impl From<BrstError> for CliError {
    fn from(e: BrstError) -> Self {
        match e {
            BrstError::Calculus(_) | BrstError::NotInBarSubalgebra(_) => CliError::internal(e),
            _ => CliError::input(e),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Brst(b) => b.into(),
            other => CliError::input(other),
        }
    }
}

/// A builtin name, or a path to an algebra-spec file.
pub fn resolve_complex(name: &str) -> Result<Complex, CliError> {
    let datum = if builtin_algebra(name).is_some() {
        builtin_datum(name)?
    } else if Path::new(name).is_file() {
        load_datum(Path::new(name))?
    } else {
        return Err(CatalogError::UnknownDatum(name.to_string()).into());
    };
    Ok(Complex::with_default_mode(datum)?)
}

fn emit_report(r: &Report, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    let s = match format {
        Format::Text => r.to_text(),
        Format::Json => r.to_json(),
        Format::Latex => r.to_latex(),
    };
    out.write_all(s.as_bytes())
}

fn emit_element(
    cx: &Complex,
    datum: &str,
    label: &str,
    e: &VAExpr,
    extra: serde_json::Value,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let alg = if extra.get("ffr").is_some() { cx.ffr_target() } else { &cx.ca };
    let text = render_by_weight(alg, e, Style::Text);
    let latex = render_by_weight(alg, e, Style::Latex);
    match format {
        Format::Text => writeln!(out, "{text}"),
        Format::Json => {
            let mut v = json!({"datum": datum, "element": label, "text": text, "latex": latex});
            if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object()) {
                obj.extend(more.clone());
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json value"))
        }
        Format::Latex => out.write_all(
            latex_document(&format!("{}: {}", latex_text(datum), latex_text(label)), &format!("\\[ {latex} \\]\n"))
                .as_bytes(),
        ),
    }
}

fn run_command(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::internal(e);
    let opts = RunOptions { seed: cli.seed, timing: cli.timing };
    match &cli.command {
        Command::Check { datum } | Command::Verify { datum, .. } => {
            let claims = match &cli.command {
                Command::Verify { claim, .. } => expand_claims(claim)?,
                _ => vec!["d2".to_string()],
            };
            let cx = resolve_complex(datum)?;
            let report = verify_claims(&cx, &claims, opts)?;
            emit_report(&report, cli.format, out).map_err(io)?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::CentralCharge { datum, k } => {
            let at = k
                .as_deref()
                .map(|s| s.parse::<Rational>().map_err(|e| CliError::input(format!("--k: {e}"))))
                .transpose()?;
            let cx = resolve_complex(datum)?;
            let (check, c) = cx.central_charge();
            if !check.ok() {
                return Err(CliError::internal(format!(
                    "central charge: formula and λ³ extraction disagree: {}",
                    check.summary().unwrap_or_default()
                )));
            }
            let (text, latex) = match &at {
                None => (render_scalar(&c, Style::Text), render_scalar(&c, Style::Latex)),
                Some(k0) => {
                    let v = cx.central_charge_at(k0).map_err(|e| match e {
                        BrstError::Arith(ArithError::PoleAtPoint(_)) | BrstError::CriticalStructure => {
                            CliError::input(format!("PoleAtPoint: k = {k0} is critical ({e})"))
                        }
                        other => other.into(),
                    })?;
                    (v.to_string(), v.to_string())
                }
            };
            match cli.format {
                Format::Text => writeln!(out, "{text}"),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "datum": cx.datum.name(),
                        "k": at.map(|r| r.to_string()),
                        "central_charge": text,
                    }))
                    .expect("json value")
                ),
                Format::Latex => out.write_all(
                    latex_document(&format!("Central charge: {}", latex_text(cx.datum.name())), &format!("\\[ c = {latex} \\]\n"))
                        .as_bytes(),
                ),
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Ffr { datum, element } => {
            let cx = resolve_complex(datum)?;
            // L is taken through its cohomologous representative -J^{f}/(k+h∨).
            let (image, expected) = match cx.parse_tag(element)? {
                Tag::L => (cx.ffr_l()?, cx.ffr_expected_l()),
                Tag::Jhat0(a) => (cx.ffr(&cx.j_zero(&a)?)?, cx.ffr_expected_j_zero(&a)?),
                Tag::Jhalf(v) => (cx.ffr(&cx.j_half(&v)?)?, cx.ffr_expected_j_half(&v)?),
                _ => return Err(CliError::input(format!("ffr accepts L, Jhat0:<a> or Jhalf:<v>, not `{element}`"))),
            };
            if image != expected {
                return Err(CliError::internal(format!("ffr image of {element} differs from the closed formula")));
            }
            emit_element(&cx, cx.datum.name(), element, &image, json!({"ffr": true}), cli.format, out).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Show { datum, element } => {
            let cx = resolve_complex(datum)?;
            let named = cx.element(&cx.parse_tag(element)?)?;
            emit_element(&cx, cx.datum.name(), element, &named.value, json!({}), cli.format, out).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to `err`.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run_command(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
