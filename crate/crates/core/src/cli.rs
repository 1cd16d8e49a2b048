//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a disagreement, 2 for
//! usage errors and precondition violations. Everything goes to standard
//! output (and to `--out` when given); diagnostics go to standard error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{self, check_size_cap, enumerate_paths, SizeCapExceeded};
use crate::families::{
    closed_form_series, recurrence_series, Family, FamilyError, FamilySpec, Method, SequenceMetadata,
    SequenceResult,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISAGREE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    SizeCap(#[from] SizeCapExceeded),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Parser)]
#[command(name = "colored-paths", version, about = "Colored Catalan, Schröder and Motzkin path sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one counting sequence.
    Series(SeriesArgs),
    /// List or count uncolored paths of one size.
    Enumerate(EnumerateArgs),
    /// Print one sequence per (m, n) cell of a color grid.
    Table(TableArgs),
    /// Cross-check closed form, recurrence and brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Recurrence,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Also write the output to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow enumeration sizes above the per-family cap.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    #[arg(long)]
    pub family: Family,
    /// Colors on the down step.
    #[arg(short = 'm', default_value_t = 1)]
    pub m: u32,
    /// Colors on the level step.
    #[arg(short = 'n', default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
    pub method: MethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub size: usize,
    /// Print every path instead of the count.
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(short = 'm', default_value = "1..1")]
    pub m: ColorRange,
    #[arg(short = 'n', default_value = "1..1")]
    pub n: ColorRange,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
    pub method: MethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Comma-separated families; all four by default.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<Family>,
    #[arg(short = 'm', default_value = "1..3")]
    pub m: ColorRange,
    #[arg(short = 'n', default_value = "1..3")]
    pub n: ColorRange,
    #[arg(long, default_value_t = 8)]
    pub max_size: usize,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Test hook: corrupt one recurrence value to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Inclusive range of color counts, written `a..b`, `a..=b` or `a`.
/// `a > b` is an empty range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorRange {
    pub start: u32,
    pub end: u32,
}

impl ColorRange {
    pub fn values(&self) -> impl Iterator<Item = u32> + Clone {
        self.start..=self.end
    }
}

impl FromStr for ColorRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim().parse::<u32>().map_err(|_| format!("invalid color count `{t}` in range `{s}`"))
        };
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(ColorRange { start: num(a)?, end: num(b)? })
            }
            None => {
                let v = num(s)?;
                Ok(ColorRange { start: v, end: v })
            }
        }
    }
}

impl fmt::Display for ColorRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub spec: FamilySpec,
    pub method: Method,
    pub order: usize,
    pub coefficients: Vec<String>,
    pub metadata: SequenceMetadata,
}

impl From<&SequenceResult> for OutputRecord {
    fn from(r: &SequenceResult) -> Self {
        OutputRecord {
            spec: r.spec,
            method: r.method,
            order: r.order(),
            coefficients: r.coefficients.iter().map(BigUint::to_string).collect(),
            metadata: r.metadata,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCell {
    pub spec: FamilySpec,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
    pub recurrence: String,
    pub oracle: String,
    pub agree: bool,
}

impl fmt::Display for VerificationCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} size {}: closed_form={} recurrence={} oracle={}",
            self.spec,
            self.size,
            self.closed_form.as_deref().unwrap_or("-"),
            self.recurrence,
            self.oracle
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cells: Vec<VerificationCell>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&VerificationCell> {
        self.cells.iter().find(|c| !c.agree)
    }
}

/// One sequence by the requested method.
pub fn compute_sequence(spec: &FamilySpec, method: Method, order: usize) -> Result<SequenceResult, CliError> {
    match method {
        Method::ClosedForm => Ok(closed_form_series(spec, order)?),
        Method::Recurrence => Ok(recurrence_series(spec, order)),
        Method::Oracle => Ok(enumeration::oracle_series(spec, order)),
    }
}

/// Runs all three methods over every (family, m, n) cell and sizes
/// `0..=max_size`. Cells are sorted by family, m, n, size.
///
/// With `inject_fault`, the recurrence value at `max_size` of the first cell
/// is incremented.
pub fn verify(
    families: &[Family],
    m: ColorRange,
    n: ColorRange,
    max_size: usize,
    force: bool,
    inject_fault: bool,
) -> Result<VerificationReport, CliError> {
    for &family in families {
        check_size_cap(family, max_size, force)?;
    }
    let mut specs: Vec<FamilySpec> = families
        .iter()
        .flat_map(|&f| m.values().flat_map(move |mv| n.values().map(move |nv| FamilySpec::new(f, mv, nv))))
        .collect();
    specs.sort();
    specs.dedup();

    let groups: Vec<Vec<VerificationCell>> = specs
        .par_iter()
        .map(|spec| -> Result<Vec<VerificationCell>, CliError> {
            let closed = if spec.has_closed_form() {
                Some(closed_form_series(spec, max_size)?.coefficients)
            } else {
                None
            };
            let recurrence = recurrence_series(spec, max_size).coefficients;
            let oracle = enumeration::oracle_series(spec, max_size).coefficients;
            Ok((0..=max_size)
                .map(|size| {
                    let cf = closed.as_ref().map(|c| &c[size]);
                    let agree = recurrence[size] == oracle[size] && cf.is_none_or(|c| *c == oracle[size]);
                    VerificationCell {
                        spec: *spec,
                        size,
                        closed_form: cf.map(BigUint::to_string),
                        recurrence: recurrence[size].to_string(),
                        oracle: oracle[size].to_string(),
                        agree,
                    }
                })
                .collect())
        })
        .collect::<Result<_, _>>()?;

    let mut cells: Vec<VerificationCell> = groups.into_iter().flatten().collect();
    if inject_fault {
        if let Some(cell) = cells.iter_mut().find(|c| c.size == max_size) {
            let bumped = cell.recurrence.parse::<BigUint>().expect("decimal") + 1u32;
            cell.recurrence = bumped.to_string();
            cell.agree = false;
        }
    }
    let overall = cells.iter().all(|c| c.agree);
    Ok(VerificationReport { cells, overall })
}

fn csv_bytes<F>(fill: F) -> Result<Vec<u8>, CliError>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<(), csv::Error>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    fill(&mut w)?;
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

pub fn render_records(records: &[OutputRecord], format: Format, single: bool) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = if single && records.len() == 1 {
                serde_json::to_vec_pretty(&records[0])?
            } else {
                serde_json::to_vec_pretty(records)?
            };
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => csv_bytes(|w| {
            let width = records.iter().map(|r| r.coefficients.len()).max().unwrap_or(0);
            let mut header: Vec<String> = ["family", "m", "n", "method"].iter().map(|s| s.to_string()).collect();
            header.extend((0..width).map(|j| format!("c{j}")));
            w.write_record(&header)?;
            for r in records {
                let mut row =
                    vec![r.spec.family.to_string(), r.spec.m.to_string(), r.spec.n.to_string(), r.method.to_string()];
                row.extend(r.coefficients.iter().cloned());
                w.write_record(&row)?;
            }
            Ok(())
        }),
        Format::Plain => {
            let mut out = String::new();
            for r in records {
                if !single {
                    out.push_str(&format!("m={} n={}: ", r.spec.m, r.spec.n));
                }
                out.push_str(&r.coefficients.join(" "));
                out.push('\n');
            }
            Ok(out.into_bytes())
        }
    }
}

pub fn render_report(report: &VerificationReport, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => csv_bytes(|w| {
            w.write_record(["family", "m", "n", "size", "closed_form", "recurrence", "oracle", "agree"])?;
            for c in &report.cells {
                w.write_record([
                    c.spec.family.to_string(),
                    c.spec.m.to_string(),
                    c.spec.n.to_string(),
                    c.size.to_string(),
                    c.closed_form.clone().unwrap_or_default(),
                    c.recurrence.clone(),
                    c.oracle.clone(),
                    c.agree.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Plain => {
            let mut out = String::new();
            for c in &report.cells {
                out.push_str(&format!("{} {}\n", if c.agree { "ok  " } else { "FAIL" }, c));
            }
            let failed = report.cells.iter().filter(|c| !c.agree).count();
            out.push_str(&format!(
                "overall: {} ({} cells, {} disagreements)\n",
                if report.overall { "agree" } else { "DISAGREE" },
                report.cells.len(),
                failed
            ));
            Ok(out.into_bytes())
        }
    }
}

fn render_enumeration(args: &EnumerateArgs) -> Result<Vec<u8>, CliError> {
    let family = args.family;
    let paths: Vec<String> = enumerate_paths(family, args.size).map(|p| p.to_string()).collect();
    let count = paths.len();
    match args.output.format {
        Format::Plain => {
            let mut out = String::new();
            if args.list {
                for p in &paths {
                    out.push_str(p);
                    out.push('\n');
                }
            } else {
                out.push_str(&format!("{count}\n"));
            }
            Ok(out.into_bytes())
        }
        Format::Json => {
            let mut value = serde_json::json!({
                "family": family,
                "size": args.size,
                "count": count.to_string(),
            });
            if args.list {
                value["paths"] = serde_json::json!(paths);
            }
            let mut out = serde_json::to_vec_pretty(&value)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => csv_bytes(|w| {
            if args.list {
                w.write_record(["path"])?;
                for p in &paths {
                    w.write_record([p])?;
                }
            } else {
                w.write_record(["family", "size", "count"])?;
                w.write_record([family.to_string(), args.size.to_string(), count.to_string()])?;
            }
            Ok(())
        }),
    }
}

fn emit(bytes: &[u8], out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    stdout.write_all(bytes)?;
    stdout.flush()?;
    if let Some(path) = out {
        fs::write(path, bytes)?;
    }
    Ok(())
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Series(a) => {
            let spec = FamilySpec::new(a.family, a.m, a.n);
            let result = compute_sequence(&spec, a.method.into(), a.order)?;
            if result.metadata.n_ignored && a.n != 1 {
                writeln!(stderr, "note: n is ignored for {}", a.family)?;
            }
            let bytes = render_records(&[OutputRecord::from(&result)], a.output.format, true)?;
            emit(&bytes, &a.output.out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate(a) => {
            check_size_cap(a.family, a.size, a.output.force)?;
            let bytes = render_enumeration(&a)?;
            emit(&bytes, &a.output.out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Table(a) => {
            let method: Method = a.method.into();
            let mut records = Vec::new();
            for m in a.m.values() {
                for n in a.n.values() {
                    let spec = FamilySpec::new(a.family, m, n);
                    records.push(OutputRecord::from(&compute_sequence(&spec, method, a.order)?));
                }
            }
            let bytes = render_records(&records, a.output.format, false)?;
            emit(&bytes, &a.output.out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => {
            let families = if a.families.is_empty() { Family::ALL.to_vec() } else { a.families.clone() };
            let report = verify(&families, a.m, a.n, a.max_size, a.output.force, a.inject_fault)?;
            let bytes = render_report(&report, a.output.format)?;
            emit(&bytes, &a.output.out, stdout)?;
            match report.first_failure() {
                Some(cell) => {
                    writeln!(stderr, "first disagreement: {cell}")?;
                    Ok(EXIT_DISAGREE)
                }
                None => Ok(EXIT_OK),
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}
