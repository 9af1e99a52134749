//! `gencomp`: count generalized compositions from the command line.

mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use gencomp_core::catalog::{self, CatalogEntry, EntryStatus};
use gencomp_core::{count_auto, count_table, count_with, invert, parse_spec, BSpec, CountSeries, Error, Method, Oracle};

#[derive(Parser)]
#[command(name = "gencomp", version, about = "Exact counts of generalized (colored) compositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[default]
    Auto,
    Fundamental,
    Recurrence,
    Closed,
    Oracle,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub(crate) enum Scope {
    #[default]
    All,
    Identities,
    Oracle,
    Catalog,
}

#[derive(Subcommand)]
enum Command {
    /// Print c(1..n, b) for one spec.
    Compute {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print c(1..n, b) for several specs side by side.
    Table {
        /// A spec file; either one spec or a JSON array of specs. Repeatable.
        #[arg(long, required = true)]
        spec: Vec<PathBuf>,
        #[arg(long)]
        n: usize,
        /// Recompute every column with the convolution and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the identity, oracle, and catalog checks.
    Verify {
        #[arg(long, value_enum, default_value_t)]
        scope: Scope,
        /// Largest n compared against the oracle.
        #[arg(long, default_value_t = 14)]
        nmax: usize,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recover b_1..b_n from comma-separated counts c_1..c_n.
    Invert {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        terms: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Calibrate and crosscheck the catalog against b-files.
    OeisCheck {
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        /// Ignore stored offsets and calibrate every entry.
        #[arg(long)]
        recalibrate: bool,
        /// Write the catalog with verified offsets to this file.
        #[arg(long)]
        persist: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A failed command: exit code plus a message for stderr.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

/// Exit code for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NoClosedForm(_) | Error::NoRecurrenceForFamily(_) | Error::LimitExceeded { .. } => 3,
        Error::MethodDisagreement { .. } => 1,
        _ => 2,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { spec, n, method, format } => compute(&spec, n, method, format),
        Command::Table { spec, n, verify, format } => table(&spec, n, verify, format),
        Command::Verify {
            scope,
            nmax,
            fixtures,
            depth,
            format,
        } => verify::run(scope, nmax, &fixtures_dir(fixtures), depth, format),
        Command::Invert { terms, format } => invert_cmd(&terms, format),
        Command::OeisCheck {
            fixtures,
            depth,
            recalibrate,
            persist,
            format,
        } => oeis_check(&fixtures_dir(fixtures), depth, recalibrate, persist.as_deref(), format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gencomp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn fixtures_dir(arg: Option<PathBuf>) -> PathBuf {
    arg.unwrap_or_else(|| PathBuf::from(catalog::BUNDLED_FIXTURES))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn read_spec(path: &Path) -> Result<BSpec, Failure> {
    parse_spec(&read(path)?).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn read_specs(path: &Path) -> Result<Vec<BSpec>, Failure> {
    let text = read(path)?;
    let at = |e: Error| Failure::new(2, format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).map_err(|e| {
        at(Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    })?;
    match &value {
        Value::Array(items) => items.iter().map(|v| BSpec::from_json(v).map_err(at)).collect(),
        _ => Ok(vec![BSpec::from_json(&value).map_err(at)?]),
    }
}

pub(crate) fn big_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

pub(crate) fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn compute(spec_path: &Path, n: usize, method: MethodArg, format: Format) -> CmdResult {
    let spec = read_spec(spec_path)?;
    spec.check()?;
    let series: CountSeries = match method {
        MethodArg::Auto => count_auto(&spec, n)?,
        MethodArg::Fundamental => count_with(&spec, n, Method::Fundamental, &Oracle::from_env())?,
        MethodArg::Recurrence => count_with(&spec, n, Method::Recurrence, &Oracle::from_env())?,
        MethodArg::Closed => count_with(&spec, n, Method::Closed, &Oracle::from_env())?,
        MethodArg::Oracle => count_with(&spec, n, Method::Oracle, &Oracle::from_env())?,
    };
    match format {
        Format::Tsv => {
            eprintln!("method: {}", series.method);
            for (j, v) in series.values.iter().enumerate() {
                println!("{}\t{}", j + 1, v);
            }
        }
        Format::Json => print_json(&json!({
            "spec": spec.to_json(),
            "method_used": series.method.as_str(),
            "values": big_strings(&series.values),
        })),
    }
    Ok(())
}

fn table(paths: &[PathBuf], n: usize, verify: bool, format: Format) -> CmdResult {
    let mut specs = Vec::new();
    for p in paths {
        specs.extend(read_specs(p)?);
    }
    let rows = count_table(&specs, n, verify);

    let mut worst: Option<Failure> = None;
    for (spec, row) in specs.iter().zip(&rows) {
        if let Err(e) = row {
            eprintln!("gencomp: {spec}: {e}");
            let code = exit_code(e);
            if worst.as_ref().is_none_or(|w| code > w.code) {
                worst = Some(Failure::new(code, format!("{spec}: {e}")));
            }
        }
    }

    match format {
        Format::Tsv => {
            let header: Vec<String> = specs.iter().map(ToString::to_string).collect();
            println!("n\t{}", header.join("\t"));
            for j in 0..n {
                let cells: Vec<String> = rows
                    .iter()
                    .map(|r| r.as_ref().map_or(String::new(), |s| s.values[j].to_string()))
                    .collect();
                println!("{}\t{}", j + 1, cells.join("\t"));
            }
        }
        Format::Json => {
            let rows: Vec<Value> = specs
                .iter()
                .zip(&rows)
                .map(|(spec, row)| match row {
                    Ok(s) => json!({
                        "spec": spec.to_json(),
                        "method_used": s.method.as_str(),
                        "values": big_strings(&s.values),
                    }),
                    Err(e) => json!({ "spec": spec.to_json(), "error": e.to_string() }),
                })
                .collect();
            print_json(&json!({ "n": n, "verified": verify, "rows": rows }));
        }
    }
    worst.map_or(Ok(()), Err)
}

fn invert_cmd(terms: &[String], format: Format) -> CmdResult {
    let c: Vec<BigInt> = terms
        .iter()
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Failure::new(2, format!("`{t}` is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    let b = match invert(&c) {
        Ok(b) => b,
        Err(e @ Error::NegativeB { .. }) => {
            if let Format::Json = format {
                if let Error::NegativeB { index, value } = &e {
                    print_json(&json!({ "feasible": false, "index": index, "value": value.to_string() }));
                }
            }
            return Err(Failure::new(4, format!("infeasible: {e}")));
        }
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Tsv => {
            for (j, v) in b.iter().enumerate() {
                println!("{}\t{}", j + 1, v);
            }
        }
        Format::Json => print_json(&json!({ "feasible": true, "b": big_strings(&b) })),
    }
    Ok(())
}

pub(crate) fn entry_json(e: &CatalogEntry) -> Value {
    let mut v = e.to_json();
    v["status"] = json!(e.status.label());
    if let EntryStatus::Mismatch(d) = &e.status {
        v["detail"] = json!(d.to_string());
    }
    v
}

pub(crate) fn entry_row(e: &CatalogEntry) -> String {
    let offset = e.offset.map_or("-".to_string(), |o| o.to_string());
    let detail = match &e.status {
        EntryStatus::Mismatch(d) => d.to_string(),
        _ => String::new(),
    };
    format!("{}\t{}\t{}\t{}\t{}", e.oeis_id, e.spec, offset, e.status.label(), detail)
}

pub(crate) fn checked_catalog(fixtures: &Path, depth: usize, recalibrate: bool) -> Result<Vec<CatalogEntry>, Failure> {
    let bfiles = catalog::load_fixtures(fixtures)?;
    let mut entries = catalog::builtin_catalog();
    if recalibrate {
        for e in &mut entries {
            e.offset = None;
        }
    }
    Ok(catalog::check_all(&catalog::attach_fixtures(entries, &bfiles), depth))
}

fn oeis_check(fixtures: &Path, depth: usize, recalibrate: bool, persist: Option<&Path>, format: Format) -> CmdResult {
    let checked = checked_catalog(fixtures, depth, recalibrate)?;
    let count = |label: &str| checked.iter().filter(|e| e.status.label() == label).count();
    let (verified, mismatch, unfixtured) = (count("verified"), count("mismatch"), count("unfixtured"));
    match format {
        Format::Tsv => {
            println!("oeis\tspec\toffset\tstatus\tdetail");
            for e in &checked {
                println!("{}", entry_row(e));
            }
            println!("# verified {verified}, mismatch {mismatch}, unfixtured {unfixtured}");
        }
        Format::Json => print_json(&json!({
            "depth": depth,
            "entries": checked.iter().map(entry_json).collect::<Vec<_>>(),
            "summary": { "verified": verified, "mismatch": mismatch, "unfixtured": unfixtured },
        })),
    }
    if let Some(path) = persist {
        let text = catalog::catalog_to_json(&catalog::persistable(&checked));
        fs::write(path, text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    }
    Ok(())
}
