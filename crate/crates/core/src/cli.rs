//! Command-line front end.
//!
//! Exit codes: 0 success, 1 identity failure, 2 usage error, 3 cap or
//! resource error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinat::{enumerate_01v_in, enumerate_part_capped, enumerate_perm_capped, enumerate_signed_partitions_capped};
use crate::error::{Error, Result};
use crate::matrices::det_closed_form;
use crate::stirling::{Kind, StirlingTable};
use crate::tableaux::{enumerate_t_capped, enumerate_td_capped, BTableau, DEFAULT_CAP};
use crate::verify::{self, parse_range, Config, Suite};
use crate::weights::{builtin, catalog, WeightPair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vstirling", version, about = "Dually weighted Stirling numbers: tables, identity checks and enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    First,
    Second,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::First => Kind::First,
            KindArg::Second => Kind::Second,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Object {
    #[value(name = "T")]
    T,
    #[value(name = "Td")]
    Td,
    ZeroOne,
    Partitions,
    Permutations,
    SignedPartitions,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the triangle 0 <= k <= n <= nmax.
    Table {
        #[arg(long, value_enum, default_value = "second")]
        kind: KindArg,
        /// `builtin:NAME` or `@spec.json`.
        #[arg(long, default_value = "builtin:classical")]
        weights: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        nmax: i64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Check identities; `--weights catalog` runs every catalog weight pair.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "catalog")]
        weights: String,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        nmax: i64,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha_range: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        beta_range: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Also list skipped checks.
        #[arg(long)]
        verbose: bool,
    },
    /// Print every object of a family followed by `count=N`.
    Enumerate {
        #[arg(long, value_enum)]
        object: Object,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        beta: i64,
        /// Shape for `zero-one`, e.g. `[3,1,1;2,4,4]`.
        #[arg(long)]
        shape: Option<String>,
        /// Rows of the rectangle for `zero-one`; defaults to the column sum plus 2.
        #[arg(long)]
        height: Option<i64>,
        #[arg(long, default_value = "builtin:classical")]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Determinant of the Hankel-like matrix against its closed form.
    Det {
        #[arg(long, value_enum, default_value = "second")]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, default_value = "builtin:classical")]
        weights: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        beta: i64,
    },
}

/// Parses `builtin:NAME`, a bare builtin name, or `@path` to a JSON spec.
pub fn load_weights(arg: &str) -> Result<WeightPair> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidWeightSpec(format!("{path}: {e}")))?;
        return WeightPair::from_json(&text);
    }
    builtin(arg.strip_prefix("builtin:").unwrap_or(arg))
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::EnumerationCapExceeded { .. } | Error::NonCombinatorialWeights(_) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn check_nmax(nmax: i64) -> std::result::Result<(), Failure> {
    if nmax < 0 {
        return Err(usage(format!("--nmax must be nonnegative, got {nmax}")));
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match command {
        Command::Table { kind, weights, alpha, beta, nmax, format } => {
            check_nmax(nmax)?;
            let weights = load_weights(&weights)?;
            cmd_table(kind.into(), &weights, alpha, beta, nmax, format, out)
        }
        Command::Verify { suite, weights, nmax, alpha_range, beta_range, format, verbose } => {
            check_nmax(nmax)?;
            let suite: Suite = suite.parse()?;
            let cfg = Config { nmax, alphas: parse_range(&alpha_range)?, betas: parse_range(&beta_range)? };
            let pairs = if weights == "catalog" { catalog() } else { vec![load_weights(&weights)?] };
            cmd_verify(suite, &pairs, &cfg, format, verbose, out)
        }
        Command::Enumerate { object, r, s, n, k, alpha, beta, shape, height, weights, cap } => {
            let need = |v: Option<i64>, name: &str| v.ok_or_else(|| usage(format!("--{name} is required for this object")));
            let lines: Vec<String> = match object {
                Object::T | Object::Td => {
                    let (r, s) = (need(r, "r")?, need(s, "s")?);
                    let list = if matches!(object, Object::T) {
                        enumerate_t_capped(alpha, beta, r, s, cap)?
                    } else {
                        enumerate_td_capped(alpha, beta, r, s, cap)?
                    };
                    list.iter().map(BTableau::to_string).collect()
                }
                Object::ZeroOne => {
                    let shape: BTableau = shape.ok_or_else(|| usage("--shape is required for zero-one"))?.parse()?;
                    let height = height.unwrap_or_else(|| shape.column_sum().map_or(2, |c| c + 2));
                    let weights = load_weights(&weights)?;
                    enumerate_01v_in(&shape, height, &weights, cap)?.iter().map(|t| t.to_string()).collect()
                }
                Object::Partitions | Object::Permutations => {
                    let (n, k) = (need(n, "n")?, need(k, "k")?);
                    let weights = load_weights(&weights)?;
                    if !weights.w.is_one() {
                        return Err(usage("colored partitions and permutations need w = 1"));
                    }
                    if matches!(object, Object::Partitions) {
                        enumerate_part_capped(n, k, &weights.v, cap)?.iter().map(|p| p.to_string()).collect()
                    } else {
                        enumerate_perm_capped(n, k, &weights.v, cap)?.iter().map(|p| p.to_string()).collect()
                    }
                }
                Object::SignedPartitions => {
                    let (n, k) = (need(n, "n")?, need(k, "k")?);
                    enumerate_signed_partitions_capped(n, k, cap)?.iter().map(|p| p.to_string()).collect()
                }
            };
            for line in &lines {
                let _ = writeln!(out, "{line}");
            }
            let _ = writeln!(out, "count={}", lines.len());
            Ok(EXIT_OK)
        }
        Command::Det { kind, r, s, weights, alpha, beta } => {
            if r < 0 || s < 0 {
                return Err(usage("--r and --s must be nonnegative"));
            }
            let weights = load_weights(&weights)?;
            let t = StirlingTable::new(weights);
            let d = det_closed_form(&t, kind.into(), r, s, alpha, beta)?;
            let _ = writeln!(out, "{}", d.matrix);
            let _ = writeln!(out, "det={}", d.det);
            let _ = writeln!(out, "formula={}", d.formula);
            let equal = d.equal();
            let _ = writeln!(out, "{}", if equal { "EQUAL" } else { "NOT EQUAL" });
            Ok(if equal { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn cmd_table(
    kind: Kind,
    weights: &WeightPair,
    alpha: i64,
    beta: i64,
    nmax: i64,
    format: TableFormat,
    out: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let t = StirlingTable::new(weights.clone());
    let rows: Vec<Vec<_>> = (0..=nmax)
        .map(|n| (0..=n).map(|k| t.get(kind, alpha, beta, n, k)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    match format {
        TableFormat::Csv => {
            let line: Vec<String> = rows
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect();
            let _ = writeln!(out, "{}", line.join(";"));
        }
        TableFormat::Json => {
            let doc = json!({
                "params": {
                    "kind": kind.to_string(),
                    "weights": weights.label(),
                    "alpha": alpha,
                    "beta": beta,
                    "nmax": nmax,
                },
                "rows": rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        }
        TableFormat::Bfile => {
            let mut lines = Vec::new();
            for (index, v) in rows.iter().flatten().enumerate() {
                let Some(int) = v.as_integer() else {
                    return Err(Failure {
                        code: EXIT_RESOURCE,
                        message: format!("bfile output needs integer entries, found {v}"),
                    });
                };
                lines.push(format!("{index} {int}"));
            }
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: Suite,
    pairs: &[WeightPair],
    cfg: &Config,
    format: ReportFormat,
    verbose: bool,
    out: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let reports: Vec<_> = pairs.iter().map(|w| verify::run(suite, w, cfg)).collect();
    match format {
        ReportFormat::Text => {
            for r in &reports {
                let _ = write!(out, "{}", r.render_text(verbose));
            }
        }
        ReportFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
        }
    }
    let failed = reports.iter().any(|r| !r.all_passed());
    if reports.len() > 1 {
        let bad: Vec<&str> = reports.iter().filter(|r| !r.all_passed()).map(|r| r.weights.as_str()).collect();
        if format == ReportFormat::Text {
            let _ = writeln!(out, "weights with failures: {}", if bad.is_empty() { "none".into() } else { bad.join(", ") });
        }
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}
