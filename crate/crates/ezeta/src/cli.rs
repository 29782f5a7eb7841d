//! Command-line front end.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage or validation error.
//! Results go to `--out` (or stdout); diagnostics and a reproducibility line
//! go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ezeta_core::afe::afe_meansquare_fit;
use ezeta_core::cf::{cf_expand, convergent_gap_check, determinant_identity_holds, lemma1_ratio, MAX_TERMS};
use ezeta_core::divisor::{delta_of, delta_short_interval_sq, delta_summatory_identity, divisor_sieve, integral_delta, r1_of, SHORT_INTERVAL_MIN_U};
use ezeta_core::fit::dyadic_envelope;
use ezeta_core::mean_square::{g_of, ErrorTermTable, MAX_HEIGHT, METHOD_VERSION};
use ezeta_core::summatory::{e_short_interval_sq, moment_fit, theorem2_decomposition, MAX_MOMENT};
use ezeta_core::wilton::{envelope_report, theorem1_ratio, transform_residual, Eta};
use ezeta_core::zeta::ZetaEvalConfig;
use serde_json::{json, Map, Value};

use crate::build::{load_or_build, version_tag, TableSpec};
use crate::cache::CacheHandle;

#[derive(Debug, Parser)]
#[command(name = "ezeta", version, about = "Numerical experiments on the mean-square error term of zeta(1/2+it)")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format (default: csv, or json for cf-expand, lemma1 and theorem2).
    #[arg(long, global = true, value_enum)]
    format: Option<OutFormat>,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cache directory (default: $EZETA_CACHE_DIR, then ./.ezeta-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for table builds (0: one per CPU).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Debug, Args, Clone, Copy)]
struct TableArgs {
    /// Quadrature tolerance of the E-table.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate E(t), int E, int psi |zeta|^2 and |zeta|^2.
    ETable {
        #[arg(long, default_value_t = 1000.0)]
        x_max: f64,
        #[command(flatten)]
        table: TableArgs,
        /// Grid spacing, 1/k for an integer k.
        #[arg(long, default_value_t = 1.0)]
        step: f64,
    },
    /// G(x) and |G(x)|/x^(3/4) at integers.
    GReport {
        #[arg(long, default_value_t = 1e4)]
        x_max: f64,
        #[arg(long, default_value_t = 100)]
        x_min: u64,
        #[arg(long, default_value_t = 1)]
        stride: u64,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Delta(x), its integral and R_1(x) at integers.
    DeltaReport {
        #[arg(long, default_value_t = 1e5)]
        x_max: f64,
        #[arg(long, default_value_t = 1)]
        stride: u64,
    },
    /// int_1^T R(t)^2 at T/16, T/8, ..., T and its power-law fit.
    AfeMeansquare {
        #[arg(long, default_value_t = 4000)]
        t: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Certified continued fraction of e^(pi m), one JSON line per quotient.
    CfExpand {
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// log log a_n / ((n + log m) log(n + log m)) along the expansion of e^(pi m).
    Lemma1 {
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Transformation-formula residual of D(x, eta) for eta = frac(e^(2 pi m)).
    WiltonTransform {
        #[arg(long, default_value_t = 3e4)]
        x_max: f64,
        #[arg(long, default_value_t = 1)]
        m: i64,
        /// Decimal digits of eta.
        #[arg(long, default_value_t = 60)]
        digits: u32,
    },
    /// |D(x, e^(-2 pi m))| against x log x at x = 10^3, 10^4, ...
    Theorem1Ratio {
        #[arg(long, default_value_t = 1e5)]
        x_max: f64,
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long, default_value_t = 0.01)]
        c: f64,
    },
    /// sum E(n) = pi x + int psi |zeta|^2 + G(x) + residual at x = 10^2, 10^3, ...
    Theorem2 {
        #[arg(long, default_value_t = 1e4)]
        x_max: f64,
        #[command(flatten)]
        table: TableArgs,
    },
    /// sum_{n <= x} E(n)^k on a geometric grid over [x_max/20, x_max].
    Moments {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 2e4)]
        x_max: f64,
        #[arg(long, default_value_t = 24)]
        points: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// sum_{T <= n <= 2T} of squared increments of Delta and E over length U.
    ShortInterval {
        #[arg(long, default_value_t = 10_000)]
        t: u64,
        /// Interval lengths; repeat for several.
        #[arg(long, default_values_t = [10u64])]
        u: Vec<u64>,
        /// Extent of the E-table (default 2T + max U).
        #[arg(long)]
        x_max: Option<f64>,
        #[command(flatten)]
        table: TableArgs,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::ETable { .. } => "e-table",
            Command::GReport { .. } => "g-report",
            Command::DeltaReport { .. } => "delta-report",
            Command::AfeMeansquare { .. } => "afe-meansquare",
            Command::CfExpand { .. } => "cf-expand",
            Command::Lemma1 { .. } => "lemma1",
            Command::WiltonTransform { .. } => "wilton-transform",
            Command::Theorem1Ratio { .. } => "theorem1-ratio",
            Command::Theorem2 { .. } => "theorem2",
            Command::Moments { .. } => "moments",
            Command::ShortInterval { .. } => "short-interval",
        }
    }

    fn default_format(&self) -> OutFormat {
        match self {
            Command::CfExpand { .. } | Command::Lemma1 { .. } | Command::Theorem2 { .. } => OutFormat::Json,
            _ => OutFormat::Csv,
        }
    }

    /// Canonical parameter list, used in outputs and the reproducibility line.
    fn params(&self) -> Vec<(&'static str, String)> {
        let f = |v: f64| format!("{v:?}");
        match self {
            Command::ETable { x_max, table, step } => vec![("x_max", f(*x_max)), ("tol", f(table.tol)), ("step", f(*step))],
            Command::GReport {
                x_max,
                x_min,
                stride,
                table,
            } => vec![
                ("x_max", f(*x_max)),
                ("x_min", x_min.to_string()),
                ("stride", stride.to_string()),
                ("tol", f(table.tol)),
            ],
            Command::DeltaReport { x_max, stride } => vec![("x_max", f(*x_max)), ("stride", stride.to_string())],
            Command::AfeMeansquare { t, tol } => vec![("t", t.to_string()), ("tol", f(*tol))],
            Command::CfExpand { m, terms } | Command::Lemma1 { m, terms } => vec![("m", m.to_string()), ("terms", terms.to_string())],
            Command::WiltonTransform { x_max, m, digits } => vec![("x_max", f(*x_max)), ("m", m.to_string()), ("digits", digits.to_string())],
            Command::Theorem1Ratio { x_max, m, c } => vec![("x_max", f(*x_max)), ("m", m.to_string()), ("c", f(*c))],
            Command::Theorem2 { x_max, table } => vec![("x_max", f(*x_max)), ("tol", f(table.tol))],
            Command::Moments { k, x_max, points, table } => vec![
                ("k", k.to_string()),
                ("x_max", f(*x_max)),
                ("points", points.to_string()),
                ("tol", f(table.tol)),
            ],
            Command::ShortInterval { t, u, x_max, table } => vec![
                ("t", t.to_string()),
                ("u", u.iter().map(u64::to_string).collect::<Vec<_>>().join("+")),
                ("x_max", f(x_max.unwrap_or_else(|| short_interval_extent(*t, u)))),
                ("tol", f(table.tol)),
            ],
        }
    }

    /// Checks every parameter before any computation.
    fn validate(&self) -> Result<(), String> {
        match self {
            Command::ETable { x_max, table, step } => {
                check_x_max(*x_max, 1.0)?;
                check_tol(table.tol)?;
                let per = (1.0 / step).round();
                if !(*step > 0.0 && *step <= 1.0) || (per * step - 1.0).abs() > 1e-12 || per > 1024.0 {
                    return Err(format!("--step must be 1/k for an integer 1 <= k <= 1024, got {step}"));
                }
            }
            Command::GReport {
                x_max,
                x_min,
                stride,
                table,
            } => {
                check_x_max(*x_max, 1.0)?;
                check_tol(table.tol)?;
                if *x_min < 1 || *x_min as f64 > *x_max {
                    return Err(format!("--x-min must lie in [1, x_max], got {x_min}"));
                }
                check_stride(*stride)?;
            }
            Command::DeltaReport { x_max, stride } => {
                if !(*x_max >= 2.0 && *x_max <= 1e8) {
                    return Err(format!("--x-max must lie in [2, 1e8], got {x_max}"));
                }
                check_stride(*stride)?;
            }
            Command::AfeMeansquare { t, tol } => {
                if !(16..=1_000_000).contains(t) {
                    return Err(format!("--t must lie in [16, 1e6], got {t}"));
                }
                check_tol(*tol)?;
            }
            Command::CfExpand { m, terms } | Command::Lemma1 { m, terms } => {
                if !(1..=64).contains(m) {
                    return Err(format!("--m must lie in [1, 64], got {m}"));
                }
                let lo = if matches!(self, Command::Lemma1 { .. }) { 2 } else { 1 };
                if *terms < lo || *terms > MAX_TERMS - 1 {
                    return Err(format!("--terms must lie in [{lo}, {}], got {terms}", MAX_TERMS - 1));
                }
            }
            Command::WiltonTransform { x_max, m, digits } => {
                if !(*x_max >= 1e3 && *x_max <= 1e8) {
                    return Err(format!("--x-max must lie in [1e3, 1e8], got {x_max}"));
                }
                if !(1..=16).contains(m) {
                    return Err(format!("--m must lie in [1, 16], got {m}"));
                }
                if !(20..=10_000).contains(digits) {
                    return Err(format!("--digits must lie in [20, 10000], got {digits}"));
                }
            }
            Command::Theorem1Ratio { x_max, m, c } => {
                if !(*x_max >= 1e3 && *x_max <= 1e8) {
                    return Err(format!("--x-max must lie in [1e3, 1e8], got {x_max}"));
                }
                if *m < 1 {
                    return Err(format!("--m must be at least 1, got {m}"));
                }
                if !(*c > 0.0 && c.is_finite()) {
                    return Err(format!("--c must be positive, got {c}"));
                }
            }
            Command::Theorem2 { x_max, table } => {
                check_x_max(*x_max, 100.0)?;
                check_tol(table.tol)?;
            }
            Command::Moments { k, x_max, points, table } => {
                if !(1..=MAX_MOMENT).contains(k) {
                    return Err(format!("--k must lie in [1, {MAX_MOMENT}], got {k}"));
                }
                check_x_max(*x_max, 20.0)?;
                if !(3..=10_000).contains(points) {
                    return Err(format!("--points must lie in [3, 10000], got {points}"));
                }
                check_tol(table.tol)?;
            }
            Command::ShortInterval { t, u, x_max, table } => {
                check_tol(table.tol)?;
                if u.is_empty() {
                    return Err("at least one --u is required".into());
                }
                for &v in u {
                    if v < SHORT_INTERVAL_MIN_U || v as f64 > 0.5 * (*t as f64).sqrt() {
                        return Err(format!("--u must lie in [{SHORT_INTERVAL_MIN_U}, sqrt(T)/2], got {v}"));
                    }
                }
                let need = short_interval_extent(*t, u);
                let ext = x_max.unwrap_or(need);
                check_x_max(ext, 1.0)?;
                if ext < need {
                    return Err(format!("--x-max must be at least 2T + U = {need}, got {ext}"));
                }
            }
        }
        Ok(())
    }

    fn table_spec(&self) -> Option<TableSpec> {
        match self {
            Command::ETable { x_max, table, step } => Some(TableSpec {
                step: *step,
                ..TableSpec::new(*x_max, table.tol)
            }),
            Command::GReport { x_max, table, .. } | Command::Theorem2 { x_max, table } | Command::Moments { x_max, table, .. } => {
                Some(TableSpec::new(*x_max, table.tol))
            }
            Command::ShortInterval { t, u, x_max, table } => Some(TableSpec::new(x_max.unwrap_or_else(|| short_interval_extent(*t, u)), table.tol)),
            _ => None,
        }
    }
}

fn short_interval_extent(t: u64, u: &[u64]) -> f64 {
    (2 * t + u.iter().copied().max().unwrap_or(0)) as f64
}

fn check_x_max(x: f64, lo: f64) -> Result<(), String> {
    if !(x >= lo && x <= MAX_HEIGHT) {
        return Err(format!("--x-max must lie in [{lo}, {MAX_HEIGHT:e}], got {x}"));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<(), String> {
    if !(tol > 0.0 && tol <= 1e-2) {
        return Err(format!("--tol must lie in (0, 1e-2], got {tol}"));
    }
    Ok(())
}

fn check_stride(s: u64) -> Result<(), String> {
    if s == 0 {
        return Err("--stride must be positive".into());
    }
    Ok(())
}

/// One output cell.
#[derive(Debug, Clone, PartialEq)]
enum Cell {
    F(f64),
    I(i64),
    S(String),
    B(bool),
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::F(v) => format!("{v:?}"),
            Cell::I(v) => v.to_string(),
            Cell::S(s) => s.clone(),
            Cell::B(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::F(v) => json!(v),
            Cell::I(v) => json!(v),
            Cell::S(s) => json!(s),
            Cell::B(b) => json!(b),
            Cell::Null => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::F(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::I(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::I(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::I(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::B(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::S(v.to_owned())
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Null, Cell::F)
    }
}

macro_rules! row {
    ($($v:expr),* $(,)?) => { vec![$(Cell::from($v)),*] };
}

/// Tabular result plus an optional flat summary.
#[derive(Debug, Default)]
struct Report {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    summary: Vec<(&'static str, Cell)>,
    /// One JSON object per row instead of a single document.
    json_lines: bool,
}

impl Report {
    fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            ..Self::default()
        }
    }

    fn render(&self, cmd: &str, params: &[(&'static str, String)], format: OutFormat) -> String {
        let mut out = String::new();
        let obj = |row: &[Cell]| -> Value {
            Value::Object(self.header.iter().zip(row).map(|(h, c)| ((*h).to_owned(), c.json())).collect())
        };
        match format {
            OutFormat::Csv => {
                let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "# ezeta {} {cmd} {} method={METHOD_VERSION}", env!("CARGO_PKG_VERSION"), p.join(" "));
                if !self.summary.is_empty() {
                    let s: Vec<String> = self.summary.iter().map(|(k, v)| format!("{k}={}", v.csv())).collect();
                    let _ = writeln!(out, "# summary {}", s.join(" "));
                }
                let _ = writeln!(out, "{}", self.header.join(","));
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(Cell::csv).collect();
                    let _ = writeln!(out, "{}", cells.join(","));
                }
            }
            OutFormat::Json if self.json_lines => {
                for r in &self.rows {
                    let _ = writeln!(out, "{}", obj(r));
                }
            }
            OutFormat::Json => {
                let mut doc = Map::new();
                doc.insert("command".into(), json!(cmd));
                doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
                doc.insert("method".into(), json!(METHOD_VERSION));
                doc.insert("params".into(), Value::Object(params.iter().map(|(k, v)| ((*k).to_owned(), json!(v))).collect()));
                doc.insert(
                    "summary".into(),
                    Value::Object(self.summary.iter().map(|(k, v)| ((*k).to_owned(), v.json())).collect()),
                );
                doc.insert("rows".into(), Value::Array(self.rows.iter().map(|r| obj(r)).collect()));
                out = serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize");
                out.push('\n');
            }
        }
        out
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<ezeta_core::Error> for Failure {
    fn from(e: ezeta_core::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

impl From<crate::build::BuildError> for Failure {
    fn from(e: crate::build::BuildError) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let cmd = cli.command.name();
    let params = cli.command.params();
    let cache = cli
        .command
        .table_spec()
        .map(|_| CacheHandle::resolve(cli.common.cache_dir.as_deref(), version_tag()));
    let result = execute(&cli, cache.as_ref());
    let (hits, misses) = cache.as_ref().map_or((0, 0), CacheHandle::stats);
    let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    eprintln!(
        "ezeta {} method={METHOD_VERSION} cmd={cmd} {} workers={} cache_hits={hits} cache_misses={misses}",
        env!("CARGO_PKG_VERSION"),
        p.join(" "),
        cli.common.workers,
    );
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {cmd} failed: {m}");
            1
        }
    }
}

fn execute(cli: &Cli, cache: Option<&CacheHandle>) -> Result<(), Failure> {
    let command = &cli.command;
    command.validate().map_err(Failure::Usage)?;
    let format = cli.common.format.unwrap_or_else(|| command.default_format());
    let table = match (command.table_spec(), cache) {
        (Some(spec), Some(c)) => Some(load_or_build(c, &spec, cli.common.workers)?.0),
        _ => None,
    };
    let report = compute(command, table.as_ref())?;
    let text = report.render(command.name(), &command.params(), format);
    match &cli.common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Compute(format!("writing {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Compute(format!("writing stdout: {e}")))
        }
    }
}

fn decades(lo: f64, hi: f64) -> Vec<f64> {
    let mut v = Vec::new();
    let mut x = lo;
    while x <= hi {
        v.push(x);
        x *= 10.0;
    }
    v
}

fn sign_changes(v: impl Iterator<Item = f64>) -> usize {
    let mut last = 0.0f64;
    let mut n = 0;
    for x in v {
        if x != 0.0 {
            if last != 0.0 && x.signum() != last.signum() {
                n += 1;
            }
            last = x;
        }
    }
    n
}

fn compute(command: &Command, table: Option<&ErrorTermTable>) -> Result<Report, Failure> {
    let need_table = || table.ok_or_else(|| Failure::Compute("table unavailable".into()));
    match *command {
        Command::ETable { .. } => {
            let t = need_table()?;
            let mut r = Report::new(&["t", "e", "cum_e", "cum_psi_zeta", "zeta_sq"]);
            for i in 0..t.len() {
                r.rows.push(row![
                    t.t()[i],
                    t.e_values()[i],
                    t.cum_e_integral()[i],
                    t.cum_psi_zeta()[i],
                    t.zeta_sq_values()[i]
                ]);
            }
            Ok(r)
        }
        Command::GReport { x_max, x_min, stride, .. } => {
            let t = need_table()?;
            let mut r = Report::new(&["x", "g", "g_over_x34"]);
            let mut sup = (0u64, 0.0f64);
            let mut gs = Vec::new();
            let mut x = x_min;
            while x as f64 <= x_max {
                let g = g_of(x as f64, t)?;
                let ratio = g.abs() / (x as f64).powf(0.75);
                if ratio > sup.1 {
                    sup = (x, ratio);
                }
                gs.push(g);
                r.rows.push(row![x, g, ratio]);
                x += stride;
            }
            r.summary = vec![
                ("sup_ratio", sup.1.into()),
                ("sup_at", sup.0.into()),
                ("sign_changes", sign_changes(gs.into_iter()).into()),
            ];
            Ok(r)
        }
        Command::DeltaReport { x_max, stride } => {
            let d = divisor_sieve(x_max.floor() as u64)?;
            let mut r = Report::new(&["x", "delta", "int_delta", "r1"]);
            let mut r1s = Vec::new();
            let mut x = 1u64;
            while x as f64 <= x_max {
                let xf = x as f64;
                let r1 = r1_of(xf, &d)?;
                r1s.push((xf, r1));
                r.rows.push(row![x, delta_of(xf, &d)?, integral_delta(xf, &d)?, r1]);
                x += stride;
            }
            let window: Vec<(f64, f64)> = r1s.iter().copied().filter(|&(x, _)| x >= 1e3).collect();
            let slope = dyadic_envelope(&window).and_then(|e| e.slope()).map(|f| f.slope).ok();
            r.summary = vec![
                ("r1_envelope_slope", slope.into()),
                ("r1_sign_changes", sign_changes(r1s.iter().map(|p| p.1)).into()),
            ];
            for (name, x) in [("identity_residual_1e2", 100u64), ("identity_residual_1e3", 1000), ("identity_residual_1e4", 10_000)] {
                if x as f64 <= x_max {
                    r.summary.push((name, delta_summatory_identity(x, &d)?.into()));
                }
            }
            Ok(r)
        }
        Command::AfeMeansquare { t, tol } => {
            let d = divisor_sieve((t as f64 / std::f64::consts::TAU).floor().max(1.0) as u64)?;
            let heights: Vec<f64> = (0..5).rev().map(|j| t as f64 / f64::from(1u32 << j)).filter(|&h| h >= 1.0).collect();
            let fit = afe_meansquare_fit(&heights, &d, &ZetaEvalConfig::default(), tol)?;
            let mut r = Report::new(&["t", "integral", "over_sqrt_t"]);
            for (h, v) in fit.heights.iter().zip(&fit.integrals) {
                r.rows.push(row![*h, *v, v / h.sqrt()]);
            }
            r.summary = vec![
                ("slope", fit.slope.slope.into()),
                ("slope_stderr", fit.slope.slope_stderr.into()),
                ("a", fit.a.into()),
                ("a_lower", fit.a_lower.into()),
                ("a_upper", fit.a_upper.into()),
            ];
            Ok(r)
        }
        Command::CfExpand { m, terms } => {
            let e = cf_expand(m, terms)?;
            let mut r = Report::new(&["m", "n", "a_n", "p_n", "q_n"]);
            r.json_lines = true;
            for (n, (a, (p, q))) in e.quotients.iter().zip(&e.convergents).enumerate() {
                r.rows.push(row![m, n, a.to_string().as_str(), p.to_string().as_str(), q.to_string().as_str()]);
            }
            let gap = convergent_gap_check(&e).map(|g| g.all_hold).unwrap_or(false);
            log::info!(
                "cf-expand: {} quotients certified at {} digits; determinant identity {}; gap bound {}",
                e.certified_len,
                e.working_digits,
                determinant_identity_holds(&e),
                gap
            );
            r.summary = vec![
                ("certified", e.certified_len.into()),
                ("working_digits", u64::from(e.working_digits).into()),
                ("determinant_identity", determinant_identity_holds(&e).into()),
                ("gap_bound_holds", gap.into()),
            ];
            Ok(r)
        }
        Command::Lemma1 { m, terms } => {
            let l = lemma1_ratio(m, terms)?;
            let mut r = Report::new(&["n", "ln_a_n", "ratio"]);
            for row in &l.rows {
                r.rows.push(row![row.n, row.ln_a_n, row.ratio]);
            }
            r.summary = vec![
                ("m", m.into()),
                ("n_max", terms.into()),
                ("sup", l.sup.map(|s| s.1).into()),
                ("sup_at", l.sup.map_or(Cell::Null, |s| s.0.into())),
            ];
            Ok(r)
        }
        Command::WiltonTransform { x_max, m, digits } => {
            let d = divisor_sieve(x_max.floor() as u64)?;
            let eta = Eta::frac_exp_two_pi(m, digits)?;
            let mut r = Report::new(&["x", "y", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual", "ratio"]);
            let mut ratios = Vec::new();
            for x in [1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6, 3e6, 1e7, 3e7, 1e8].into_iter().filter(|&x| x <= x_max) {
                let tr = transform_residual(x, &eta, &d)?;
                ratios.push(tr.ratio);
                r.rows.push(row![x, tr.y, tr.lhs.re, tr.lhs.im, tr.rhs.re, tr.rhs.im, tr.residual.norm(), tr.ratio]);
            }
            let mut sorted = ratios.clone();
            sorted.sort_by(f64::total_cmp);
            let median = sorted[sorted.len() / 2];
            r.summary = vec![("eta", eta.to_f64().into()), ("median_ratio", median.into())];
            Ok(r)
        }
        Command::Theorem1Ratio { x_max, m, c } => {
            let d = divisor_sieve(x_max.floor() as u64)?;
            let cf = cf_expand(2 * m, 40)?;
            let mut r = Report::new(&["x", "m", "abs_d", "weak_ratio", "ratio", "envelope", "envelope_n", "within_envelope"]);
            for x in decades(1e3, x_max) {
                let row1 = theorem1_ratio(x, m, &d, c)?;
                let env = envelope_report(x, m, &d, &cf)?;
                r.rows.push(row![x, m, row1.abs_d, row1.weak_ratio, row1.ratio, env.envelope, env.best_n, env.within]);
            }
            Ok(r)
        }
        Command::Theorem2 { x_max, .. } => {
            let t = need_table()?;
            let mut r = Report::new(&[
                "x",
                "sum_e",
                "pi_x",
                "psi_int",
                "g_x",
                "residual",
                "scaled_residual",
                "mean",
                "h_minus_g_scaled",
            ]);
            let mut c = 0.0f64;
            for x in decades(100.0, x_max) {
                let dcmp = theorem2_decomposition(x, t)?;
                c = c.max(dcmp.scaled_residual);
                r.rows.push(row![
                    x,
                    dcmp.sum_e,
                    dcmp.pi_x,
                    dcmp.psi_int,
                    dcmp.g_x,
                    dcmp.residual,
                    dcmp.scaled_residual,
                    dcmp.sum_e / x,
                    dcmp.h_minus_g
                ]);
            }
            r.summary = vec![("residual_constant", c.into())];
            Ok(r)
        }
        Command::Moments { k, x_max, points, .. } => {
            let t = need_table()?;
            let lo = x_max / 20.0;
            let ratio = 20f64.powf(1.0 / (points - 1) as f64);
            let mut grid: Vec<f64> = (0..points).map(|i| (lo * ratio.powi(i as i32)).min(x_max)).collect();
            grid[points - 1] = x_max;
            let s = moment_fit(k, &grid, t)?;
            let p = 1.0 + f64::from(k) / 4.0;
            let mut r = Report::new(&["x", "sum", "fit", "rel_residual"]);
            for ((x, v), res) in s.x_grid.iter().zip(&s.sums).zip(&s.residual_report) {
                r.rows.push(row![*x, *v, s.fitted_coeff * x.powf(p), *res]);
            }
            r.summary = vec![
                ("k", u64::from(k).into()),
                ("fitted_exponent", s.fitted_exponent.into()),
                ("target_exponent", p.into()),
                ("fitted_coeff", s.fitted_coeff.into()),
                ("coeff_lower", s.coeff_lower.into()),
                ("coeff_upper", s.coeff_upper.into()),
            ];
            Ok(r)
        }
        Command::ShortInterval { t, ref u, .. } => {
            let tab = need_table()?;
            let d = divisor_sieve(short_interval_extent(t, u) as u64)?;
            let mut r = Report::new(&["kind", "t", "u", "sum", "main", "ratio"]);
            for &uu in u {
                let s = delta_short_interval_sq(t, uu, &d)?;
                r.rows.push(row!["delta", t, uu, s.sum, s.main, s.ratio]);
            }
            for &uu in u {
                let main = delta_short_interval_sq(t, uu, &d)?.main;
                let e = e_short_interval_sq(t, uu, tab)?;
                r.rows.push(row!["e", t, uu, e, main, e / main]);
            }
            Ok(r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("ezeta").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(parse(&["moments", "--k", "10"]).command.validate().is_err());
        assert!(parse(&["e-table", "--step", "0.3"]).command.validate().is_err());
        assert!(parse(&["theorem2", "--x-max", "50"]).command.validate().is_err());
        assert!(parse(&["short-interval", "--t", "100", "--u", "10"]).command.validate().is_err());
        assert!(parse(&["short-interval", "--t", "10000", "--x-max", "100"]).command.validate().is_err());
        assert!(parse(&["cf-expand", "--terms", "0"]).command.validate().is_err());
        assert!(parse(&["moments"]).command.validate().is_ok());
    }

    #[test]
    fn csv_rendering() {
        let mut r = Report::new(&["a", "b"]);
        r.rows.push(row![1.5, 1e-9]);
        r.rows.push(row![Cell::Null, true]);
        r.summary = vec![("s", 2u64.into())];
        let text = r.render("x", &[("p", "1".into())], OutFormat::Csv);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# ezeta ") && lines[0].contains(" x p=1 "));
        assert_eq!(&lines[1..], ["# summary s=2", "a,b", "1.5,1e-9", ",true"]);
    }

    #[test]
    fn grids() {
        assert_eq!(decades(100.0, 1e4), [100.0, 1000.0, 10000.0]);
        assert_eq!(sign_changes([1.0, 0.0, -2.0, -1.0, 3.0].into_iter()), 2);
    }
}
