//! Command-line front end. `run` is the whole program minus process exit.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::exact::Rational;
use crate::rootsys::{cartan_power_weights, RootSystem};
use crate::sinhprod::{SinhProduct, TermClass};
use crate::tables::{self, Report, Status, SweepConfig, VerdictRecord};
use crate::universal::{universal_x_permuted, CartanPowerIndex};
use crate::vogel::{line_limit, vogel_point, AlgebraId, Permutation, VogelLine, VogelPoint};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    /// Singular point or unbalanced line limit.
    pub const FAILURE: i32 = 3;
}

#[derive(Parser, Debug)]
#[command(
    name = "vogel-qdim",
    version,
    about = "Universal quantum dimensions on Vogel's plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weyl quantum dimension of k·X2 + n·ad for an algebra.
    Qdim {
        #[arg(long)]
        algebra: AlgebraId,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The universal formula at a point, without limits.
    Universal {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, default_value = "abg")]
        perm: Permutation,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The universal formula approached along a Vogel line.
    Limit {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, default_value = "abg")]
        perm: Permutation,
        /// sl, so, sp or exc; defaults to the algebra's own line.
        #[arg(long)]
        line: Option<VogelLine>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Checks the tables against the universal formula.
    Verify {
        /// Comma-separated table numbers (2-8).
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u8, 3, 4, 5, 6, 7, 8])]
        tables: Vec<u8>,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 1)]
        min_rank: u32,
        #[arg(long, default_value_t = 12)]
        max_rank: u32,
        /// Ranks checked from each stable threshold on.
        #[arg(long, default_value_t = 3)]
        stable_ranks: u32,
        /// Also check uncovered exceptional cases against zero.
        #[arg(long)]
        default_zero: bool,
        /// Worker threads; 0 means one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the report here; stdout then gets the summary only.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-case timings in JSON.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lists the table cells.
    Tables {
        #[arg(long, value_delimiter = ',')]
        tables: Vec<u8>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct IndexArgs {
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long, default_value_t = 0)]
    n: u32,
}

impl IndexArgs {
    fn idx(&self) -> CartanPowerIndex {
        CartanPowerIndex::new(self.k, self.n)
    }
}

/// A table algebra, or a raw point given as `p/q` rationals.
#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
struct PointArgs {
    #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma"])]
    algebra: Option<AlgebraId>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["beta", "gamma"])]
    alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha", "gamma"])]
    beta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha", "beta"])]
    gamma: Option<Rational>,
}

impl PointArgs {
    fn resolve(&self) -> Result<(Option<AlgebraId>, VogelPoint), String> {
        match (&self.algebra, &self.alpha, &self.beta, &self.gamma) {
            (Some(id), ..) => Ok((Some(*id), vogel_point(*id).map_err(|e| e.to_string())?)),
            (None, Some(a), Some(b), Some(g)) => Ok((None, VogelPoint::new(a.clone(), b.clone(), g.clone()))),
            _ => Err("give --algebra or all of --alpha, --beta, --gamma".into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Runs the program on `argv` (including the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Qdim { algebra, index, format } => qdim(algebra, index.idx(), format),
        Command::Universal {
            point,
            index,
            perm,
            format,
        } => universal(&point, index.idx(), perm, format),
        Command::Limit {
            point,
            index,
            perm,
            line,
            format,
        } => limit(&point, index.idx(), perm, line, format),
        Command::Verify {
            tables,
            max_k,
            max_n,
            min_rank,
            max_rank,
            stable_ranks,
            default_zero,
            jobs,
            out: path,
            timing,
            format,
        } => {
            let config = SweepConfig {
                tables,
                max_k,
                max_n,
                min_rank,
                max_rank,
                stable_ranks,
                default_zero,
            };
            verify(&config, jobs, path, timing, format)
        }
        Command::Tables { tables, format } => Ok(list_tables(&tables, format)),
    };
    match result {
        Ok(Output { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure { message, code }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

struct Failure {
    message: String,
    code: i32,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: exit::USAGE,
    }
}

fn render(value: Value, text: impl FnOnce(&Value) -> String, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        Format::Text => text(&value),
    }
}

fn dims(p: &SinhProduct) -> Option<Rational> {
    p.dimension_limit().ok()
}

fn qdim(id: AlgebraId, idx: CartanPowerIndex, format: Format) -> Result<Output, Failure> {
    let rs = RootSystem::build(id).map_err(|e| usage(e.to_string()))?;
    let weights = cartan_power_weights(id, idx.k, idx.n).map_err(|e| usage(e.to_string()))?;
    let mut terms = Vec::new();
    let mut dimension = num_bigint::BigInt::from(0);
    for w in &weights {
        terms.push(rs.weyl_qdim(w).map_err(|e| usage(e.to_string()))?);
        dimension += rs.weyl_dim(w).map_err(|e| usage(e.to_string()))?;
    }
    let value = json!({
        "algebra": id,
        "k": idx.k,
        "n": idx.n,
        "weights": weights,
        "qdim": terms,
        "dimension": dimension.to_string(),
    });
    let text = |_: &Value| {
        let mut s = format!("{id} k={} n={}\n", idx.k, idx.n);
        if terms.is_empty() {
            s.push_str("qdim      0 (no such representation)\n");
        }
        for (w, t) in weights.iter().zip(&terms) {
            s.push_str(&format!("weight    {w:?}\nqdim      {t}\n"));
        }
        s + &format!("dimension {dimension}\n")
    };
    Ok(Output {
        text: render(value, text, format),
        code: exit::OK,
    })
}

/// Table comparison for an algebra point, as a verdict record.
fn table_verdict(
    id: AlgebraId,
    idx: CartanPowerIndex,
    perm: Permutation,
    line: Option<VogelLine>,
) -> Option<VerdictRecord> {
    tables::table_entry(id, idx, perm, line).map(|e| tables::verify_case(&e))
}

fn verdict_json(value: &mut Value, record: Option<&VerdictRecord>) -> i32 {
    let Some(r) = record else {
        value["status"] = json!("not-tabulated");
        return exit::OK;
    };
    value["cell"] = json!(r.entry.cell.as_deref().unwrap_or("default-zero"));
    value["expected"] = json!(r.expected);
    value["expected_dimension"] = json!(r.expected_dimension);
    value["status"] = json!(r.status.to_string());
    if let Some(d) = &r.detail {
        value["detail"] = json!(d);
    }
    match r.status {
        Status::Mismatch => exit::MISMATCH,
        Status::LimitCountMismatch => exit::FAILURE,
        Status::Match | Status::SkippedBelowStableRank => exit::OK,
    }
}

fn point_text(v: &Value) -> String {
    let mut s = String::new();
    for key in [
        "algebra",
        "point",
        "perm",
        "line",
        "k",
        "n",
        "classification",
        "value",
        "dimension",
        "notice",
        "cell",
        "expected",
        "expected_dimension",
        "status",
        "detail",
    ] {
        match &v[key] {
            Value::Null => {}
            Value::String(x) => s.push_str(&format!("{key:<19}{x}\n")),
            other => s.push_str(&format!("{key:<19}{other}\n")),
        }
    }
    s
}

fn point_json(id: Option<AlgebraId>, p: &VogelPoint, idx: CartanPowerIndex, perm: Permutation) -> Value {
    let [a, b, g] = p.triple();
    json!({
        "algebra": id,
        "point": [a, b, g],
        "perm": perm,
        "k": idx.k,
        "n": idx.n,
    })
}

fn universal(point: &PointArgs, idx: CartanPowerIndex, perm: Permutation, format: Format) -> Result<Output, Failure> {
    let (id, p) = point.resolve().map_err(usage)?;
    let mut value = point_json(id, &p, idx, perm);
    let mut code = exit::OK;
    match universal_x_permuted(idx, perm, &p) {
        Ok((class, x)) => {
            value["classification"] = json!(class.to_string());
            value["dimension"] = json!(dims(&x));
            value["value"] = serde_json::to_value(&x).expect("json");
            if let Some(id) = id {
                code = verdict_json(&mut value, table_verdict(id, idx, perm, None).as_ref());
            }
        }
        Err(e) => {
            let class = match e {
                crate::error::TermError::Singular { .. } => TermClass::Singular,
                crate::error::TermError::Indeterminate { .. } => TermClass::Indeterminate,
            };
            value["classification"] = json!(class.to_string());
            value["notice"] = json!(e.to_string());
            if class == TermClass::Singular {
                code = exit::FAILURE;
            }
        }
    }
    Ok(Output {
        text: render(value, point_text, format),
        code,
    })
}

fn limit(
    point: &PointArgs,
    idx: CartanPowerIndex,
    perm: Permutation,
    line: Option<VogelLine>,
    format: Format,
) -> Result<Output, Failure> {
    let (id, p) = point.resolve().map_err(usage)?;
    let line = match (line, id) {
        (Some(l), _) => l,
        (None, Some(id)) => id.natural_line(),
        (None, None) => return Err(usage("a raw point needs --line")),
    };
    let x = line_limit(idx, perm, line, &p).map_err(|e| Failure {
        message: format!("{line} line: {e}"),
        code: exit::FAILURE,
    })?;
    let mut value = point_json(id, &p, idx, perm);
    value["line"] = json!(line);
    value["dimension"] = json!(dims(&x));
    value["value"] = serde_json::to_value(&x).expect("json");
    let mut code = exit::OK;
    if let Some(id) = id {
        code = verdict_json(&mut value, table_verdict(id, idx, perm, Some(line)).as_ref());
    }
    Ok(Output {
        text: render(value, point_text, format),
        code,
    })
}

fn report_code(report: &Report) -> i32 {
    if report.has_mismatch() {
        exit::MISMATCH
    } else if report.has_failure() {
        exit::FAILURE
    } else {
        exit::OK
    }
}

fn summary_text(report: &Report) -> String {
    report.to_text().lines().last().unwrap_or_default().to_string() + "\n"
}

fn verify(
    config: &SweepConfig,
    jobs: usize,
    path: Option<PathBuf>,
    timing: bool,
    format: Format,
) -> Result<Output, Failure> {
    if let Some(t) = config.tables.iter().find(|t| !(2..=8).contains(*t)) {
        return Err(usage(format!("no table {t} (tables are 2-8)")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let report = pool.install(|| tables::verify_sweep(config));
    let body = match format {
        Format::Json => report.to_json(timing) + "\n",
        Format::Text => report.to_text(),
    };
    let text = match path {
        Some(path) => {
            fs::write(&path, body).map_err(|e| Failure {
                message: format!("{}: {e}", path.display()),
                code: exit::USAGE,
            })?;
            summary_text(&report)
        }
        None => body,
    };
    Ok(Output {
        text,
        code: report_code(&report),
    })
}

fn list_tables(which: &[u8], format: Format) -> Output {
    let cells: Vec<_> = tables::cells()
        .iter()
        .filter(|c| which.is_empty() || which.contains(&c.table))
        .collect();
    let text = match format {
        Format::Json => {
            let rows: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "table": c.table,
                        "row": c.row,
                        "column": c.column,
                        "algebras": c.algebra_pattern(),
                        "k": c.k.to_string(),
                        "n": c.n.to_string(),
                        "perm": c.perm,
                        "line": c.line,
                        "kind": c.kind(),
                        "expected": c.expected.source,
                        "alternative": c.alternative.as_ref().map(|a| &a.source),
                        "note": c.note,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        Format::Text => cells
            .iter()
            .map(|c| {
                let line = c.line.map(|l| format!(" {l}")).unwrap_or_default();
                format!(
                    "{:<28} {:<22} k={:<4} n={:<4} {}{:<5} {}\n",
                    c.label(),
                    c.algebra_pattern(),
                    c.k,
                    c.n,
                    c.perm,
                    line,
                    c.expected.source
                )
            })
            .collect(),
    };
    Output { text, code: exit::OK }
}
