//! The `qrank` command line.
//!
//! ```text
//! qrank verify <ids>... [--order K] [--finite-bound F] [--n-max N] [--format text|json] [--out PATH]
//! qrank series <expr> [--order K] [--format text|json]
//! qrank ranktable <dyson|m2> <m> <n_max> [--format csv|json]
//! ```
//!
//! Exit codes: 0 everything passed, 1 a verification failed, 2 usage error,
//! 3 the request exceeds what the exact oracles can do.
//!
//! Nothing here is random; identical parameters give identical output apart
//! from the timestamp and the per-step timings.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lambert;
use crate::partitions::{self, RankTable};
use crate::proofcheck::{self, ConjectureOptions, ProofReport, ReportStatus, StepStatus, Witness};
use crate::qproducts;
use crate::series::{rational_string, Series};
use crate::target::{Identity, Inequality, RankKind, Target};

pub const SCHEMA_VERSION: &str = "1.0";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qrank", version, about = "Exact checks of rank-difference inequalities for partitions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run proof pipelines (1.4-1.7), identity checks (T2.2a, T2.2b, T2.3)
    /// or numeric probes (1.8-1.10).
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        /// Series order for the pipelines and identity checks.
        #[arg(long)]
        order: Option<i64>,
        /// Last n of the explicit b(n) > a(n) check.
        #[arg(long)]
        finite_bound: Option<i64>,
        /// Largest partition size for the open-inequality probes.
        #[arg(long, default_value_t = proofcheck::DEFAULT_M2_ORACLE)]
        n_max: u32,
        /// Largest partition size for the oracle step of the pipelines.
        #[arg(long)]
        oracle_n_max: Option<u32>,
        /// Upper end of the threshold sweep.
        #[arg(long, default_value_t = proofcheck::DEFAULT_THRESHOLD_MAX)]
        threshold_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the coefficients of a named series.
    Series {
        expr: String,
        #[arg(long, default_value_t = 20)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump N(s, m, n) or N2(s, m, n) for 0 <= n <= n_max.
    Ranktable {
        kind: String,
        m: u32,
        n_max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OverallStatus {
    Pass,
    Fail,
    NumericEvidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: i64,
    #[serde(with = "rational_string")]
    pub coefficient: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPayload {
    pub expression: String,
    pub valuation: i64,
    pub order: i64,
    pub terms: Vec<Term>,
}

impl SeriesPayload {
    pub fn new(expression: &str, s: &Series) -> Self {
        SeriesPayload {
            expression: expression.to_string(),
            valuation: s.valuation(),
            order: s.order(),
            terms: s
                .terms()
                .map(|(exponent, coefficient)| Term { exponent, coefficient })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePayload {
    pub kind: RankKind,
    pub modulus: u32,
    pub n_max: u32,
    pub oracle: String,
    /// `counts[s][n]` as decimal strings.
    pub counts: Vec<Vec<String>>,
}

impl TablePayload {
    pub fn new(t: &RankTable, oracle: &str) -> Self {
        TablePayload {
            kind: t.kind(),
            modulus: t.modulus(),
            n_max: t.n_max(),
            oracle: oracle.to_string(),
            counts: t
                .rows()
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Payload {
    Proof(ProofReport),
    Series(SeriesPayload),
    RankTable(TablePayload),
}

/// What every `--format json` invocation writes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub timestamp: String,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Vec<Payload>,
    pub overall_status: OverallStatus,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, results: Vec<Payload>) -> Self {
        let overall_status = overall(&results);
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339(),
            command: command.to_string(),
            parameters,
            results,
            overall_status,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall_status {
            OverallStatus::Fail => EXIT_FAIL,
            _ => EXIT_PASS,
        }
    }
}

fn overall(results: &[Payload]) -> OverallStatus {
    let mut status = OverallStatus::Pass;
    for r in results {
        if let Payload::Proof(p) = r {
            match p.status {
                ReportStatus::Fail => return OverallStatus::Fail,
                ReportStatus::NumericEvidence => status = OverallStatus::NumericEvidence,
                ReportStatus::Pass => {}
            }
        }
    }
    status
}

fn usage(msg: impl Into<String>) -> Error {
    Error::UnknownId(msg.into())
}

fn parse_i64s(parts: &[&str], expr: &str) -> Result<Vec<i64>> {
    parts
        .iter()
        .map(|p| p.parse().map_err(|_| usage(expr)))
        .collect()
}

fn parse_rational(s: &str, expr: &str) -> Result<BigRational> {
    rational_string::parse(s).ok_or_else(|| usage(expr))
}

/// Evaluate a series expression.
///
/// | expression | series |
/// |---|---|
/// | `gen1` ... `gen4` | generating function of `1.4` ... `1.7` |
/// | `product@1.4`, `bracket@1.4`, `sum@1.4` | pieces of that function |
/// | `S1@1.4`, `T3@1.6`, ... | Lambert pieces of the split, unsigned |
/// | `oracle@1.4`, `oracle@T2.2a` | rank difference by direct count |
/// | `T2.2a`, `B3@T2.2a` | identity right-hand side, or one of its blocks |
/// | `J_5`, `J_2_10`, `L_3_10` | `J_b`, `J_{a,b}`, `L_{a,b}` |
/// | `theta_5/2_1/2` | `Σ q^{a2 n² + a1 n}` |
pub fn eval_expression(expr: &str, order: i64) -> Result<Series> {
    if let Some(k) = expr.strip_prefix("gen") {
        let id = match k {
            "1" => Inequality::RankZeroOne,
            "2" => Inequality::RankOneTwo,
            "3" => Inequality::M2ZeroOne,
            "4" => Inequality::M2ZeroOneShifted,
            _ => return Err(usage(expr)),
        };
        return proofcheck::rhs_series(id, order);
    }
    if let Some((head, tail)) = expr.split_once('@') {
        if head == "oracle" {
            let diff = match tail.parse::<Target>()? {
                Target::Inequality(i) => i.difference(),
                Target::Identity(i) => i.difference(),
            };
            let n_max = diff.residue as i64 + diff.step as i64 * (order - 1);
            let n_max = u32::try_from(n_max).map_err(|_| usage(expr))?;
            let table = proofcheck::oracle_table(diff.kind, diff.modulus, n_max)?;
            return partitions::rank_diff_series(&table, diff.plus, diff.minus, diff.residue, diff.step);
        }
        if let Ok(identity) = tail.parse::<Identity>() {
            let i: usize = head.strip_prefix('B').and_then(|i| i.parse().ok()).ok_or_else(|| usage(expr))?;
            let blocks = proofcheck::theorem_blocks(identity, order)?;
            return blocks.get(i).cloned().ok_or_else(|| usage(expr));
        }
        let id: Inequality = tail.parse()?;
        return match head {
            "product" => proofcheck::product_part(id)?.expand(order),
            "bracket" => proofcheck::bracket(id, order),
            "sum" => lambert::bilateral_sum_of(id)?.expand_direct(order),
            name => {
                let split = lambert::bilateral_sum(id)?;
                let c = split.component(name).ok_or_else(|| usage(expr))?;
                Ok(lambert::expand_component(c, order)?.scale_int(c.sign as i64))
            }
        };
    }
    if let Ok(identity) = expr.parse::<Identity>() {
        return proofcheck::theorem_rhs(identity, order);
    }
    let parts: Vec<&str> = expr.split('_').collect();
    match parts.as_slice() {
        ["J", rest @ ..] if rest.len() == 1 => qproducts::j(parse_i64s(rest, expr)?[0], order),
        ["J", rest @ ..] if rest.len() == 2 => {
            let v = parse_i64s(rest, expr)?;
            qproducts::jab(v[0], v[1], order)
        }
        ["L", rest @ ..] if rest.len() == 2 => {
            let v = parse_i64s(rest, expr)?;
            qproducts::lab(v[0], v[1], order)
        }
        ["theta", a2, a1] => qproducts::theta_sum(&parse_rational(a2, expr)?, &parse_rational(a1, expr)?, order),
        _ => Err(usage(expr)),
    }
}

/// Rank table from enumeration when feasible, else the Dyson DP.
pub fn rank_table(kind: RankKind, m: u32, n_max: u32) -> Result<(RankTable, &'static str)> {
    match kind {
        RankKind::Dyson if n_max > partitions::DYSON_ENUM_LIMIT => {
            Ok((partitions::rank_table_dp(m, n_max)?, "dp"))
        }
        _ => Ok((partitions::rank_table_enum(kind, m, n_max)?, "enumeration")),
    }
}

pub fn table_csv(t: &RankTable) -> String {
    let mut out = String::from("n");
    for s in 0..t.modulus() {
        write!(out, ",{s}").unwrap();
    }
    out.push('\n');
    for n in 0..=t.n_max() {
        write!(out, "{n}").unwrap();
        for s in 0..t.modulus() {
            write!(out, ",{}", t.count(s, n)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn status_word(s: StepStatus) -> &'static str {
    match s {
        StepStatus::Pass => "pass",
        StepStatus::Fail => "FAIL",
        StepStatus::Skipped => "skip",
    }
}

pub fn report_text(r: &ProofReport) -> String {
    let mut out = String::new();
    let status = match r.status {
        ReportStatus::Pass => "PASS",
        ReportStatus::Fail => "FAIL",
        ReportStatus::NumericEvidence => "NUMERIC EVIDENCE",
    };
    write!(out, "{}: {status}", r.target).unwrap();
    if let Some(label) = &r.label {
        write!(out, " ({label})").unwrap();
    }
    out.push('\n');
    let orders: Vec<String> = r.orders.iter().map(|(k, v)| format!("{k}={v}")).collect();
    writeln!(out, "  orders: {}", orders.join(" ")).unwrap();
    for s in &r.steps {
        writeln!(out, "  [{}] {} ({} ms): {}", status_word(s.status), s.name, s.elapsed_ms, s.detail).unwrap();
        match &s.witness {
            Some(Witness::Coefficient { exponent, left, right }) => {
                writeln!(out, "         witness: q^{exponent}: {left} vs {right}").unwrap()
            }
            Some(Witness::Bound { n, value, bound, expected }) => {
                writeln!(out, "         witness: n={n}: {value} {expected} {bound} fails").unwrap()
            }
            None => {}
        }
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}").unwrap();
    }
    out
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Run a parsed command and return the exit code.
pub fn execute(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Verify {
            ids,
            order,
            finite_bound,
            n_max,
            oracle_n_max,
            threshold_max,
            format,
            out,
        } => {
            let targets: Result<Vec<Target>> = ids.iter().map(|s| s.parse()).collect();
            let targets = match targets {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("qrank: {e}");
                    return EXIT_USAGE;
                }
            };
            let opts = ConjectureOptions {
                order,
                finite_bound,
                oracle_n_max,
                threshold_max,
            };
            proofcheck::verify_all(&targets, &opts, n_max).and_then(|reports| {
                let doc = ReportDocument::new(
                    "verify",
                    params(&[
                        ("ids", json!(ids)),
                        ("order", json!(order)),
                        ("finite_bound", json!(finite_bound)),
                        ("n_max", json!(n_max)),
                        ("oracle_n_max", json!(oracle_n_max)),
                        ("threshold_max", json!(threshold_max)),
                    ]),
                    reports.into_iter().map(Payload::Proof).collect(),
                );
                let text = match format {
                    Format::Json => doc.to_json() + "\n",
                    Format::Text => {
                        let mut t: String = doc
                            .results
                            .iter()
                            .filter_map(|r| match r {
                                Payload::Proof(p) => Some(report_text(p)),
                                _ => None,
                            })
                            .collect();
                        let overall = serde_json::to_value(doc.overall_status).unwrap();
                        writeln!(t, "overall: {}", overall.as_str().unwrap()).unwrap();
                        t
                    }
                };
                emit(&out, &text)?;
                Ok(doc.exit_code())
            })
        }
        Command::Series {
            expr,
            order,
            format,
            out,
        } => eval_expression(&expr, order).and_then(|s| {
            let text = match format {
                Format::Text => s.terms().map(|(e, c)| format!("{e} {c}\n")).collect(),
                Format::Json => {
                    let doc = ReportDocument::new(
                        "series",
                        params(&[("expr", json!(expr)), ("order", json!(order))]),
                        vec![Payload::Series(SeriesPayload::new(&expr, &s))],
                    );
                    doc.to_json() + "\n"
                }
            };
            emit(&out, &text)?;
            Ok(EXIT_PASS)
        }),
        Command::Ranktable {
            kind,
            m,
            n_max,
            format,
            out,
        } => kind
            .parse::<RankKind>()
            .and_then(|k| rank_table(k, m, n_max))
            .and_then(|(t, oracle)| {
                let text = match format {
                    TableFormat::Csv => table_csv(&t),
                    TableFormat::Json => {
                        let doc = ReportDocument::new(
                            "ranktable",
                            params(&[("kind", json!(kind)), ("m", json!(m)), ("n_max", json!(n_max))]),
                            vec![Payload::RankTable(TablePayload::new(&t, oracle))],
                        );
                        doc.to_json() + "\n"
                    }
                };
                emit(&out, &text)?;
                Ok(EXIT_PASS)
            }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qrank: {e}");
            if let Error::Resource { limit, .. } = &e {
                eprintln!("qrank: try n_max <= {limit}");
            }
            exit_code_for(&e)
        }
    }
}

/// Parse `args` (program name first) and run.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let l = eval_expression("L_3_10", 20).unwrap();
        assert_eq!(l.coeff(0).unwrap(), BigRational::from_integer(1.into()));
        let t1 = eval_expression("T1@1.4", 10).unwrap();
        let nonzero: Vec<i64> = t1.terms().filter(|(_, c)| *c != BigRational::from_integer(0.into())).map(|(e, _)| e).collect();
        assert_eq!(nonzero, [2, 4, 6, 8]);
        assert!(eval_expression("gen9", 10).is_err());
        assert!(eval_expression("J_x", 10).is_err());
        assert_eq!(eval_expression("theta_1_0", 10).unwrap().coeff(4).unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn csv_layout() {
        let (t, _) = rank_table(RankKind::Dyson, 10, 0).unwrap();
        assert_eq!(table_csv(&t), "n,0,1,2,3,4,5,6,7,8,9\n0,1,0,0,0,0,0,0,0,0,0\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["qrank", "verify", "9.9"]), EXIT_USAGE);
        assert_eq!(run(["qrank", "bogus"]), EXIT_USAGE);
        assert_eq!(run(["qrank", "ranktable", "m2", "10", "1000"]), EXIT_RESOURCE);
    }
}
