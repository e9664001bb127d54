//! Command-line interface. The binary is a thin wrapper around [`run`], so
//! every command can be exercised in-process.
//!
//! Exit codes:
//!
//! | code | meaning                                            |
//! |------|----------------------------------------------------|
//! | 0    | success                                            |
//! | 2    | usage error (bad flags or arguments)               |
//! | 3    | expression does not parse (syntax or domain error) |
//! | 4    | evaluation budget exceeded                         |
//! | 5    | function is constant                               |
//! | 6    | function is not a polynomial                       |
//! | 7    | search bound reached before enough witnesses       |
//! | 8    | expression too large for the exact length search   |
//! | 9    | invalid argument value                             |
//! | 10   | I/O failure                                        |
//! | 11   | no prime factor found at the chosen effort         |

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;
use thiserror::Error;

use crate::algebra::{self, LengthError, SemanticVerdict};
use crate::arith::{self, ArithError, Effort, DEFAULT_SEED};
use crate::classify::{classify_with_budget, Classification};
use crate::conjecture::{
    self, format_scan_csv, format_scan_json, format_scan_table, format_witness_csv, format_witness_json,
    format_witness_table, ConjectureError, ScanRow, SearchConfig, WitnessRecord,
};
use crate::expr::{self, EvalBudget, EvalError, NaturalExpr, ParseError, DEFAULT_MAX_BITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "supernatural", version, about = "Natural functions and their non-prime outputs")]
pub struct Cli {
    /// Seed for randomized factoring.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest bit-length any intermediate value may reach.
    #[arg(long = "budget-bits", global = true, default_value_t = DEFAULT_MAX_BITS)]
    pub budget_bits: u64,
    /// Factoring effort: quick, standard or deep.
    #[arg(long, global = true, default_value_t = Effort::Standard)]
    pub effort: Effort,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Worker threads for scans (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate EXPR at n.
    Eval {
        expr: String,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Constant (with its value) or strictly increasing.
    Classify { expr: String },
    /// Rewrite with the exponent laws to a best-effort normal form.
    Normalize { expr: String },
    /// Fewest closure-operator rounds that build EXPR from symbols.
    Length {
        expr: String,
        #[arg(long, default_value_t = algebra::DEFAULT_LENGTH_LIMIT)]
        limit: usize,
    },
    /// Substitute n+K for n.
    Shift {
        expr: String,
        #[arg(short = 'k')]
        k: u64,
    },
    /// Compare two expressions at n = 1..=UP_TO.
    Equal {
        left: String,
        right: String,
        #[arg(long = "up-to", default_value_t = 8)]
        up_to: u64,
    },
    /// Primality verdict for a decimal integer.
    Prime { value: String },
    /// Factor a decimal integer.
    Factor { value: String },
    /// Smallest n <= N_MAX at which EXPR is not prime.
    Witness {
        expr: String,
        #[arg(long = "n-max", default_value_t = 16)]
        n_max: u64,
    },
    /// Divisibility certificate for a polynomial.
    CertifyPoly { expr: String },
    /// Divisibility certificate for a^n + b.
    CertifyExp {
        #[arg(short = 'a')]
        a: u64,
        #[arg(short = 'b')]
        b: u64,
    },
    /// Witness search over 2^2^n + c for odd c in a range.
    Scan {
        #[arg(long = "c-from")]
        c_from: u64,
        #[arg(long = "c-to")]
        c_to: u64,
        #[arg(long = "n-check")]
        n_check: u64,
    },
    /// COUNT witnesses at strictly increasing n.
    Infinitude {
        expr: String,
        #[arg(long)]
        count: usize,
        #[arg(long = "per-shift-n-max", default_value_t = 64)]
        per_shift_n_max: u64,
    },
    /// List expressions up to a size, optionally searching each for a witness.
    Enumerate {
        #[arg(long = "max-ops")]
        max_ops: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        consts: Vec<u64>,
        #[arg(long = "witness-all")]
        witness_all: bool,
        #[arg(long = "n-max", default_value_t = 16)]
        n_max: u64,
    },
    /// Regenerate the witness table, the 2^2^n+93 table and the c scan as CSV files.
    ReproPaper {
        #[arg(long, default_value = "repro")]
        out: PathBuf,
        /// Scan c = 2k+1 for 0 <= k <= K_MAX.
        #[arg(long = "k-max", default_value_t = 1300)]
        k_max: u64,
        #[arg(long = "n-check", default_value_t = 7)]
        n_check: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
    #[error("{0}")]
    Conjecture(#[from] ConjectureError),
    #[error("{0}")]
    Length(#[from] LengthError),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// Partial output that must still be printed.
    #[error("{message}")]
    Partial { output: String, message: String, code: i32 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Eval(EvalError::BudgetExceeded { .. }) => 4,
            CliError::Eval(EvalError::ZeroIndex) => 9,
            CliError::Conjecture(e) => match e {
                ConjectureError::BudgetExceeded { .. } => 4,
                ConjectureError::NotIncreasing(_) => 5,
                ConjectureError::NotPolynomial => 6,
                ConjectureError::Exhausted { .. } => 7,
                ConjectureError::InvalidArgument(_) => 9,
                ConjectureError::FactorNotFound(_) => 11,
            },
            CliError::Length(_) => 8,
            CliError::InvalidArgument(_) => 9,
            CliError::Io { .. } => 10,
            CliError::Partial { code, .. } => *code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning what should be printed on stdout.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Result<String, CliError> {
    if cli.budget_bits == 0 {
        return Err(CliError::InvalidArgument("--budget-bits must be at least 1".into()));
    }
    let budget = EvalBudget::new(cli.budget_bits);
    let config = SearchConfig { budget, effort: cli.effort, seed: cli.seed };
    let fmt = cli.format;
    match &cli.command {
        Command::Eval { expr, n } => {
            let e = expr::parse(expr)?;
            let value = expr::evaluate(&e, *n, budget)?;
            Ok(record(fmt, &value.to_string(), &[("function", e.render()), ("n", n.to_string()), ("value", value.to_string())]))
        }
        Command::Classify { expr } => {
            let e = expr::parse(expr)?;
            let c = classify_with_budget(&e, budget)?;
            let (verdict, value) = match &c {
                Classification::Constant(v) => ("constant", v.to_string()),
                Classification::StrictlyIncreasing => ("strictly increasing", String::new()),
            };
            Ok(record(fmt, &c.to_string(), &[("function", e.render()), ("verdict", verdict.into()), ("value", value)]))
        }
        Command::Normalize { expr } => {
            let e = expr::parse(expr)?;
            let normal = algebra::normalize_with_budget(&e, budget).render();
            Ok(record(fmt, &normal, &[("function", e.render()), ("normal_form", normal.clone())]))
        }
        Command::Length { expr, limit } => {
            let e = expr::parse(expr)?;
            let r = algebra::syntactic_length_with_limit(&e, *limit)?;
            let word = r.word_string();
            let text = if word.is_empty() { r.length.to_string() } else { format!("{} ({word})", r.length) };
            Ok(record(fmt, &text, &[("function", e.render()), ("length", r.length.to_string()), ("word", word)]))
        }
        Command::Shift { expr, k } => {
            if *k == 0 {
                return Err(CliError::InvalidArgument("shift amount must be at least 1".into()));
            }
            let e = expr::parse(expr)?;
            let shifted = e.shift(*k).render();
            Ok(record(fmt, &shifted, &[("function", e.render()), ("k", k.to_string()), ("shifted", shifted.clone())]))
        }
        Command::Equal { left, right, up_to } => {
            if *up_to == 0 {
                return Err(CliError::InvalidArgument("--up-to must be at least 1".into()));
            }
            let (l, r) = (expr::parse(left)?, expr::parse(right)?);
            let samples: Vec<u64> = (1..=*up_to).collect();
            let verdict = algebra::semantic_equal(&l, &r, &samples, budget)?;
            let (text, fields) = match &verdict {
                SemanticVerdict::AgreeOnSamples => (
                    format!("agree on n = 1..{up_to}"),
                    vec![("verdict", "agree".to_string()), ("n", String::new()), ("left_value", String::new()), ("right_value", String::new())],
                ),
                SemanticVerdict::Differ { n, left, right } => (
                    format!("differ at n = {n}: {left} vs {right}"),
                    vec![("verdict", "differ".to_string()), ("n", n.to_string()), ("left_value", left.to_string()), ("right_value", right.to_string())],
                ),
            };
            let mut all = vec![("left", l.render()), ("right", r.render())];
            all.extend(fields);
            Ok(record(fmt, &text, &all))
        }
        Command::Prime { value } => {
            let x = parse_integer(value)?;
            let verdict = arith::is_prime(&x).map_err(arith_error)?;
            Ok(record(fmt, &verdict.to_string(), &[("value", x.to_string()), ("verdict", verdict.to_string())]))
        }
        Command::Factor { value } => {
            let x = parse_integer(value)?;
            if x < BigUint::from(2u8) {
                return Err(CliError::InvalidArgument("factor needs an integer >= 2".into()));
            }
            let f = arith::factor_seeded(&x, cli.effort, cli.seed);
            Ok(record(fmt, &format!("{x} = {f}"), &[("value", x.to_string()), ("factorization", f.to_report_string())]))
        }
        Command::Witness { expr, n_max } => {
            let e = expr::parse(expr)?;
            let outcome = conjecture::smallest_composite_witness(&e, *n_max, &config)?;
            Ok(scan_output(fmt, &[ScanRow::from_outcome(&e, &outcome)]))
        }
        Command::CertifyPoly { expr } => {
            let e = expr::parse(expr)?;
            let w = conjecture::polynomial_certificate(&e, &config)?;
            Ok(witness_output(fmt, &[WitnessRecord::new(&e, &w)]))
        }
        Command::CertifyExp { a, b } => {
            let w = conjecture::exponential_certificate(*a, *b, &config)?;
            let e = exponential_expr(*a, *b);
            Ok(witness_output(fmt, &[WitnessRecord::new(&e, &w)]))
        }
        Command::Scan { c_from, c_to, n_check } => {
            let rows = conjecture::scan_family(*c_from, *c_to, *n_check, &config, cli.jobs)?;
            let mut out = scan_output(fmt, &rows);
            if fmt == OutputFormat::Table {
                out.push_str(&scan_summary(&rows));
            }
            Ok(out)
        }
        Command::Infinitude { expr, count, per_shift_n_max } => {
            let e = expr::parse(expr)?;
            match conjecture::infinitude_samples(&e, *count, *per_shift_n_max, &config) {
                Ok(ws) => {
                    let records: Vec<_> = ws.iter().map(|w| WitnessRecord::new(&e, w)).collect();
                    Ok(witness_output(fmt, &records))
                }
                Err(err @ ConjectureError::Exhausted { .. }) => {
                    let ConjectureError::Exhausted { found, .. } = &err else { unreachable!() };
                    let records: Vec<_> = found.iter().map(|w| WitnessRecord::new(&e, w)).collect();
                    Err(CliError::Partial {
                        output: witness_output(fmt, &records),
                        message: err.to_string(),
                        code: CliError::Conjecture(err.clone()).exit_code(),
                    })
                }
                Err(err) => Err(err.into()),
            }
        }
        Command::Enumerate { max_ops, consts, witness_all, n_max } => {
            if consts.contains(&0) {
                return Err(CliError::InvalidArgument("constants must be >= 1".into()));
            }
            let corpus: Vec<NaturalExpr> = algebra::enumerate(*max_ops, consts).collect();
            if *witness_all {
                let rows: Vec<ScanRow> = corpus
                    .iter()
                    .filter_map(|e| witness_row(e, *n_max, &config))
                    .collect();
                Ok(scan_output(fmt, &rows))
            } else {
                Ok(list_output(fmt, &corpus))
            }
        }
        Command::ReproPaper { out, k_max, n_check } => repro_paper(out, *k_max, *n_check, &config, cli.jobs),
    }
}

fn arith_error(e: ArithError) -> CliError {
    CliError::InvalidArgument(e.to_string())
}

fn parse_integer(text: &str) -> Result<BigUint, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::InvalidArgument(format!("not a non-negative decimal integer: {text:?}")))
}

fn exponential_expr(a: u64, b: u64) -> NaturalExpr {
    let power = NaturalExpr::pow(NaturalExpr::constant(a.max(1)), NaturalExpr::Var);
    if b == 0 {
        power
    } else {
        NaturalExpr::add(power, NaturalExpr::constant(b))
    }
}

/// `None` for constant functions, which have nothing to search.
fn witness_row(e: &NaturalExpr, n_max: u64, config: &SearchConfig) -> Option<ScanRow> {
    match conjecture::smallest_composite_witness(e, n_max, config) {
        Ok(outcome) => Some(ScanRow::from_outcome(e, &outcome)),
        Err(ConjectureError::NotIncreasing(_)) => None,
        Err(ConjectureError::BudgetExceeded { index, .. }) => Some(ScanRow {
            function: e.render(),
            smallest_composite_index: None,
            composite_value: None,
            factorization: None,
            primes_before: index.map_or(0, |n| n - 1),
            budget_exceeded_at: Some(index.unwrap_or(0)),
        }),
        Err(other) => unreachable!("unexpected search error: {other}"),
    }
}

fn record(fmt: OutputFormat, text: &str, fields: &[(&str, String)]) -> String {
    match fmt {
        OutputFormat::Table => format!("{text}\n"),
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(fields.iter().map(|(k, _)| *k)).expect("in-memory write");
            w.write_record(fields.iter().map(|(_, v)| v.as_str())).expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        OutputFormat::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            serde_json::to_string_pretty(&map).expect("plain data") + "\n"
        }
    }
}

fn scan_output(fmt: OutputFormat, rows: &[ScanRow]) -> String {
    match fmt {
        OutputFormat::Table => format_scan_table(rows),
        OutputFormat::Csv => format_scan_csv(rows),
        OutputFormat::Json => format_scan_json(rows),
    }
}

fn witness_output(fmt: OutputFormat, records: &[WitnessRecord]) -> String {
    match fmt {
        OutputFormat::Table => format_witness_table(records),
        OutputFormat::Csv => format_witness_csv(records),
        OutputFormat::Json => format_witness_json(records),
    }
}

fn list_output(fmt: OutputFormat, corpus: &[NaturalExpr]) -> String {
    match fmt {
        OutputFormat::Table => corpus.iter().map(|e| format!("{e}\n")).collect(),
        OutputFormat::Csv => {
            let mut out = String::from("index,expression\n");
            for (i, e) in corpus.iter().enumerate() {
                writeln!(out, "{i},{e}").expect("string write");
            }
            out
        }
        OutputFormat::Json => {
            let list: Vec<String> = corpus.iter().map(NaturalExpr::render).collect();
            serde_json::to_string_pretty(&list).expect("plain data") + "\n"
        }
    }
}

/// Counts of rows by leading-prime run, longest first.
pub fn scan_summary(rows: &[ScanRow]) -> String {
    let mut out = String::new();
    let max = rows.iter().map(|r| r.primes_before).max().unwrap_or(0);
    writeln!(out, "\nrows: {}", rows.len()).expect("string write");
    for k in (1..=max).rev() {
        let at_least = rows.iter().filter(|r| r.primes_before >= k).count();
        writeln!(out, "primes_before >= {k}: {at_least}").expect("string write");
    }
    out
}

/// Functions in the per-function witness table written by `repro-paper`.
pub const REPRO_FUNCTIONS: [&str; 8] = [
    "2^2^n+1",
    "2^2^n+3",
    "2^2^n+93",
    "3^3^n+1",
    "7^n+6",
    "n^n+n+1",
    "2^n+1",
    "n^2+n+41",
];

fn repro_paper(out: &Path, k_max: u64, n_check: u64, config: &SearchConfig, jobs: usize) -> Result<String, CliError> {
    std::fs::create_dir_all(out).map_err(|source| CliError::Io { path: out.to_path_buf(), source })?;
    let write = |name: &str, body: &str| -> Result<PathBuf, CliError> {
        let path = out.join(name);
        std::fs::write(&path, body).map_err(|source| CliError::Io { path: path.clone(), source })?;
        Ok(path)
    };
    let mut summary = String::new();

    let rows: Vec<ScanRow> = REPRO_FUNCTIONS
        .iter()
        .map(|text| {
            let e = expr::parse(text).expect("built-in expression");
            witness_row(&e, 64, config).expect("built-in functions are non-constant")
        })
        .collect();
    let path = write("functions.csv", &format_scan_csv(&rows))?;
    writeln!(summary, "{}", path.display()).expect("string write");
    summary.push_str(&format_scan_table(&rows));

    let f46 = conjecture::fermat_like(93);
    let mut table = String::from("n,value,verdict,factorization\n");
    let mut pretty = String::new();
    for n in 1..=n_check {
        let value = expr::evaluate(&f46, n, config.budget)?;
        let verdict = arith::is_prime(&value).map_err(arith_error)?;
        let factorization = if verdict.is_probably_prime() {
            String::new()
        } else {
            arith::factor_seeded(&value, config.effort, config.seed).to_report_string()
        };
        let short = match verdict {
            arith::PrimalityVerdict::Prime => "prime",
            arith::PrimalityVerdict::ProbablePrime { .. } => "probable_prime",
            arith::PrimalityVerdict::Composite => "composite",
        };
        writeln!(table, "{n},{value},{short},{factorization}").expect("string write");
        writeln!(pretty, "{}", format!("n = {n}: {short} {factorization}").trim_end()).expect("string write");
    }
    let path = write("f46.csv", &table)?;
    writeln!(summary, "\n{}", path.display()).expect("string write");
    summary.push_str(&pretty);

    let scan = conjecture::scan_family(1, 2 * k_max + 1, n_check, config, jobs)?;
    let path = write("k_scan.csv", &format_scan_csv(&scan))?;
    writeln!(summary, "\n{}", path.display()).expect("string write");
    let top: Vec<ScanRow> = scan.iter().take_while(|r| r.primes_before + 1 >= n_check).cloned().collect();
    summary.push_str(&format_scan_table(&top));
    summary.push_str(&scan_summary(&scan));
    Ok(summary)
}
