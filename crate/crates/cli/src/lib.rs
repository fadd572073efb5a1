//! Command-line front end: argument parsing, configuration and reports.

pub mod acceptance;
mod config;
mod expr;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mpl_core::{parse_symbol, LiSymbol, ParseError, ParsedSymbol, Symbol};
use mpl_hopf::{coproduct_i, coproduct_li, coproduct_li_series, dihedral_cobracket, reduced_coproduct, HopfError};
use mpl_numerics::{certify_comparison, verify_identity, Evaluator, NumError};
use mpl_products::{shuffle_lincomb_words, shuffle_product_li, stuffle_product, ProductError};
use mpl_regularization::{compare, RegError, Regularizer};
use mpl_relations::{basis, generate, quotient_dim, Mode, Query, RelError};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use config::Config;
pub use expr::parse_lincomb;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Reg(#[from] RegError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "mpl", version, about = "Multiple polylogarithms at roots of unity")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// key = value configuration file; flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    level: Option<u32>,
    #[arg(long, global = true)]
    max_weight: Option<usize>,
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    /// comma-separated relation families
    #[arg(long, global = true)]
    families: Option<String>,
    #[arg(long, global = true)]
    digits: Option<usize>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ProductType {
    Stuffle,
    Shuffle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scheme {
    Stuffle,
    Shuffle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    ModTorsion,
    DepthGraded,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::ModTorsion => Mode::ModTorsion,
            ModeArg::DepthGraded => Mode::DepthGraded,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stuffle or shuffle product of two symbols
    Product {
        #[arg(long = "type", value_enum)]
        kind: ProductType,
        a: String,
        b: String,
    },
    /// Regularized value of a symbol as a polynomial in L
    Regularize {
        symbol: String,
        #[arg(long, value_enum, default_value_t = Scheme::Stuffle)]
        scheme: Scheme,
    },
    /// Stuffle regularization against the comparison map applied to the shuffle one
    Compare {
        symbol: String,
        /// also evaluate the difference numerically
        #[arg(long)]
        certify: bool,
    },
    /// Motivic coproduct of a symbol, as a sum of left ⊗ product of right factors
    Coproduct {
        symbol: String,
        #[arg(long)]
        reduced: bool,
        /// use the generating-series form instead of subsequences
        #[arg(long)]
        series: bool,
    },
    /// Depth-graded cobracket of a symbol of depth at least 2
    Cobracket { symbol: String },
    /// List relation rows
    Relations {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Quotient dimension
    Dims {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// shorthand for --mode depth-graded
        #[arg(long)]
        depth_graded: bool,
        /// every weight from 1 up to --weight
        #[arg(long)]
        table: bool,
    },
    /// Numerical value of a symbol or combination
    Eval { expr: String },
    /// Check `lhs = rhs` numerically
    Verify {
        lhs: String,
        #[arg(default_value = "0")]
        rhs: String,
    },
    /// Run the acceptance suite
    Selftest,
}

/// Non-zero exit codes.
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 1;

struct Outcome {
    result: Value,
    text: String,
    ok: bool,
}

fn ok(result: Value, text: String) -> Outcome {
    Outcome { result, text, ok: true }
}

fn build_config(g: &Global) -> Result<Config, CliError> {
    let mut c = match &g.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let mut set = |k: &str, v: Option<String>| v.map_or(Ok(()), |v| c.set(k, &v).map_err(CliError::Config));
    set("level", g.level.map(|v| v.to_string()))?;
    set("max_weight", g.max_weight.map(|v| v.to_string()))?;
    set("max_depth", g.max_depth.map(|v| v.to_string()))?;
    set("families", g.families.clone())?;
    set("digits", g.digits.map(|v| v.to_string()))?;
    set("threads", g.threads.map(|v| v.to_string()))?;
    set("seed", g.seed.map(|v| v.to_string()))?;
    c.validate()?;
    Ok(c)
}

fn li(src: &str) -> Result<LiSymbol, CliError> {
    match parse_symbol(src)? {
        ParsedSymbol::Li(s) => Ok(s),
        ParsedSymbol::I(g) => Err(CliError::Usage(format!("{g}: expected an Li symbol"))),
    }
}

fn query(cfg: &Config, weight: usize, depth: Option<usize>, mode: Mode) -> Query {
    Query { level: cfg.level, weight, depth, mode, families: cfg.families.clone() }
}

fn execute(cmd: &Command, cfg: &Config) -> Result<Outcome, CliError> {
    match cmd {
        Command::Product { kind, a, b } => {
            let (pa, pb) = (parse_symbol(a)?, parse_symbol(b)?);
            let res = match (kind, pa, pb) {
                (ProductType::Stuffle, ParsedSymbol::Li(x), ParsedSymbol::Li(y)) => output::li_lincomb(&stuffle_product(&x, &y)?),
                (ProductType::Shuffle, ParsedSymbol::Li(x), ParsedSymbol::Li(y)) => output::li_lincomb(&shuffle_product_li(&x, &y)?),
                (ProductType::Shuffle, ParsedSymbol::I(x), ParsedSymbol::I(y)) => {
                    let (u, v) = (x.as_word(), y.as_word());
                    let (Some(u), Some(v)) = (u, v) else {
                        return Err(CliError::Usage("shuffle of I symbols needs endpoints 0 and 1".into()));
                    };
                    let lc = shuffle_lincomb_words(&mpl_core::LinComb::from_symbol(u), &mpl_core::LinComb::from_symbol(v))?;
                    output::lincomb(&lc)
                }
                _ => return Err(CliError::Usage("stuffle needs two Li symbols; shuffle needs two symbols of the same kind".into())),
            };
            let text = res["text"].as_str().unwrap_or_default().to_string();
            Ok(ok(res, text))
        }
        Command::Regularize { symbol, scheme } => {
            let s = li(symbol)?;
            let reg = Regularizer::new(s.level(), s.weight().max(1));
            let p = match scheme {
                Scheme::Stuffle => reg.stuffle(&s)?,
                Scheme::Shuffle => reg.shuffle(&s)?,
            };
            Ok(ok(output::regpoly(&p), p.to_string()))
        }
        Command::Compare { symbol, certify } => {
            let s = li(symbol)?;
            let reg = Regularizer::new(s.level(), s.weight().max(1));
            let c = compare(&reg, &s)?;
            let mut res = json!({
                "symbol": s.to_string(),
                "lhs": output::regpoly(&c.lhs),
                "rhs": output::regpoly(&c.rhs),
                "difference": output::regpoly(&c.difference),
                "exact_equal": c.exact_equal,
            });
            let mut good = c.exact_equal;
            let mut text = format!("{} vs {}: exact {}", c.lhs, c.rhs, c.exact_equal);
            if *certify {
                let cert = certify_comparison(&Evaluator::new(cfg.digits), &c)?;
                res["numeric_equal"] = json!(cert.numeric_equal);
                res["max_residual"] = json!(format!("{:e}", cert.max_residual));
                good = cert.numeric_equal;
                text += &format!(", numeric {} (residual {:e})", cert.numeric_equal, cert.max_residual);
            }
            Ok(Outcome { result: res, text, ok: good })
        }
        Command::Coproduct { symbol, reduced, series } => {
            let t = match parse_symbol(symbol)? {
                ParsedSymbol::Li(s) if *series => coproduct_li_series(&s, cfg.max_weight)?,
                ParsedSymbol::Li(s) => {
                    if s.weight() > cfg.max_weight {
                        return Err(HopfError::Cutoff(s.weight(), cfg.max_weight).into());
                    }
                    coproduct_li(&s)
                }
                ParsedSymbol::I(g) => {
                    if g.weight() > cfg.max_weight {
                        return Err(HopfError::Cutoff(g.weight(), cfg.max_weight).into());
                    }
                    coproduct_i(&g)?
                }
            };
            let t = if *reduced { reduced_coproduct(&t) } else { t };
            Ok(ok(output::tensor(&t), t.to_string()))
        }
        Command::Cobracket { symbol } => {
            let t = dihedral_cobracket(&li(symbol)?)?;
            Ok(ok(output::tensor(&t), t.to_string()))
        }
        Command::Relations { weight, depth, mode } => {
            let q = query(cfg, *weight, *depth, (*mode).into());
            let b = basis(&q)?;
            let reg = Regularizer::new(cfg.level, (*weight).max(1));
            let mut notes = vec![];
            let rels = generate(&reg, *weight, *depth, q.mode, &q.families, &mut notes);
            let rows: Vec<Value> = rels
                .iter()
                .map(|r| json!({"family": r.family.name(), "source": r.source, "row": output::li_lincomb(&r.row)}))
                .collect();
            let text = rels.iter().map(|r| format!("[{}] {}: {} = 0", r.family, r.source, r.row)).collect::<Vec<_>>().join("\n");
            let res = json!({
                "weight": weight,
                "depth": depth,
                "mode": q.mode.to_string(),
                "basis": b.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "rows": rows,
                "notes": notes,
            });
            Ok(ok(res, text))
        }
        Command::Dims { weight, depth, mode, depth_graded, table } => {
            let mode = if *depth_graded { Mode::DepthGraded } else { (*mode).into() };
            let weights: Vec<usize> = if *table { (1..=*weight).collect() } else { vec![*weight] };
            let mut reports = vec![];
            for w in weights {
                let q = query(cfg, w, *depth, mode);
                let r = quotient_dim(&q)?;
                let b = basis(&q)?;
                reports.push((r, b));
            }
            let rows: Vec<Value> = reports
                .iter()
                .map(|(r, b)| {
                    json!({
                        "weight": r.weight,
                        "depth": r.depth,
                        "mode": r.mode.to_string(),
                        "basis_size": r.basis,
                        "basis": b.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "relations": r.relations,
                        "rank": r.rank,
                        "dim": r.dim,
                        "per_family": r.per_family.iter().map(|(f, n)| (f.name().to_string(), json!(n))).collect::<Map<_, _>>(),
                        "notes": r.notes,
                    })
                })
                .collect();
            let csv = dims_csv(cfg, &reports.iter().map(|(r, _)| r.clone()).collect::<Vec<_>>())?;
            let res = if *table { Value::Array(rows) } else { rows.into_iter().next().expect("one report") };
            Ok(ok(res, csv))
        }
        Command::Eval { expr } => {
            let lc = parse_lincomb(expr)?;
            let ev = Evaluator::new(cfg.digits);
            let v = mpl_numerics::eval_lincomb(&ev, &lc)?;
            let (re, im) = (v.re_string(cfg.digits), v.im_string(cfg.digits));
            let res = json!({"expr": lc.to_string(), "re": re, "im": im, "err": format!("{:e}", v.err)});
            Ok(ok(res, format!("{re} + {im}i")))
        }
        Command::Verify { lhs, rhs } => {
            let (a, b) = (parse_lincomb(lhs)?, parse_lincomb(rhs)?);
            let v = verify_identity(&Evaluator::new(cfg.digits), &a, &b)?;
            let res = json!({
                "lhs": a.to_string(),
                "rhs": b.to_string(),
                "residual": format!("{:e}", v.residual),
                "holds": v.holds,
            });
            Ok(Outcome { result: res, text: format!("holds: {} (residual {:e})", v.holds, v.residual), ok: v.holds })
        }
        Command::Selftest => {
            let outcomes = acceptance::run_all(cfg.seed);
            let all = outcomes.iter().all(|o| o.pass);
            let text = outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n");
            let res = Value::Array(outcomes.iter().map(|o| o.to_json()).collect());
            Ok(Outcome { result: res, text, ok: all })
        }
    }
}

fn dims_csv(cfg: &Config, reports: &[mpl_relations::DimsReport]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["level", "weight", "depth", "mode", "basis", "relations", "rank", "dim"]).map_err(csv_err)?;
    for r in reports {
        let depth = r.depth.map_or(String::new(), |d| d.to_string());
        w.write_record([
            cfg.level.to_string(),
            r.weight.to_string(),
            depth,
            r.mode.to_string(),
            r.basis.to_string(),
            r.relations.to_string(),
            r.rank.to_string(),
            r.dim.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Product { .. } => "product",
        Command::Regularize { .. } => "regularize",
        Command::Compare { .. } => "compare",
        Command::Coproduct { .. } => "coproduct",
        Command::Cobracket { .. } => "cobracket",
        Command::Relations { .. } => "relations",
        Command::Dims { .. } => "dims",
        Command::Eval { .. } => "eval",
        Command::Verify { .. } => "verify",
        Command::Selftest => "selftest",
    }
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

/// Runs one command line, writing the report to `out` and errors to `err`;
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let cfg = match build_config(&cli.global) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let res = in_pool(cfg.threads, || execute(&cli.cmd, &cfg)).and_then(|r| r);
    match res {
        Ok(o) => {
            let body = match cli.global.format {
                Format::Text | Format::Csv => o.text,
                Format::Json => {
                    let report = json!({
                        "tool": "mpl",
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": command_name(&cli.cmd),
                        "config": cfg.to_json(),
                        "config_hash": cfg.hash(),
                        "ok": o.ok,
                        "result": o.result,
                    });
                    serde_json::to_string_pretty(&report).expect("json")
                }
            };
            let _ = writeln!(out, "{}", body.trim_end());
            if o.ok {
                0
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
