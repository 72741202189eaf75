//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or oracle comparison
//! fails, 2 on usage or parse errors.

mod crosscheck;
mod json;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arbor::{parse_arbor, random_corpus, Arbor, CORPUS_VERSION};
use crate::invariants::{
    ehrhart_tn_alternating, ehrhart_tn_closed, k_tn_closed, laplace_tn_closed, m_tn_closed,
    zeta_tn_closed, InvariantBundle, InvariantError,
};
use crate::verify::{verify, Report, Theorem};
use crate::{Rat, Var, DEFAULT_ORDER};

pub use crosscheck::{check_arbor, ArborCheck, CheckLine, Fault};
pub use json::{PolyJson, PolyJsonError, TermJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default series order.
pub const ORDER_ENV: &str = "ARBORIUM_ORDER";

#[derive(Debug, Parser)]
#[command(
    name = "arborium",
    version,
    about = "Exact invariants of arbor polytopes and posets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute invariants of one arbor.
    Compute(ComputeArgs),
    /// Check the generating series of t_n coefficient by coefficient.
    Verify(VerifyArgs),
    /// Compare every recursion with its brute-force oracle on random arbors.
    OracleCheck(OracleCheckArgs),
    /// Show recursion and closed forms side by side for t_n.
    Tn(TnArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Invariant {
    Zeta,
    K,
    M,
    Ehrhart,
    Laplace,
    Volume,
}

impl Invariant {
    const ALL: [Invariant; 6] = [
        Invariant::Zeta,
        Invariant::K,
        Invariant::M,
        Invariant::Ehrhart,
        Invariant::Laplace,
        Invariant::Volume,
    ];

    fn name(self) -> &'static str {
        match self {
            Invariant::Zeta => "zeta",
            Invariant::K => "k",
            Invariant::M => "m",
            Invariant::Ehrhart => "ehrhart",
            Invariant::Laplace => "laplace",
            Invariant::Volume => "volume",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Zeta,
    #[value(alias = "m_triangle", alias = "m")]
    MTriangle,
    Ehrhart,
    Laplace,
    All,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Arbor in text form, e.g. "{1,2}({3}({6,7},{8}),{4,5})".
    #[arg(long)]
    pub arbor: Option<String>,
    /// Use t_n: a root labelled 1 with one leaf for each of 2, ..., n.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub tn: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: Source,
    /// Invariants to print (default: all).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub invariant: Vec<Invariant>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub theorem: TheoremArg,
    /// Truncation order N.
    #[arg(long, env = ORDER_ENV, default_value_t = DEFAULT_ORDER as u32,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub order: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    /// Seed of the random corpus.
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Number of random arbors.
    #[arg(long, default_value_t = 24)]
    pub count: usize,
    /// Largest arbor size in the corpus.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=8))]
    pub max_size: u32,
    /// Check this arbor instead of the random corpus.
    #[arg(long)]
    pub arbor: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Corrupt the K-polynomial recursion (harness self-test).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct TnArgs {
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Parses `args` (program name first) and runs the command, writing to
/// `out`/`err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::OracleCheck(a) => cmd_oracle_check(&a, out),
        Command::Tn(a) => cmd_tn(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

enum CliError {
    Usage(String),
    Failure(String),
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("write failed: {e}"))
    }
}

fn load_arbor(source: &Source) -> Result<Arbor, CliError> {
    match (&source.arbor, source.tn) {
        (Some(text), _) => {
            parse_arbor(text).map_err(|e| CliError::Usage(format!("invalid arbor: {e}")))
        }
        (None, Some(n)) => Arbor::tn(n as usize).map_err(|e| CliError::Usage(e.to_string())),
        (None, None) => Err(CliError::Usage("one of --arbor or --tn is required".into())),
    }
}

fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let arbor = load_arbor(&args.source)?;
    let mut wanted = args.invariant.clone();
    if wanted.is_empty() {
        wanted = Invariant::ALL.to_vec();
    }
    wanted.dedup();
    let bundle = InvariantBundle::<Rat>::new(arbor);
    let mut values: Vec<(Invariant, Value, String)> = Vec::new();
    for inv in wanted {
        let (json, text) = match inv {
            Invariant::Volume => {
                let v = bundle.volume()?;
                (json!({ "text": v.to_string() }), v.to_string())
            }
            _ => {
                let p = match inv {
                    Invariant::Zeta => bundle.zeta(),
                    Invariant::K => bundle.k_poly(),
                    Invariant::M => bundle.m_triangle()?,
                    Invariant::Ehrhart => bundle.ehrhart()?,
                    Invariant::Laplace => bundle.laplace()?,
                    Invariant::Volume => unreachable!(),
                };
                (
                    serde_json::to_value(PolyJson::from_poly(p)).expect("serializable"),
                    p.to_string(),
                )
            }
        };
        values.push((inv, json, text));
    }
    match args.format {
        Format::Json => {
            let invariants: serde_json::Map<String, Value> = values
                .into_iter()
                .map(|(i, j, _)| (i.name().to_string(), j))
                .collect();
            let doc = json!({
                "arbor": bundle.arbor().serialize(),
                "size": bundle.arbor().size(),
                "invariants": invariants,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )?;
        }
        Format::Text if values.len() == 1 => writeln!(out, "{}", values[0].2)?,
        Format::Text => {
            writeln!(out, "arbor: {}", bundle.arbor())?;
            for (i, _, text) in values {
                writeln!(out, "{}: {text}", i.name())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let theorems: Vec<Theorem> = match args.theorem {
        TheoremArg::Zeta => vec![Theorem::Zeta],
        TheoremArg::MTriangle => vec![Theorem::MTriangle],
        TheoremArg::Ehrhart => vec![Theorem::Ehrhart],
        TheoremArg::Laplace => vec![Theorem::Laplace],
        TheoremArg::All => Theorem::ALL.to_vec(),
    };
    let order = args.order as usize;
    let reports: Vec<Report> = theorems
        .into_iter()
        .map(|t| verify(t, order).map_err(|e| CliError::Failure(e.to_string())))
        .collect::<Result<_, _>>()?;
    let all_pass = reports.iter().all(|r| r.overall);
    match args.format {
        Format::Json => {
            let text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            };
            writeln!(out, "{}", text.expect("serializable"))?;
        }
        Format::Text => {
            for r in &reports {
                write!(out, "{r}")?;
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_oracle_check(args: &OracleCheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let corpus = match &args.arbor {
        Some(text) => {
            vec![parse_arbor(text).map_err(|e| CliError::Usage(format!("invalid arbor: {e}")))?]
        }
        None => random_corpus(args.seed, args.count, args.max_size as usize),
    };
    let fault = args.inject_fault.then_some(Fault::KPoly);
    let results: Vec<Result<ArborCheck, InvariantError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = corpus
            .iter()
            .map(|t| scope.spawn(move || check_arbor(t, fault)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let results: Vec<ArborCheck> = results.into_iter().collect::<Result<_, _>>()?;
    let all_pass = results.iter().all(|r| r.pass);
    match args.format {
        Format::Json => {
            let doc = json!({
                "corpus_version": CORPUS_VERSION,
                "seed": args.seed,
                "arbors": results,
                "overall": all_pass,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )?;
        }
        Format::Text => {
            if args.arbor.is_none() {
                writeln!(
                    out,
                    "corpus v{CORPUS_VERSION} seed {} ({} arbors)",
                    args.seed,
                    results.len()
                )?;
            }
            for r in &results {
                writeln!(
                    out,
                    "{} {:<32} n={} |P|={}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.arbor,
                    r.size,
                    r.points
                )?;
                for c in r.checks.iter().filter(|c| !c.pass) {
                    writeln!(out, "    {} disagrees", c.name)?;
                    if let (Some(rec), Some(orc)) = (&c.recursion, &c.oracle) {
                        writeln!(out, "      recursion: {rec}")?;
                        writeln!(out, "      oracle:    {orc}")?;
                    }
                }
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            writeln!(
                out,
                "{} of {} arbors agree",
                results.len() - failed,
                results.len()
            )?;
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_tn(args: &TnArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let n = args.n as usize;
    let bundle =
        InvariantBundle::<Rat>::new(Arbor::tn(n).map_err(|e| CliError::Usage(e.to_string()))?);
    let one = Rat::from_integer(1.into());
    let zeta = bundle.zeta().eval_at(Var::X, &one);
    let pairs = vec![
        ("zeta(u,1)", zeta, zeta_tn_closed::<Rat>(n)),
        (
            "k",
            bundle.k_poly().clone(),
            k_tn_closed(n).map_err(InvariantError::from)?,
        ),
        (
            "m",
            bundle.m_triangle()?.clone(),
            m_tn_closed(n).map_err(InvariantError::from)?,
        ),
        ("ehrhart", bundle.ehrhart()?.clone(), ehrhart_tn_closed(n)),
        (
            "ehrhart (alternating)",
            bundle.ehrhart()?.clone(),
            ehrhart_tn_alternating(n),
        ),
        ("laplace", bundle.laplace()?.clone(), laplace_tn_closed(n)),
    ];
    let all_agree = pairs.iter().all(|(_, a, b)| a == b);
    match args.format {
        Format::Json => {
            let items: BTreeMap<&str, Value> = pairs
                .iter()
                .map(|(name, rec, closed)| {
                    (
                        *name,
                        json!({
                            "recursion": PolyJson::from_poly(rec),
                            "closed_form": PolyJson::from_poly(closed),
                            "agree": rec == closed,
                        }),
                    )
                })
                .collect();
            let doc = json!({
                "n": n,
                "arbor": bundle.arbor().serialize(),
                "volume": bundle.volume()?.to_string(),
                "invariants": items,
                "overall": all_agree,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )?;
        }
        Format::Text => {
            writeln!(out, "t_{n} = {}", bundle.arbor())?;
            for (name, rec, closed) in &pairs {
                let tag = if rec == closed { "=" } else { "!=" };
                writeln!(out, "{name}: {rec}  [{tag} closed form]")?;
            }
            writeln!(out, "volume: {}", bundle.volume()?)?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_FAILURE })
}
