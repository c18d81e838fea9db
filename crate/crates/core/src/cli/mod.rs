//! The `hankel` command line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 any
//! other error.

mod cache;
mod table;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closed_forms::{identity, registry};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::hankel::{det_exact, hankel_matrix, Algorithm};
use crate::orthopoly::recurrence_from_moments;
use crate::sequences::{parse_params, parse_spec, SequenceSpec};
use crate::verify;

pub use cache::{load_cache, save_cache, CACHE_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hankel", version, about = "Exact Hankel determinants of Bernoulli and Euler sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms c_0..c_K.
    Seq {
        spec: String,
        #[arg(long)]
        upto: u64,
        /// Evaluate a polynomial sequence at this rational point.
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print H_n.
    Hankel {
        spec: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_enum)]
        algorithm: Option<AlgArg>,
        #[arg(long)]
        json: bool,
    },
    /// Print the (n+1)x(n+1) Hankel matrix.
    Matrix {
        spec: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the recurrence coefficients s_n, t_n and zeta_n.
    Recurrence {
        spec: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        at: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a registered closed form.
    ClosedForm {
        id: String,
        #[arg(long)]
        n: usize,
        /// `key=value`; `x=<rational>` evaluates a polynomial value.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check closed forms against brute-force determinants.
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// List the registry.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Re-emit a catalog table with computed spot checks.
    Table {
        #[arg(value_parser = ["7.1", "7.2"])]
        which: String,
        #[arg(long, conflicts_with_all = ["latex", "json"])]
        csv: bool,
        #[arg(long, conflicts_with = "json")]
        latex: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AlgArg {
    Gauss,
    Bareiss,
    Cofactor,
    Checkerboard,
    Recurrence,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Gauss => Algorithm::RationalGauss,
            AlgArg::Bareiss => Algorithm::FractionFreeBareiss,
            AlgArg::Cofactor => Algorithm::Cofactor,
            AlgArg::Checkerboard => Algorithm::CheckerboardSplit,
            AlgArg::Recurrence => Algorithm::RecurrenceProduct,
        }
    }
}

fn point(at: &Option<String>) -> Result<Option<Rational>> {
    at.as_deref().map(str::parse).transpose()
}

fn spec_at(name: &str, at: &Option<String>) -> Result<SequenceSpec> {
    let spec = parse_spec(name)?;
    Ok(match point(at)? {
        Some(x) => spec.at(&x),
        None => spec,
    })
}

fn key_values(items: &[String]) -> Result<Vec<(String, String)>> {
    let joined = items.join(",");
    if joined.is_empty() {
        return Ok(Vec::new());
    }
    Ok(parse_params(&joined)?.into_iter().collect())
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Parse(e.to_string()))
}

enum Outcome {
    Ok(String),
    VerifyFailed(String),
}

fn execute(cmd: Command) -> Result<Outcome> {
    let text = match cmd {
        Command::Seq { spec, upto, at, json } => {
            let terms = spec_at(&spec, &at)?.terms(upto)?;
            let strs: Vec<String> = terms.iter().map(ToString::to_string).collect();
            if json {
                to_json(&json!({ "spec": spec, "terms": strs }))?
            } else if terms.iter().any(|t| t.is_poly()) {
                strs.iter().enumerate().map(|(k, s)| format!("{k}: {s}")).collect::<Vec<_>>().join("\n")
            } else {
                strs.join(" ")
            }
        }
        Command::Hankel { spec, n, at, algorithm, json } => {
            let m = hankel_matrix(&spec_at(&spec, &at)?, n)?;
            let alg = algorithm.map(Algorithm::from).unwrap_or_else(|| crate::hankel::default_algorithm(&m));
            let r = det_exact(&m, alg)?;
            if json {
                to_json(&json!({ "spec": spec, "n": n, "algorithm": format!("{:?}", r.algorithm),
                    "value": r.value.to_string(), "elimination_steps": r.elimination_steps }))?
            } else {
                r.value.to_string()
            }
        }
        Command::Matrix { spec, n, at, json } => {
            let m = hankel_matrix(&spec_at(&spec, &at)?, n)?;
            if json {
                let rows: Vec<Vec<String>> =
                    m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
                to_json(&json!({ "spec": spec, "n": n, "rows": rows }))?
            } else {
                m.to_string().trim_end().to_string()
            }
        }
        Command::Recurrence { spec, order, at, json } => {
            let x = point(&at)?;
            let c = recurrence_from_moments(&parse_spec(&spec)?, order, x.as_ref())?;
            let show = |v: &[crate::exact::Term]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
            if json {
                to_json(&json!({ "spec": spec, "order": order, "s": show(&c.s), "t": show(&c.t), "zeta": show(&c.zeta) }))?
            } else {
                let mut lines = Vec::new();
                for (i, s) in c.s.iter().enumerate() {
                    let t = if i == 0 { "-".to_string() } else { c.t[i - 1].to_string() };
                    let z = c.zeta.get(i).map_or("-".to_string(), ToString::to_string);
                    lines.push(format!("n={i} s={s} t={t} zeta={z}"));
                }
                lines.join("\n")
            }
        }
        Command::ClosedForm { id, n, params, json } => {
            let ident = identity(&id)?;
            let mut v = ident.eval(n)?;
            for (k, val) in key_values(&params)? {
                match k.as_str() {
                    "x" => v = crate::exact::Term::Scalar(v.eval_at(&val.parse()?)),
                    other => {
                        if !ident.params.iter().any(|(pk, pv)| pk == other && *pv == val) {
                            return Err(Error::InvalidParameters(format!(
                                "`{other}={val}` does not match identity `{}`",
                                ident.id
                            )));
                        }
                    }
                }
            }
            if json {
                to_json(&json!({ "id": ident.id, "n": n, "value": v.to_string(), "formula": ident.formula }))?
            } else {
                v.to_string()
            }
        }
        Command::Verify { id, max, params, json, csv } => {
            let params = key_values(&params)?;
            let reports = match id {
                Some(id) => vec![verify::verify_identity(&id, max, &params)?],
                None => {
                    if !params.is_empty() {
                        return Err(Error::InvalidParameters("--param needs --id".into()));
                    }
                    verify::verify_all(max, &BTreeMap::new())?
                }
            };
            let text = if json {
                verify::to_json(&reports)?
            } else if csv {
                verify::to_csv(&reports)?.trim_end().to_string()
            } else {
                let failed = reports.iter().filter(|r| !r.passed).count();
                format!("{}{} identities, {} failed", verify::to_plain(&reports), reports.len(), failed)
            };
            return Ok(if verify::all_passed(&reports) { Outcome::Ok(text) } else { Outcome::VerifyFailed(text) });
        }
        Command::List { json } => {
            let all = registry();
            if json {
                to_json(&all.iter().map(|i| i.info()).collect::<Vec<_>>())?
            } else {
                all.iter()
                    .map(|i| format!("{:<36} {:<40} {}", i.id, i.sequence.name, i.citation))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Table { which, csv, latex, json } => {
            let t = table::build(&which)?;
            if csv {
                t.to_csv()?
            } else if latex {
                t.to_latex()
            } else if json {
                to_json(&t)?
            } else {
                t.to_plain()
            }
        }
    };
    Ok(Outcome::Ok(text))
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        if let Err(e) = load_cache(dir.as_ref()) {
            let _ = writeln!(err, "warning: ignoring number cache: {e}");
        }
    }
    let code = match execute(cli.command) {
        Ok(Outcome::Ok(text)) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Ok(Outcome::VerifyFailed(text)) => {
            let _ = writeln!(out, "{text}");
            EXIT_VERIFY
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_)
                | Error::UnknownIdentity(_)
                | Error::UnknownSequence(_)
                | Error::InvalidParameters(_)
                | Error::OutOfRange { .. } => EXIT_USAGE,
                _ => EXIT_ERROR,
            }
        }
    };
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        if let Err(e) = save_cache(dir.as_ref()) {
            let _ = writeln!(err, "warning: could not write number cache: {e}");
        }
    }
    code
}
