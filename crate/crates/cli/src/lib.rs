//! The `pim` command line. Every subcommand is a thin adapter over `pim_core`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use pim_core::kuratowski::{classify_orbit, fmt_set, max_point_orbit, parse_topology, validate_topology, OrbitClass};
use pim_core::{
    build, congruence_monoid, hilbert, hilbert_truncated, isomorphic, order, parse_equation,
    parse_word_pair, reduce_presentation, CanonicalPresentation, Error, FiniteMonoid,
    GenericEquation, OracleOutcome,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "pim", about = "Monoids generated by one involution (D) and one idempotent (B)")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce relations to their canonical class.
    Classify { relations: Vec<String> },
    /// Order of the presented monoid.
    Order { relations: Vec<String> },
    /// Coefficients of the length-graded series.
    Hilbert {
        relations: Vec<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Multiplication table of the presented monoid.
    Table { relations: Vec<String> },
    /// Compare two presentations separated by `--`.
    Iso {
        left: Vec<String>,
        #[arg(last = true)]
        right: Vec<String>,
    },
    /// Bounded congruence closure on explicit relations.
    Oracle {
        relations: Vec<String>,
        #[arg(long)]
        bound: usize,
    },
    /// Closure/complement monoid of a finite topology file.
    Kuratowski { file: PathBuf },
}

/// Failure with its exit status: 1 for usage and parse errors, 2 for domain errors.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Syntax { .. } | Error::TrivialEquation(_) | Error::TopologyFormat { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

enum Output {
    Text(String),
    Json(Value),
}

fn parse_all(relations: &[String]) -> Result<Vec<GenericEquation>, Error> {
    relations.iter().map(|r| parse_equation(r)).collect()
}

fn presentation(relations: &[String]) -> Result<CanonicalPresentation, Error> {
    Ok(reduce_presentation(&parse_all(relations)?))
}

fn presentation_json(c: &CanonicalPresentation) -> Value {
    match c {
        CanonicalPresentation::Free => json!({ "kind": "free" }),
        CanonicalPresentation::Monogenic(items) => json!({
            "kind": "monogenic",
            "items": items.iter().map(|(item, k)| json!({ "item": item, "k": k })).collect::<Vec<_>>(),
        }),
        CanonicalPresentation::Classified(p) => json!({
            "kind": "classified",
            "family": p.family().to_string(),
            "parity": p.parity().to_string(),
            "k": p.k(),
            "ell": p.ell(),
        }),
    }
}

fn monoid_json(m: &FiniteMonoid) -> Value {
    json!({
        "order": m.order(),
        "elements": m.elements().iter().map(|w| w.to_token()).collect::<Vec<_>>(),
        "table": m.table(),
    })
}

fn execute(command: &Command, as_json: bool) -> Result<Output, Failure> {
    let text = |s: String| Ok(Output::Text(s));
    match command {
        Command::Classify { relations } => {
            let c = presentation(relations)?;
            let ord = match &c {
                CanonicalPresentation::Classified(_) => Some(order(&c)?),
                _ => None,
            };
            if as_json {
                return Ok(Output::Json(json!({ "presentation": presentation_json(&c), "order": ord })));
            }
            let mut out = format!("{c}\n");
            if let Some(n) = ord {
                out.push_str(&format!("order={n}\n"));
            }
            text(out)
        }
        Command::Order { relations } => {
            let n = order(&presentation(relations)?)?;
            if as_json {
                return Ok(Output::Json(json!({ "order": n })));
            }
            text(format!("order={n}\n"))
        }
        Command::Hilbert { relations, max_degree } => {
            let c = presentation(relations)?;
            let h = match max_degree {
                Some(d) => hilbert_truncated(&c, *d)?,
                None => hilbert(&c)?,
            };
            if as_json {
                return Ok(Output::Json(json!({ "coeffs": h.coeffs() })));
            }
            let coeffs: Vec<String> = h.coeffs().iter().map(u64::to_string).collect();
            text(format!("hilbert={}\n", coeffs.join(" ")))
        }
        Command::Table { relations } => {
            let m = build(&presentation(relations)?)?;
            if as_json {
                return Ok(Output::Json(monoid_json(&m)));
            }
            text(m.serialize())
        }
        Command::Iso { left, right } => {
            let same = isomorphic(&presentation(left)?, &presentation(right)?)?;
            if as_json {
                return Ok(Output::Json(json!({ "isomorphic": same })));
            }
            text(format!("{same}\n"))
        }
        Command::Oracle { relations, bound } => {
            let pairs = relations
                .iter()
                .map(|r| parse_word_pair(r))
                .collect::<Result<Vec<_>, _>>()?;
            let outcome = congruence_monoid(&pairs, *bound)?;
            match (outcome, as_json) {
                (OracleOutcome::Finite(m), false) => text(m.serialize()),
                (OracleOutcome::Finite(m), true) => Ok(Output::Json(monoid_json(&m))),
                (OracleOutcome::Undetermined, false) => text(format!("undetermined at bound {bound}\n")),
                (OracleOutcome::Undetermined, true) => {
                    Ok(Output::Json(json!({ "undetermined": true, "bound": bound })))
                }
            }
        }
        Command::Kuratowski { file } => {
            let content = std::fs::read_to_string(file).map_err(|e| Failure {
                code: 1,
                message: format!("cannot read {}: {e}", file.display()),
            })?;
            let t = parse_topology(&content)?;
            if let Err(v) = validate_topology(&t) {
                return Err(Error::InvalidTopology(v.to_string()).into());
            }
            let report = classify_orbit(&t)?;
            let (subset, orbit) = max_point_orbit(&t)?;
            let class = match &report.class {
                OrbitClass::Classified(c) => c.to_string(),
                OrbitClass::Monogenic => "monogenic".to_string(),
                OrbitClass::Other => "other".to_string(),
            };
            if as_json {
                return Ok(Output::Json(json!({
                    "convention": "left-to-right",
                    "order": report.order,
                    "class": class,
                    "max_orbit": orbit,
                    "subset": fmt_set(subset),
                })));
            }
            text(format!(
                "convention=left-to-right (DB applies complement, then closure)\n{report}max_orbit={orbit}\nsubset={}\n",
                fmt_set(subset)
            ))
        }
    }
}

/// Runs one invocation and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                1
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(&cli.command, cli.json) {
        Ok(Output::Text(s)) => {
            let _ = write!(out, "{s}");
            0
        }
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{v}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
