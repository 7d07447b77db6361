//! The `ppoly` command line.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes: 0 on
//! success, 1 when a checked claim fails, 2 on usage or input errors, 3 when
//! a search or enumeration budget is exhausted.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{chain_polytope, gamma, omega, order_polytope};
use crate::ehrhart::{self, Exact};
use crate::error::{Error, Result};
use crate::groebner::{self, Family};
use crate::io;
use crate::reflexive::{self, NormalityOptions, ReportOptions};
use crate::worked_examples::{self, ExampleOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ppoly", version, about = "Reflexive polytopes from order and chain polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Order,
    Chain,
    GammaOo,
    GammaOc,
    GammaCc,
    OmegaOo,
    OmegaOc,
    OmegaCc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VolumeMethod {
    Ehrhart,
    Linext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Oo,
    Oc,
    Cc,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Oo => Family::OO,
            FamilyArg::Oc => Family::OC,
            FamilyArg::Cc => Family::CC,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a polytope from one poset (order, chain) or two (gamma, omega).
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Poset as a JSON file, inline JSON, or @fixture.
        p: String,
        q: Option<String>,
        /// Write the polytope here instead of stdout.
        #[arg(short, long)]
        output: Option<std::path::PathBuf>,
    },
    /// Report invariants of a polytope; with no selection flags, all of them.
    Analyze {
        polytope: String,
        #[arg(long)]
        reflexive: bool,
        #[arg(long)]
        normal: bool,
        #[arg(long)]
        f_vector: bool,
        #[arg(long)]
        ehrhart: bool,
        /// Highest dilation checked for normality.
        #[arg(long)]
        max_level: Option<u32>,
        /// Cap on the number of points held at any normality level.
        #[arg(long, default_value_t = NormalityOptions::default().point_budget)]
        point_budget: u64,
    },
    /// Ehrhart polynomial of a polytope.
    Ehrhart { polytope: String },
    /// Volume of the omega polytopes of two posets.
    Volume {
        p: String,
        q: String,
        #[arg(long = "method", value_enum, default_values_t = vec![VolumeMethod::Ehrhart, VolumeMethod::Linext])]
        methods: Vec<VolumeMethod>,
    },
    /// Verify an explicit Gröbner basis family for two posets.
    Groebner {
        p: String,
        q: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = groebner::DEFAULT_DEGREE)]
        degree: u32,
    },
    /// Classify reflexive polygons up to unimodular equivalence.
    Classify2d,
    /// Replay the worked examples and report each claim.
    PaperExamples {
        /// Stop the non-normality search at level 3.
        #[arg(long)]
        shallow: bool,
    },
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::SearchBudgetExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Overflow => EXIT_CLAIM_FAILED,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::CycleDetected(..) => "cycle_detected",
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::UnsupportedSize(_) => "unsupported_size",
        Error::NotAnIdeal => "not_an_ideal",
        Error::DimensionMismatch(..) => "dimension_mismatch",
        Error::NoCommonLinearExtension => "no_common_linear_extension",
        Error::EmptyInput => "empty_input",
        Error::NotFullDimensional { .. } => "not_full_dimensional",
        Error::SearchBudgetExceeded { .. } => "search_budget_exceeded",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Overflow => "overflow",
        Error::Parse(_) => "parse",
    }
}

fn error_object(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn print(out: &mut dyn Write, v: &impl Serialize) {
    let text = serde_json::to_string_pretty(v).expect("reports serialize");
    // A closed pipe is not worth a panic.
    let _ = writeln!(out, "{text}");
}

fn build(kind: Kind, p: &str, q: Option<&str>) -> Result<crate::LatticePolytope> {
    let p = io::load_poset(p)?;
    let second = || -> Result<crate::Poset> {
        match q {
            Some(q) => io::load_poset(q),
            None => Ok(p.clone()),
        }
    };
    match kind {
        Kind::Order => Ok(order_polytope(&p)),
        Kind::Chain => Ok(chain_polytope(&p)),
        Kind::GammaOo => gamma(&order_polytope(&p), &order_polytope(&second()?)),
        Kind::GammaOc => gamma(&order_polytope(&p), &chain_polytope(&second()?)),
        Kind::GammaCc => gamma(&chain_polytope(&p), &chain_polytope(&second()?)),
        Kind::OmegaOo => omega(&order_polytope(&p), &order_polytope(&second()?)),
        Kind::OmegaOc => omega(&order_polytope(&p), &chain_polytope(&second()?)),
        Kind::OmegaCc => omega(&chain_polytope(&p), &chain_polytope(&second()?)),
    }
}

/// Runs one subcommand, returning the document to print and the exit code.
fn execute(cmd: Command) -> Result<(Value, i32)> {
    match cmd {
        Command::Build { kind, p, q, output } => {
            let poly = build(kind, &p, q.as_deref())?;
            let text = io::polytope_to_json(&poly);
            match output {
                Some(path) => {
                    std::fs::write(&path, format!("{text}\n"))
                        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    Ok((json!({ "written": path.display().to_string(), "vertices": poly.vertices().len() }), EXIT_OK))
                }
                None => Ok((serde_json::from_str(&text).expect("valid JSON"), EXIT_OK)),
            }
        }
        Command::Analyze { polytope, reflexive, normal, f_vector, ehrhart, max_level, point_budget } => {
            let poly = io::load_polytope(&polytope)?;
            let all = !(reflexive || normal || f_vector || ehrhart);
            let opts = ReportOptions {
                reflexive: all || reflexive,
                normality: (all || normal).then(|| NormalityOptions { max_level, point_budget }),
                f_vector: all || f_vector,
                ehrhart: all || ehrhart,
            };
            let report = reflexive::analysis_report(&poly, &polytope, &opts)?;
            Ok((to_value(&report), EXIT_OK))
        }
        Command::Ehrhart { polytope } => {
            let poly = io::load_polytope(&polytope)?;
            let e = ehrhart::ehrhart_polynomial(&poly)?;
            Ok((
                json!({
                    "input": polytope,
                    "coefficients": e,
                    "polynomial": e.to_string(),
                    "normalized_volume": e.normalized_volume().to_string(),
                }),
                EXIT_OK,
            ))
        }
        Command::Volume { p, q, methods } => {
            let (pp, qq) = (io::load_poset(&p)?, io::load_poset(&q)?);
            let mut doc = serde_json::Map::new();
            let mut values = Vec::new();
            if methods.contains(&VolumeMethod::Ehrhart) {
                let v = ehrhart::volume(&omega(&order_polytope(&pp), &chain_polytope(&qq))?)?;
                doc.insert("ehrhart".into(), to_value(&Exact(v.clone())));
                values.push(v);
            }
            if methods.contains(&VolumeMethod::Linext) {
                let v = ehrhart::volume_omega_formula(&pp, &qq, false)?;
                doc.insert("linext".into(), to_value(&Exact(v.clone())));
                values.push(v);
            }
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            if values.len() > 1 {
                doc.insert("cross_check".into(), json!(agree));
            }
            Ok((Value::Object(doc), if agree { EXIT_OK } else { EXIT_CLAIM_FAILED }))
        }
        Command::Groebner { p, q, family, degree } => {
            let (pp, qq) = (io::load_poset(&p)?, io::load_poset(&q)?);
            let report = groebner::verify_family(family.into(), &pp, &qq, degree)?;
            let code = if report.ok { EXIT_OK } else { EXIT_CLAIM_FAILED };
            Ok((to_value(&report), code))
        }
        Command::Classify2d => {
            let census = reflexive::classify_reflexive_2d()?;
            Ok((to_value(&census), EXIT_OK))
        }
        Command::PaperExamples { shallow } => {
            let opts = ExampleOptions { deepen: !shallow, ..Default::default() };
            let claims = worked_examples::all_claims(&opts)?;
            let pass = claims.iter().all(|c| c.pass);
            let code = if pass { EXIT_OK } else { EXIT_CLAIM_FAILED };
            Ok((json!({ "pass": pass, "claims": claims }), code))
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its JSON output to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            print(out, &error_object("usage", &e.to_string()));
            return EXIT_USAGE;
        }
    };
    match execute(cli.command) {
        Ok((doc, code)) => {
            print(out, &doc);
            code
        }
        Err(e) => {
            print(out, &error_object(error_kind(&e), &e.to_string()));
            error_code(&e)
        }
    }
}
