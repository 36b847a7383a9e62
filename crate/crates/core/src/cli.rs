//! The `fingroup` command line. [`run`] returns the exit status and the text
//! to print so it can be driven from tests.

use std::fmt::Write as _;
use std::fs;

use clap::{Parser, Subcommand};

use crate::abelian::abelian_factorization;
use crate::builder::{is_builder_head, parse_builder, parse_builder_exact, Builder};
use crate::corpus::selftest;
use crate::error::Error;
use crate::format::{parse_group, parse_map, print_group};
use crate::group::FiniteGroup;
use crate::maps::{classify, homomorphism_check, GroupMap};
use crate::products::direct_product;
use crate::uniqueness::verify_unique_factorization;

#[derive(Parser, Debug)]
#[command(name = "fingroup", about = "Finite groups as operation tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the group axioms of a group file
    Validate { file: String },
    /// Order, commutativity, maximal element order and element-order counts
    Info {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        source: Vec<String>,
    },
    /// Print the group file of a builder expression (`zn 4`, `s 3`, `dp zn 2 zn 4`)
    Cayley {
        #[arg(required = true, num_args = 1..)]
        builder: Vec<String>,
    },
    /// Factor an abelian group into cyclic p-groups
    Factor {
        #[arg(required = true, num_args = 1..)]
        source: Vec<String>,
    },
    /// Check whether a map file is a homomorphism / isomorphism between two groups
    Iso { group_g: String, group_h: String, map: String },
    /// Compare factor orders of two isomorphic products: `unique <L..> -- <M..> [mapfile]`
    Unique {
        #[arg(required = true, num_args = 1..)]
        left: Vec<String>,
        #[arg(last = true, required = true, num_args = 1..)]
        right: Vec<String>,
    },
    /// Run the built-in invariant sweep
    Selftest,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("{msg}\n") }
    }
}

fn from_error(e: Error) -> Outcome {
    match e {
        Error::Parse { line: 0, msg } => Outcome::usage(format!("error: {msg}")),
        other => Outcome::fail(other),
    }
}

fn read(path: &str) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::fail(format!("cannot read {path}: {e}")))
}

fn load_group(path: &str) -> Result<FiniteGroup, Outcome> {
    parse_group(&read(path)?).map_err(|e| Outcome::fail(format!("{path}: {e}")))
}

/// A builder expression or, when the first token is not a builder, a group file.
fn group_source(tokens: &[String]) -> Result<FiniteGroup, Outcome> {
    if is_builder_head(&tokens[0]) {
        let b = parse_builder_exact(tokens).map_err(from_error)?;
        b.build().map_err(from_error)
    } else if tokens.len() == 1 {
        load_group(&tokens[0])
    } else {
        Err(Outcome::usage("error: expected a single group file or a builder expression"))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, stdout: if code == 0 { e.to_string() } else { String::new() }, stderr: if code == 0 { String::new() } else { e.to_string() } };
        }
    };
    match dispatch(cli.command) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Validate { file } => {
            let text = read(&file)?;
            Ok(match parse_group(&text) {
                Ok(g) => Outcome::ok(format!("valid group of order {}\n", g.order())),
                Err(e) => Outcome::with_code(1, format!("invalid: {e}\n")),
            })
        }
        Command::Info { source } => Ok(Outcome::ok(info(&group_source(&source)?))),
        Command::Cayley { builder } => {
            let g = parse_builder_exact(&builder).and_then(|b| b.build()).map_err(from_error)?;
            Ok(Outcome::ok(print_group(&g)))
        }
        Command::Factor { source } => {
            let g = group_source(&source)?;
            if !g.is_abelian() {
                return Err(Outcome::fail("group is not abelian"));
            }
            let f = abelian_factorization(&g).map_err(from_error)?;
            Ok(Outcome::ok(f.report()))
        }
        Command::Iso { group_g, group_h, map } => {
            let g = load_group(&group_g)?;
            let h = load_group(&group_h)?;
            let m = parse_map(&read(&map)?).map_err(|e| Outcome::fail(format!("{map}: {e}")))?;
            Ok(iso(&m, &g, &h))
        }
        Command::Unique { left, right } => unique(&left, &right),
        Command::Selftest => {
            let mut out = String::new();
            let mut all = true;
            for r in selftest() {
                all &= r.passed();
                match &r.failure {
                    None => writeln!(out, "PASS {} ({} cases)", r.name, r.cases).unwrap(),
                    Some(f) => writeln!(out, "FAIL {}: {f}", r.name).unwrap(),
                }
            }
            Ok(Outcome::with_code(if all { 0 } else { 1 }, out))
        }
    }
}

fn info(g: &FiniteGroup) -> String {
    let mut out = String::new();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "abelian: {}", g.is_abelian()).unwrap();
    writeln!(out, "max-ord: {}", g.max_ord()).unwrap();
    writeln!(out, "element orders:").unwrap();
    let mut counts = std::collections::BTreeMap::new();
    for x in g.elements() {
        *counts.entry(g.ord(x).expect("member")).or_insert(0usize) += 1;
    }
    for (k, c) in counts {
        writeln!(out, "  {k}: {c}").unwrap();
    }
    out
}

fn iso(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Outcome {
    let mut out = String::new();
    if let Err(w) = homomorphism_check(m, g, h) {
        writeln!(out, "homomorphism: false").unwrap();
        writeln!(out, "witness: {w}").unwrap();
        return Outcome::with_code(1, out);
    }
    let c = classify(m, g, h).expect("homomorphism checked");
    writeln!(out, "homomorphism: true").unwrap();
    writeln!(out, "epimorphism: {}", c.epimorphism).unwrap();
    writeln!(out, "monomorphism: {}", c.monomorphism).unwrap();
    writeln!(out, "isomorphism: {}", c.isomorphism).unwrap();
    Outcome::with_code(if c.isomorphism { 0 } else { 1 }, out)
}

fn unique(left: &[String], right: &[String]) -> Result<Outcome, Outcome> {
    let l_builder = parse_builder_exact(left).map_err(from_error)?;
    let (m_builder, rest) = parse_builder(right).map_err(from_error)?;
    let map_path = match rest {
        [] => None,
        [path] => Some(path.as_str()),
        _ => return Err(Outcome::usage("error: expected at most one map file after the second list")),
    };
    let l = l_builder.factors().map_err(from_error)?;
    let m = m_builder.factors().map_err(from_error)?;
    let map = match map_path {
        Some(path) => parse_map(&read(path)?).map_err(|e| Outcome::fail(format!("{path}: {e}")))?,
        None if factor_shape(&l_builder) == factor_shape(&m_builder) => {
            GroupMap::identity(direct_product(&l).map_err(from_error)?.elements())
        }
        None => return Err(Outcome::fail("the lists differ; supply a map file")),
    };
    let report = verify_unique_factorization(&l, &m, &map).map_err(from_error)?;
    Ok(Outcome::with_code(if report.permutation { 0 } else { 1 }, report.to_string()))
}

fn factor_shape(b: &Builder) -> Vec<String> {
    match b {
        Builder::Product(parts) => parts.iter().map(Builder::to_string).collect(),
        other => vec![other.to_string()],
    }
}
