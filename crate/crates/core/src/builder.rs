//! Builder expressions: `zn <n>`, `s <n>` and `dp <builder>...`.
//!
//! `dp` takes every builder that follows it, so `dp zn 2 zn 4 s 3` is
//! `Z2 x Z4 x S3`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{cyclic_group, symmetric_group, FiniteGroup};
use crate::products::direct_product;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builder {
    Cyclic(u64),
    Symmetric(u64),
    Product(Vec<Builder>),
}

impl Builder {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            Builder::Cyclic(n) => cyclic_group(*n),
            Builder::Symmetric(n) => symmetric_group(*n),
            Builder::Product(parts) => direct_product(&build_all(parts)?),
        }
    }

    /// The factor list of a product, or the group itself as a one-element list.
    pub fn factors(&self) -> Result<Vec<FiniteGroup>> {
        match self {
            Builder::Product(parts) => build_all(parts),
            other => Ok(vec![other.build()?]),
        }
    }
}

fn build_all(parts: &[Builder]) -> Result<Vec<FiniteGroup>> {
    parts.iter().map(Builder::build).collect()
}

impl fmt::Display for Builder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builder::Cyclic(n) => write!(f, "zn {n}"),
            Builder::Symmetric(n) => write!(f, "s {n}"),
            Builder::Product(parts) => {
                f.write_str("dp")?;
                for p in parts {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn is_builder_head(token: &str) -> bool {
    matches!(token, "zn" | "s" | "dp")
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

/// Parses one builder from the front of `tokens`, returning the unused rest.
pub fn parse_builder<'a, S: AsRef<str>>(tokens: &'a [S]) -> Result<(Builder, &'a [S])> {
    let (head, rest) = tokens.split_first().ok_or_else(|| bad("expected a builder"))?;
    let number = |rest: &'a [S]| -> Result<(u64, &'a [S])> {
        let (n, rest) = rest.split_first().ok_or_else(|| bad(format!("`{}` needs a number", head.as_ref())))?;
        let n = n.as_ref().parse().map_err(|_| bad(format!("`{}` is not a number", n.as_ref())))?;
        Ok((n, rest))
    };
    match head.as_ref() {
        "zn" => number(rest).map(|(n, rest)| (Builder::Cyclic(n), rest)),
        "s" => number(rest).map(|(n, rest)| (Builder::Symmetric(n), rest)),
        "dp" => {
            let mut parts = Vec::new();
            let mut rest = rest;
            while rest.first().is_some_and(|t| is_builder_head(t.as_ref())) {
                let (b, r) = parse_builder(rest)?;
                parts.push(b);
                rest = r;
            }
            if parts.is_empty() {
                return Err(bad("`dp` needs at least one factor"));
            }
            Ok((Builder::Product(parts), rest))
        }
        other => Err(bad(format!("unknown builder `{other}`"))),
    }
}

/// Parses tokens that must form exactly one builder.
pub fn parse_builder_exact<S: AsRef<str>>(tokens: &[S]) -> Result<Builder> {
    let (b, rest) = parse_builder(tokens)?;
    match rest.first() {
        None => Ok(b),
        Some(t) => Err(bad(format!("unexpected `{}` after builder", t.as_ref()))),
    }
}
