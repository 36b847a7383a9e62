use thiserror::Error;

use crate::element::Element;

/// The first group axiom found to fail while validating an operation table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("a group needs at least one element")]
    Empty,
    #[error("table has {rows} rows of lengths {lengths:?}; expected a {n}x{n} table")]
    Shape { n: usize, rows: usize, lengths: Vec<usize> },
    #[error("element {0} appears more than once in the roster")]
    DuplicateElement(Element),
    #[error("entry {entry} at ({x}, {y}) is not a roster index")]
    Closure { x: Element, y: Element, entry: usize },
    #[error("the first roster element {identity} does not act as identity on {witness}")]
    Identity { identity: Element, witness: Element },
    #[error("associativity fails for ({x}, {y}, {z})")]
    Associativity { x: Element, y: Element, z: Element },
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(Element),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    Axiom(#[from] AxiomViolation),
    #[error("{element} is not an element of the group")]
    NotMember { element: Element },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("group order {order} exceeds the limit of {limit}")]
    TooLarge { order: u64, limit: u64 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
