//! Text formats for groups and maps.
//!
//! Group file:
//!
//! ```text
//! group 4
//! 0 1 2 3
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! ```
//!
//! The second line is the roster (identity first); the remaining `n` lines are
//! the table as zero-based roster indices. Map files hold one `x -> y` pair per
//! line. Both use the element label syntax of [`Element`].

use std::fmt::Write as _;

use crate::element::{parse_labels, Element};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::maps::GroupMap;

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

pub fn print_group(g: &FiniteGroup) -> String {
    let mut out = String::new();
    writeln!(out, "group {}", g.order()).unwrap();
    let labels: Vec<String> = g.elements().iter().map(Element::to_string).collect();
    writeln!(out, "{}", labels.join(" ")).unwrap();
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

/// Parses and validates a group file.
pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let Some((ln, header)) = lines.next() else {
        return parse_err(1, "empty group file");
    };
    let mut words = header.split_whitespace();
    if words.next() != Some("group") {
        return parse_err(ln, "expected `group <n>`");
    }
    let n: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(n)), None) => n,
        _ => return parse_err(ln, "expected `group <n>`"),
    };
    let Some((ln, roster_line)) = lines.next() else {
        return parse_err(ln + 1, "missing roster line");
    };
    let roster = parse_labels(roster_line).or_else(|e| parse_err(ln, e.0))?;
    if roster.len() != n {
        return parse_err(ln, format!("roster has {} labels, header says {n}", roster.len()));
    }
    let mut table = Vec::with_capacity(n);
    for (ln, line) in lines.by_ref().take(n) {
        let row = line
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .or_else(|e| parse_err(ln, format!("bad table entry: {e}")))?;
        table.push(row);
    }
    if table.len() != n {
        return parse_err(text.lines().count(), format!("expected {n} table rows, found {}", table.len()));
    }
    if let Some((ln, _)) = lines.next() {
        return parse_err(ln, "trailing content after the table");
    }
    FiniteGroup::new(roster, table)
}

pub fn print_map(m: &GroupMap) -> String {
    m.pairs().iter().map(|(x, y)| format!("{x} -> {y}\n")).collect()
}

pub fn parse_map(text: &str) -> Result<GroupMap> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return parse_err(ln, "expected `x -> y`");
        };
        let x = lhs.trim().parse::<Element>().or_else(|e| parse_err(ln, e.0))?;
        let y = rhs.trim().parse::<Element>().or_else(|e| parse_err(ln, e.0))?;
        pairs.push((x, y));
    }
    GroupMap::from_pairs(pairs)
}
