//! Group elements as tree-structured values.
//!
//! An [`Element`] is an atom (a natural number or a short symbol) or a finite
//! sequence of elements. Cosets and direct-product tuples are sequences, so
//! quotients of quotients and products of products nest naturally.
//!
//! The textual label syntax is `12`, `e`, `(0 1)`, `((0 2) (1 3))`, `()`.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(u64),
    Sym(String),
    Seq(Vec<Element>),
}

impl Element {
    pub fn seq(items: impl IntoIterator<Item = Element>) -> Self {
        Element::Seq(items.into_iter().collect())
    }

    /// Shorthand for a sequence of integer atoms.
    pub fn ints(items: impl IntoIterator<Item = u64>) -> Self {
        Element::Seq(items.into_iter().map(Element::Int).collect())
    }

    pub fn as_seq(&self) -> Option<&[Element]> {
        match self {
            Element::Seq(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            Element::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Element::Seq(items) => 1 + items.iter().map(Element::depth).max().unwrap_or(0),
            _ => 0,
        }
    }
}

impl From<u64> for Element {
    fn from(v: u64) -> Self {
        Element::Int(v)
    }
}

impl From<&str> for Element {
    fn from(s: &str) -> Self {
        Element::Sym(s.to_owned())
    }
}

impl From<Vec<Element>> for Element {
    fn from(v: Vec<Element>) -> Self {
        Element::Seq(v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            Element::Sym(s) => f.write_str(s),
            Element::Seq(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelError(pub String);

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for LabelError {}

fn is_symbol_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '*' | '$' | '.' | '\'')
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.char_indices().peekable(), src }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.chars.peek().is_none()
    }

    fn element(&mut self) -> Result<Element, LabelError> {
        self.skip_ws();
        match self.chars.peek().copied() {
            None => Err(LabelError("unexpected end of label".into())),
            Some((_, '(')) => {
                self.chars.next();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.chars.peek() {
                        Some((_, ')')) => {
                            self.chars.next();
                            return Ok(Element::Seq(items));
                        }
                        None => return Err(LabelError("unclosed '('".into())),
                        _ => items.push(self.element()?),
                    }
                }
            }
            Some((_, ')')) => Err(LabelError("unexpected ')'".into())),
            Some((start, c)) if is_symbol_char(c) => {
                let mut end = start;
                while let Some(&(i, c)) = self.chars.peek() {
                    if !is_symbol_char(c) {
                        break;
                    }
                    end = i + c.len_utf8();
                    self.chars.next();
                }
                let word = &self.src[start..end];
                if word.chars().all(|c| c.is_ascii_digit()) {
                    word.parse::<u64>()
                        .map(Element::Int)
                        .map_err(|e| LabelError(format!("bad integer {word:?}: {e}")))
                } else {
                    Ok(Element::Sym(word.to_owned()))
                }
            }
            Some((_, c)) => Err(LabelError(format!("unexpected character {c:?}"))),
        }
    }
}

/// Parses a whitespace-separated list of labels, e.g. a roster line.
pub fn parse_labels(src: &str) -> Result<Vec<Element>, LabelError> {
    let mut parser = Parser::new(src);
    let mut out = Vec::new();
    while !parser.at_end() {
        out.push(parser.element()?);
    }
    Ok(out)
}

impl FromStr for Element {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        let e = parser.element()?;
        if !parser.at_end() {
            return Err(LabelError(format!("trailing input after label in {s:?}")));
        }
        Ok(e)
    }
}
