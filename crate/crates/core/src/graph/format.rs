//! Plain-text graph files.
//!
//! ```text
//! c optional comments anywhere
//! p gp <n> <m>
//! e <u> <v>        (m lines, 0-based ids)
//! ```
//!
//! Comment lines of the form `c label <v> <text>` carry vertex labels. The
//! writer emits the header, then labels (if requested), then edges with
//! `u < v` in ascending order.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p gp <n> <m>` header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, String)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("c") => {
                if toks.next() == Some("label") {
                    let v = number(toks.next(), lineno, "label vertex")?;
                    let text = toks.collect::<Vec<_>>().join(" ");
                    labels.push((lineno, v, text));
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(lineno, "duplicate header"));
                }
                if toks.next() != Some("gp") {
                    return Err(syntax(lineno, "header must read `p gp <n> <m>`"));
                }
                let n = number(toks.next(), lineno, "vertex count")?;
                let m = number(toks.next(), lineno, "edge count")?;
                if toks.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens in header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(syntax(lineno, "edge before header"));
                }
                let u = number(toks.next(), lineno, "endpoint")?;
                let v = number(toks.next(), lineno, "endpoint")?;
                if toks.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens in edge line"));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(syntax(lineno, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    let g = Graph::new(n, &edges)?;
    if labels.is_empty() {
        return Ok(g);
    }
    let mut text: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (lineno, v, t) in labels {
        if v >= n {
            return Err(syntax(lineno, format!("label for vertex {v} outside 0..{n}")));
        }
        text[v] = t;
    }
    Ok(g.with_labels(text)?)
}

/// Serialises `g`; byte-identical output for identical graphs.
pub fn write_graph<W: Write>(g: &Graph, mut out: W, with_labels: bool) -> io::Result<()> {
    out.write_all(to_text(g, with_labels).as_bytes())
}

pub(crate) fn to_text(g: &Graph, with_labels: bool) -> String {
    let mut s = String::new();
    writeln!(s, "p gp {} {}", g.order(), g.size()).unwrap();
    if with_labels {
        for v in 0..g.order() {
            writeln!(s, "c label {v} {}", g.label(v)).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}
