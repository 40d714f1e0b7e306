//! Text formats: graph6 and a plain edge list (`n` on the first line, then
//! one `u v` pair per line, 0-indexed).

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(GraphFormat::Graph6),
            "txt" | "el" | "edges" | "edgelist" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }

    /// Guesses the format from content: an edge list starts with a decimal
    /// vertex count alone on its line.
    pub fn sniff(text: &str) -> Self {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        // graph6 bytes are >= 63, so a digit-only line cannot be graph6
        if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            other => Err(format!(
                "unknown graph format `{other}` (expected graph6 or edge-list)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} is outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("truncated input")]
    Truncated,
    #[error("unexpected trailing data")]
    Trailing,
    #[error("nonzero padding bits")]
    Padding,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("malformed edge line: {0}")]
    EdgeLine(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

/// Decodes a single graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(base, ParseErrorKind::Empty));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(ParseError::new(base + i, ParseErrorKind::BadByte(bytes[i])));
    }
    let sextet = |i: usize| -> Result<u64, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as u64)
            .ok_or_else(|| ParseError::new(base + bytes.len(), ParseErrorKind::Truncated))
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0u64, |acc, i| Ok::<_, ParseError>(acc << 6 | sextet(i)?))?;
        if n < 63 {
            return Err(ParseError::new(
                base,
                ParseErrorKind::Header(format!("long form used for n={n}")),
            ));
        }
        (n as usize, 4)
    } else {
        let n = (2..8).try_fold(0u64, |acc, i| Ok::<_, ParseError>(acc << 6 | sextet(i)?))?;
        if n <= 258_047 {
            return Err(ParseError::new(
                base,
                ParseErrorKind::Header(format!("long form used for n={n}")),
            ));
        }
        (n as usize, 8)
    };

    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(ParseError::new(
            base + bytes.len(),
            ParseErrorKind::Truncated,
        ));
    }
    if bytes.len() > pos + needed {
        return Err(ParseError::new(
            base + pos + needed,
            ParseErrorKind::Trailing,
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + k / 6] - 63) as u64;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += needed;
    if total_bits % 6 != 0 {
        let last = (bytes[pos - 1] - 63) as u64;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::new(base + pos - 1, ParseErrorKind::Padding));
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format. Blank lines and lines starting with `#` are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len();
            Some((start, line.trim_end_matches(['\n', '\r'])))
        })
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (off, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, ParseErrorKind::Empty))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| ParseError::new(off, ParseErrorKind::Header(header.trim().to_string())))?;
    let mut g = Graph::empty(n);
    for (off, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = parsed.ok_or_else(|| {
            ParseError::new(off, ParseErrorKind::EdgeLine(line.trim().to_string()))
        })?;
        g.try_add_edge(u, v)
            .map_err(|e| ParseError::new(off, e.into()))?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
