//! Graph interchange: graph6 and a plain adjacency-list text format.
//!
//! graph6 layout: the order `N(n)` (one byte `n + 63` for `n <= 62`, else
//! `126` followed by three 6-bit groups), then the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant bit first, each byte offset by
//! 63. The optional `>>graph6<<` header is accepted on input but never
//! written.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::{CubicGraph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TextFormat {
    Graph6,
    /// One line per vertex, `v: a b c`, 0-based.
    AdjacencyList,
}

/// A serialized graph tagged with its format.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphText {
    pub format: TextFormat,
    pub payload: Vec<u8>,
}

impl GraphText {
    pub fn graph6(payload: impl Into<Vec<u8>>) -> Self {
        GraphText {
            format: TextFormat::Graph6,
            payload: payload.into(),
        }
    }

    pub fn adjacency_list(payload: impl Into<Vec<u8>>) -> Self {
        GraphText {
            format: TextFormat::AdjacencyList,
            payload: payload.into(),
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        std::str::from_utf8(&self.payload).ok()
    }
}

pub fn parse_graph(text: &GraphText) -> Result<CubicGraph, GraphError> {
    match text.format {
        TextFormat::Graph6 => parse_graph6(&text.payload),
        TextFormat::AdjacencyList => {
            let s = std::str::from_utf8(&text.payload)
                .map_err(|_| GraphError::MalformedEncoding("payload is not UTF-8".into()))?;
            parse_adjacency_list(s)
        }
    }
}

pub fn write_graph(g: &CubicGraph, format: TextFormat) -> GraphText {
    match format {
        TextFormat::Graph6 => GraphText::graph6(encode_graph6(g)),
        TextFormat::AdjacencyList => GraphText::adjacency_list(write_adjacency_list(g)),
    }
}

pub fn parse_graph6(bytes: &[u8]) -> Result<CubicGraph, GraphError> {
    let bits = decode_graph6(bytes)?;
    CubicGraph::from_bitsets(bits)
}

/// Decodes a graph6 string into neighbourhood bitsets without checking
/// regularity.
pub fn decode_graph6(bytes: &[u8]) -> Result<Vec<u64>, GraphError> {
    let mut bytes = trim_ascii(bytes);
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::MalformedEncoding(format!(
            "byte {bad:#04x} outside the graph6 range"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(GraphError::MalformedEncoding("empty input".into())),
        [126, 126, ..] => {
            return Err(GraphError::TooLarge(usize::MAX));
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::MalformedEncoding("truncated order".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let cells = n * (n - 1) / 2;
    let expected = cells.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::MalformedEncoding(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut bits = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                bits[i] |= 1 << j;
                bits[j] |= 1 << i;
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if k % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(GraphError::MalformedEncoding("nonzero padding bits".into()));
        }
    }
    Ok(bits)
}

/// graph6 string of the graph, without header or newline.
pub fn encode_graph6(g: &CubicGraph) -> String {
    String::from_utf8(encode_graph6_bits(g.bitsets())).expect("graph6 is ASCII")
}

pub(crate) fn encode_graph6_bits(bits: &[u64]) -> Vec<u8> {
    let n = bits.len();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    encode_triangle(n, |i, j| bits[i] >> j & 1 == 1, &mut out);
    out
}

/// Appends the packed upper triangle of an `n`-vertex adjacency predicate.
pub(crate) fn encode_triangle(n: usize, adjacent: impl Fn(usize, usize) -> bool, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
}

pub fn parse_adjacency_list(text: &str) -> Result<CubicGraph, GraphError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| {
            GraphError::MalformedEncoding(format!("line {}: missing ':'", lineno + 1))
        })?;
        let v = parse_index(head, lineno)?;
        let nbrs = tail
            .split_whitespace()
            .map(|t| parse_index(t, lineno))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((v, nbrs));
    }
    let n = rows.len();
    let mut lists = vec![None; n];
    for (v, nbrs) in rows {
        if v >= n {
            return Err(GraphError::MalformedEncoding(format!(
                "vertex {v} out of range for {n} rows"
            )));
        }
        if lists[v].replace(nbrs).is_some() {
            return Err(GraphError::MalformedEncoding(format!("vertex {v} listed twice")));
        }
    }
    let lists: Vec<Vec<usize>> = lists.into_iter().map(Option::unwrap).collect();
    CubicGraph::from_adjacency_lists(&lists)
}

fn parse_index(token: &str, lineno: usize) -> Result<usize, GraphError> {
    token.trim().parse().map_err(|_| {
        GraphError::MalformedEncoding(format!("line {}: bad vertex '{}'", lineno + 1, token.trim()))
    })
}

pub fn write_adjacency_list(g: &CubicGraph) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        let [a, b, c] = g.neighbors(v);
        writeln!(out, "{v}: {a} {b} {c}").unwrap();
    }
    out
}

fn trim_ascii(mut bytes: &[u8]) -> &[u8] {
    while let [first, rest @ ..] = bytes {
        if first.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    while let [rest @ .., last] = bytes {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    bytes
}
