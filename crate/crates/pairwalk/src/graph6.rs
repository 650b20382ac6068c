//! The graph6 text format: one graph per line, a size byte `n + 63`, then
//! the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte offset by 63.
//!
//! Only the short form (`n <= 62`) is read; graphs wider than
//! [`MAX_VERTICES`] are rejected after decoding.

use pairwalk_core::graph::MAX_VERTICES;
use pairwalk_core::Graph;
use thiserror::Error;

/// Largest order representable with a one-byte header.
pub const SHORT_FORM_LIMIT: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("malformed size byte {0:#04x}")]
    Header(u8),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    Byte { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes for the declared order, found {got}")]
    Length { expected: usize, got: usize },
    #[error("padding bits after the adjacency data are not zero")]
    TrailingBits,
    #[error("graph order {n} outside the supported range 1..={max}", max = MAX_VERTICES)]
    Order { n: usize },
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Order and edge list of a short-form graph6 line, for any `n <= 62`.
/// Surrounding whitespace and a leading `>>graph6<<` marker are ignored.
pub fn decode_edges(line: &str) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + SHORT_FORM_LIMIT as u8).contains(&head) {
        return Err(Graph6Error::Header(head));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            got: data.len(),
        });
    }
    let mut values = Vec::with_capacity(expected);
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Byte { offset: k + 1, byte: b });
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let (n, edges) = decode_edges(line)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::Order { n });
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are simple and in range"))
}

/// One decoded graph or error per nonblank line, with 1-based line numbers.
pub fn read_corpus(text: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, decode(l)))
        .collect()
}
