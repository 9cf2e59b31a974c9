//! Short-form graph6: one printable-ASCII line per graph, first byte
//! `n + 63` for `n <= 62`, then the upper-triangle bits in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian six bits per byte
//! with 63 added to each byte, zero-padded to a whole byte.

use std::fmt;

use cospec::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    LongFormUnsupported,
    NonPrintableByte { index: usize, byte: u8 },
    Truncated { expected: usize, got: usize },
    TrailingBytes { expected: usize, got: usize },
    TooLarge { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::LongFormUnsupported => {
                write!(f, "long-form graph6 headers are not supported (n > 62)")
            }
            Graph6Error::NonPrintableByte { index, byte } => {
                write!(f, "byte {byte:#04x} at position {index} is outside the graph6 range")
            }
            Graph6Error::Truncated { expected, got } => {
                write!(f, "expected {expected} bit bytes, found {got}")
            }
            Graph6Error::TrailingBytes { expected, got } => {
                write!(f, "expected {expected} bit bytes, found {got}")
            }
            Graph6Error::TooLarge { n } => {
                write!(f, "{n} vertices does not fit short-form graph6 (max 62)")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Number of payload bytes for `n` vertices.
fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintableByte { index, byte });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongFormUnsupported);
    }
    let n = (bytes[0] - 63) as usize;
    let expected = payload_len(n);
    let got = bytes.len() - 1;
    if got < expected {
        return Err(Graph6Error::Truncated { expected, got });
    }
    if got > expected {
        return Err(Graph6Error::TrailingBytes { expected, got });
    }
    let mut g = Graph::empty(n).expect("n <= 62");
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(u, v).expect("in range, no loops");
            }
            bit += 1;
            if bit == n * (n - 1) / 2 {
                break 'outer;
            }
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = vec![n as u8 + 63];
    out.resize(1 + payload_len(n), 63);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}
