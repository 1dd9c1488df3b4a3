//! graph6 codec (short form only, order <= 62) and corpus file reading.
//!
//! The first byte is `63 + n`. The upper triangle follows column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte (most significant
//! first), zero padded, each group stored as `63 + value`.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("unsupported length: extended graph6 size forms (order > 62) are not supported")]
    UnsupportedLength,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable range [63, 126]")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 order 0 is not a valid graph")]
    ZeroOrder,
    #[error("malformed length: order {order} needs {expected} data bytes, found {found}")]
    MalformedLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("order {0} cannot be encoded in short graph6 form")]
    OrderTooLarge(usize),
}

fn data_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. Trailing whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }
    if head == 126 {
        return Err(Graph6Error::UnsupportedLength);
    }
    let order = (head - 63) as usize;
    if order == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let expected = data_len(order);
    if data.len() != expected {
        return Err(Graph6Error::MalformedLength {
            order,
            expected,
            found: data.len(),
        });
    }
    let mut g = Graph::empty(order).expect("order >= 1");
    let mut bit = 0usize;
    for j in 1..order {
        for i in 0..j {
            let group = data[bit / 6] - 63;
            if group & (0b100000 >> (bit % 6)) != 0 {
                g.add_edge(i, j).expect("indices in range");
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph of order at most 62.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let order = g.order();
    if order > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(order));
    }
    let mut out = Vec::with_capacity(1 + data_len(order));
    out.push(63 + order as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..order {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// A corpus line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

/// Parses a corpus: one graph6 string per line, `#` comments and blank
/// lines skipped. Bad lines become diagnostics and parsing continues.
/// Graphs are labelled `{label}:{line}`.
pub fn parse_corpus(text: &str, label: &str) -> (Vec<Graph>, Vec<Diagnostic>) {
    let mut graphs = Vec::new();
    let mut diagnostics = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push(g.with_name(format!("{label}:{}", idx + 1))),
            Err(e) => diagnostics.push(Diagnostic {
                line: idx + 1,
                message: e.to_string(),
            }),
        }
    }
    (graphs, diagnostics)
}

pub fn read_corpus(path: &Path) -> std::io::Result<(Vec<Graph>, Vec<Diagnostic>)> {
    let text = fs::read_to_string(path)?;
    let label = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(parse_corpus(&text, &label))
}
