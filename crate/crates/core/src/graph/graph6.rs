//! graph6 encoding for graphs on at most 31 vertices.
//!
//! The header is a single byte `n + 63`; the body packs the upper triangle
//! column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte
//! (most significant first) offset by 63, zero padded.

use std::io::{BufRead, Write};

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("invalid graph6 header byte {0:#04x}")]
    BadHeader(u8),
    #[error("graph6 record declares {0} vertices; at most 31 are supported")]
    OutOfRange(usize),
    #[error("graph6 body has {got} bytes, expected {expected}")]
    Truncated { expected: usize, got: usize },
    #[error("invalid graph6 body byte {0:#04x}")]
    BadByte(u8),
    #[error("nonzero padding bits in graph6 body")]
    Padding,
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&head) {
        return Err(Graph6Error::BadHeader(head));
    }
    if head == 126 {
        // Multi-byte sizes start at 63 vertices.
        return Err(Graph6Error::OutOfRange(63));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::OutOfRange(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Graph6Error::BadByte(b));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut g = Graph::empty(n).expect("n checked above");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads one graph per non-blank line.
pub fn read_graph6<R: BufRead>(reader: R) -> crate::Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(from_graph6(&line)?);
    }
    Ok(out)
}

pub fn write_graph6<'a, W: Write>(
    mut w: W,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> std::io::Result<()> {
    for g in graphs {
        writeln!(w, "{}", to_graph6(g))?;
    }
    Ok(())
}
