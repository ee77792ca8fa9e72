//! graph6 reader and writer.
//!
//! A graph6 string is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix, read column by column (`(0,1), (0,2), (1,2), (0,3), ..`),
//! packed six bits per byte, each byte offset by 63. Orders up to 62 take one
//! byte; 63 and 64 use the `~` prefix with three 6-bit bytes.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} unexpected trailing bytes")]
    TrailingData { extra: usize },
    #[error("order {0} exceeds the capacity of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("read error: {0}")]
    Io(String),
}

fn payload_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string (no header, no trailing newline).
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|&(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { position, byte });
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // Eight-byte form, orders above 258047.
        return Err(Graph6Error::OrderTooLarge(258048));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let payload = &bytes[header_len..];
    let expected = payload_bytes(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: payload.len() - expected,
        });
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric"))
}

/// Encodes `g` with its own labelling (no canonization).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_bytes(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                acc |= 0x20 >> (k % 6);
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Lines of a graph6 stream, numbered from 1.
///
/// Blank lines are skipped and a leading `>>graph6<<` header is stripped.
/// Decode errors are yielded in place so the caller can report and carry on.
pub fn read_stream<R: BufRead>(
    source: R,
) -> impl Iterator<Item = (usize, Result<Graph, Graph6Error>)> {
    read_stream_raw(source).map(|(no, line)| (no, line.and_then(|l| parse_graph6(&l))))
}

/// Like [`read_stream`] but yields the stripped text of each line as well.
pub fn read_stream_raw<R: BufRead>(
    source: R,
) -> impl Iterator<Item = (usize, Result<String, Graph6Error>)> {
    source.lines().enumerate().filter_map(|(i, line)| {
        let no = i + 1;
        match line {
            Err(e) => Some((no, Err(Graph6Error::Io(e.to_string())))),
            Ok(text) => {
                let text = text.trim_end_matches(['\r', '\n']);
                let text = text.strip_prefix(HEADER).unwrap_or(text).trim();
                if text.is_empty() {
                    None
                } else {
                    Some((no, Ok(text.to_string())))
                }
            }
        }
    })
}
