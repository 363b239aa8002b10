//! graph6 encoding of undirected simple graphs.
//!
//! A record is the order `n` (one byte `n + 63` for `n < 63`, otherwise
//! `'~'` followed by three 6-bit groups, or `"~~"` followed by six) and then
//! the upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most significant
//! bit first, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use super::Graph;

pub const HEADER: &str = ">>graph6<<";

const LARGEST_SHORT: usize = 62;
const LARGEST_MEDIUM: usize = 258_047;
const LARGEST_LONG: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("record truncated at offset {offset}: expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}: expected {expected} bytes")]
    TrailingData { offset: usize, expected: usize },
    #[error("order {0} cannot be encoded")]
    OrderTooLarge(usize),
}

fn push_sixes(out: &mut Vec<u8>, value: usize, groups: usize) {
    for i in (0..groups).rev() {
        out.push(((value >> (6 * i)) & 0x3f) as u8 + 63);
    }
}

pub fn encode_bytes(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    match n {
        0..=LARGEST_SHORT => out.push(n as u8 + 63),
        ..=LARGEST_MEDIUM => {
            out.push(126);
            push_sixes(&mut out, n, 3);
        }
        ..=LARGEST_LONG => {
            out.extend_from_slice(&[126, 126]);
            push_sixes(&mut out, n, 6);
        }
        _ => return Err(Graph6Error::OrderTooLarge(n)),
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(out)
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn encode(g: &Graph) -> String {
    let bytes = encode_bytes(g).expect("graph order fits graph6");
    // every byte lies in 63..=126
    String::from_utf8(bytes).unwrap()
}

fn sixes(data: &[u8], at: usize, groups: usize) -> Result<usize, Graph6Error> {
    let mut v = 0usize;
    for i in 0..groups {
        let Some(&b) = data.get(at + i) else {
            return Err(Graph6Error::Truncated {
                offset: data.len(),
                expected: at + groups,
            });
        };
        v = (v << 6) | usize::from(b - 63);
    }
    Ok(v)
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and a trailing
/// newline (`\n` or `\r\n`) are accepted; bit positions beyond the last
/// pair are ignored. Error offsets index into `input`.
pub fn decode(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = input;
    let mut base = 0;
    if data.starts_with(HEADER.as_bytes()) {
        data = &data[HEADER.len()..];
        base = HEADER.len();
    }
    if let Some(rest) = data.strip_suffix(b"\n") {
        data = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::ByteOutOfRange {
            offset: base + pos,
            byte: data[pos],
        });
    }
    let shift = |e: Graph6Error| match e {
        Graph6Error::Truncated { offset, expected } => Graph6Error::Truncated {
            offset: base + offset,
            expected: base + expected,
        },
        other => other,
    };
    let (n, mut at) = if data[0] != 126 {
        (usize::from(data[0] - 63), 1)
    } else if data.get(1) != Some(&126) {
        (sixes(data, 1, 3).map_err(shift)?, 4)
    } else {
        (sixes(data, 2, 6).map_err(shift)?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = at + bits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: base + data.len(),
            expected: base + expected,
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: base + expected,
            expected: base + expected,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == bits {
                break 'outer;
            }
            let byte = data[at + k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    at += bits.div_ceil(6);
    debug_assert_eq!(at, data.len());
    Ok(Graph::from_edges(n, edges).expect("graph6 pairs are distinct and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, centipede, Family};

    #[test]
    fn known_strings() {
        assert_eq!(decode(b"Bw").unwrap(), build(Family::Complete, 3).unwrap());
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&build(Family::Complete, 4).unwrap()), "C~");
        assert_eq!(decode(b">>graph6<<Bw\n").unwrap(), build(Family::Complete, 3).unwrap());
        assert_eq!(decode(b"Bw\r\n").unwrap().size(), 3);
    }

    #[test]
    fn round_trip_centipede() {
        let g = centipede(8);
        assert_eq!(decode(encode(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn medium_orders() {
        let g = build(Family::Cycle, 100).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn errors_report_offsets() {
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert_eq!(
            decode(b"B!"),
            Err(Graph6Error::ByteOutOfRange { offset: 1, byte: b'!' })
        );
        assert_eq!(
            decode(b"D"),
            Err(Graph6Error::Truncated { offset: 1, expected: 3 })
        );
        assert_eq!(
            decode(b"Bww"),
            Err(Graph6Error::TrailingData { offset: 2, expected: 2 })
        );
        assert_eq!(
            decode(b">>graph6<<B!"),
            Err(Graph6Error::ByteOutOfRange { offset: 11, byte: b'!' })
        );
        assert!(matches!(decode(b"~?"), Err(Graph6Error::Truncated { .. })));
    }
}
