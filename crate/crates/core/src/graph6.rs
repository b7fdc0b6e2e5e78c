//! graph6 encoding and decoding.
//!
//! The de-facto standard ASCII format for small simple graphs: a size header
//! followed by the upper adjacency triangle in column-major bit order, packed
//! into 6-bit chunks offset by 63. Graphs up to 258047 vertices are supported
//! (the one- and four-byte headers; the eight-byte form is not needed here).

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count this codec accepts.
pub const MAX_GRAPH6_VERTICES: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("graph too large for graph6 ({0} vertices, limit {MAX_GRAPH6_VERTICES})")]
    TooLarge(usize),
    #[error("malformed header byte {0:#x}")]
    BadHeader(u8),
    #[error("byte {0:#x} outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("expected {expected} payload bytes for n={n}, found {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits after the adjacency triangle")]
    TrailingBits,
}

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn payload_len(n: usize) -> usize {
    triangle_bits(n).div_ceil(6)
}

/// Encodes a graph into its graph6 byte string.
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }

    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(63 + chunk);
    }
    Ok(out)
}

/// Encodes a graph as a graph6 string.
pub fn encode_graph6_string(g: &Graph) -> Result<String, Graph6Error> {
    encode_graph6(g).map(|bytes| String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

/// Decodes a graph6 byte string. Trailing ASCII whitespace is tolerated;
/// nonzero padding bits are rejected.
pub fn decode_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes: &[u8] = match input.iter().position(|b| b.is_ascii_whitespace()) {
        Some(end) if input[end..].iter().all(|b| b.is_ascii_whitespace()) => &input[..end],
        Some(_) | None => input,
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, rest) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader(b'~'));
        }
        if bytes[1] == b'~' {
            // Eight-byte header means n >= 258048, beyond our declared limit.
            return Err(Graph6Error::TooLarge(MAX_GRAPH6_VERTICES + 1));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadByte(b));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, &bytes[4..])
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadHeader(b));
        }
        ((b - 63) as usize, &bytes[1..])
    };

    let expected = payload_len(n);
    if rest.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            found: rest.len(),
        });
    }

    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    // Bit `idx` of the triangle is bit `5 - idx%6` of payload byte `idx/6`.
    let bit_at = |idx: usize| (rest[idx / 6] - 63) >> (5 - idx % 6) & 1;

    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit_at(idx) == 1 {
                g = g.add_edge(i, j).expect("decoded edge is in range");
            }
            idx += 1;
        }
    }
    for pad in idx..rest.len() * 6 {
        if bit_at(pad) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(g)
}

/// Decodes a graph6 string.
pub fn decode_graph6_str(s: &str) -> Result<Graph, Graph6Error> {
    decode_graph6(s.as_bytes())
}
