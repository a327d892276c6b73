//! graph6 encoding and decoding.
//!
//! One record per graph: a length field (`63 + n` for `n <= 62`, or `'~'`
//! followed by three bytes of 6 bits each), then the upper triangle of the
//! adjacency matrix in column-major order — x(0,1), x(0,2), x(1,2),
//! x(0,3), ... — packed into 6-bit groups, each stored as `63 + value`.
//! Zero bits pad the final group.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

/// Encodes a graph as a graph6 record.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 record. Fails with the byte offset of the first
/// problem: out-of-range characters, a truncated body, trailing garbage, or
/// nonzero padding bits.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(0, "empty graph6 record"));
    }
    let sixbit = |pos: usize| -> Result<usize> {
        let b = bytes[pos];
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::parse(
                pos,
                format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
            ));
        }
        Ok((b - OFFSET) as usize)
    };

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte length prefix encodes n >= 258048, far past the cap.
            return Err(Error::capability(format!(
                "graph6 record encodes more than {MAX_VERTICES} vertices"
            )));
        }
        if bytes.len() < 4 {
            return Err(Error::parse(bytes.len(), "truncated multi-byte length"));
        }
        let n = (sixbit(1)? << 12) | (sixbit(2)? << 6) | sixbit(3)?;
        (n, 4)
    } else {
        (sixbit(0)?, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::capability(format!(
            "graph6 record encodes {n} vertices, cap is {MAX_VERTICES}"
        )));
    }

    let nbits = n.saturating_sub(1) * n / 2;
    let nbytes = nbits.div_ceil(6);

    let mut g = Graph::empty(n)?;
    let mut row = 0usize;
    let mut col = 1usize;
    let mut remaining = nbits;
    for _ in 0..nbytes {
        if pos >= bytes.len() {
            return Err(Error::parse(
                bytes.len(),
                format!("truncated body: expected {nbytes} data bytes"),
            ));
        }
        let v = sixbit(pos)?;
        for k in 0..6 {
            let bit = v >> (5 - k) & 1;
            if remaining == 0 {
                if bit != 0 {
                    return Err(Error::parse(pos, "nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                g.add_edge(row, col)?;
            }
            remaining -= 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
        pos += 1;
    }
    if bytes.len() > pos {
        return Err(Error::parse(pos, "trailing garbage after record"));
    }
    Ok(g)
}
