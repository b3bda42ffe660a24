//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column-major order, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, Word};

const BIAS: u8 = 63;

pub fn encode<W: Word>(g: &Graph<W>) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adj(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn decode<W: Word>(line: &str) -> Result<Graph<W>> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(pos, format!("byte {:#04x} outside the graph6 range", bytes[pos])));
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(parse_err(0, "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(parse_err(1, "8-byte size prefix is not supported"));
            }
            if bytes.len() < 4 {
                return Err(parse_err(bytes.len(), "truncated size prefix"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
            (n, 4)
        }
        Some(&b) => ((b - BIAS) as usize, 1),
    };
    if n > W::BITS {
        return Err(Error::UnsupportedSize { what: "graph6 input", n, limit: W::BITS });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != need {
        let offset = body_start + body.len().min(need);
        return Err(parse_err(
            offset,
            format!("expected {need} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if pairs % 6 != 0 {
        let last = need - 1;
        let mask = (1u8 << (6 - pairs % 6)) - 1;
        if (body[last] - BIAS) & mask != 0 {
            return Err(parse_err(body_start + last, "nonzero padding bits"));
        }
    }
    let mut k = 0;
    Graph::from_fn(n, |_, _| {
        let b = bit(k);
        k += 1;
        b
    })
}
