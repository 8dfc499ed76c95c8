//! graph6 encoding and decoding (header-free ASCII form).
//!
//! The byte layout is the standard one: a size prefix followed by the upper
//! triangle of the adjacency matrix in column order, packed six bits per
//! printable character (offset 63), zero-padded to a whole character.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_N: usize = 258_047;

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_N {
        return Err(Error::Graph6(format!("order {n} exceeds graph6 limit {MAX_N}")));
    }
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut buf: u8 = 0;
    let mut filled = 0;
    for v in 1..n as u32 {
        for u in 0..v {
            buf = (buf << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((buf + 63) as char);
                buf = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((buf << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Decodes a graph6 string. The zero padding is validated, so only the
/// canonical encoding of a graph is accepted.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside printable range 63..=126")));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size prefix".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("orders above 258047 are not supported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "body has {} characters, expected {expect} for order {n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    let mut it = (1..n as u32).flat_map(|v| (0..v).map(move |u| (u, v)));
    for &b in body {
        let six = b - 63;
        for k in (0..6).rev() {
            if idx < nbits {
                if (six >> k) & 1 == 1 {
                    let (u, v) = it.next().expect("bit index in range");
                    // consume the pair regardless of the bit value
                    g.add_edge(u, v)?;
                } else {
                    it.next();
                }
                idx += 1;
            } else if (six >> k) & 1 == 1 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
        }
    }
    Ok(g)
}
