//! graph6 text encoding, bit-exact per the published format.
//!
//! Upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... are packed into
//! 6-bit groups, each printed as `value + 63`. Graphs with n <= 62 use the
//! one-byte size header; 63 and 64 use the `~` three-byte form.

use crate::graph::Graph;
use crate::{Error, Result};

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        out.push(((n >> 12 & 0x3f) as u8 + 63) as char);
        out.push(((n >> 6 & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes: Vec<u8> = text.trim_end().bytes().collect();
    if bytes.is_empty() {
        return Err(Error::Graph6Parse("empty input".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6Parse(format!("byte {b} out of range")));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6Parse("truncated size header".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6Parse("graphs beyond 258047 vertices unsupported".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let mut g = Graph::new(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = bytes.len() - pos;
    if expected != nbits.div_ceil(6) {
        return Err(Error::Graph6Parse(format!(
            "expected {} data bytes for n={}, got {}",
            nbits.div_ceil(6),
            n,
            expected
        )));
    }
    let mut acc = 0u8;
    let mut avail = 0;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                avail = 6;
            }
            if acc & 1 << (avail - 1) != 0 {
                g.add_edge(i, j)?;
            }
            avail -= 1;
        }
    }
    // trailing pad bits must be zero
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(Error::Graph6Parse("nonzero padding bits".into()));
    }
    Ok(g)
}
