//! The graph6 text encoding of simple undirected graphs.
//!
//! A record is the size header `N(n)` followed by the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte, most
//! significant bit first, each byte offset by 63. Reference:
//! <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn sixbits(byte: u8) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Error::Graph6(format!("byte {byte:#04x} outside the printable range 63..=126")))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| Error::Graph6("empty record".into()))?;
    if first != 126 {
        return Ok((sixbits(first)? as usize, 1));
    }
    let wide = bytes.get(1) == Some(&126);
    let (start, width) = if wide { (2, 6) } else { (1, 3) };
    let digits = bytes
        .get(start..start + width)
        .ok_or_else(|| Error::Graph6("truncated size header".into()))?;
    let mut n = 0usize;
    for &b in digits {
        n = (n << 6) | sixbits(b)? as usize;
    }
    Ok((n, start + width))
}

fn encode_size(n: usize, out: &mut String) {
    let push = |out: &mut String, n: usize, width: usize| {
        for shift in (0..width).rev() {
            out.push((((n >> (6 * shift)) & 63) as u8 + 63) as char);
        }
    };
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        push(out, n, 3);
    } else {
        out.push_str("~~");
        push(out, n, 6);
    }
}

/// Decodes one graph6 record. Edges come out in row-major upper-triangle
/// order: `(1,2), (1,3), ..., (1,n), (2,3), ...`.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, offset) = decode_size(bytes)?;
    let body = &bytes[offset..];
    let nbits = n.checked_mul(n.saturating_sub(1)).map(|v| v / 2);
    let nbits = nbits.ok_or_else(|| Error::Graph6(format!("vertex count {n} too large")))?;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(Error::Graph6(format!(
            "expected {nbytes} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let values = body.iter().map(|&b| sixbits(b)).collect::<Result<Vec<_>>>()?;
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (nbits..nbytes * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.d();
    let mut adj = vec![false; n * n];
    for &(i, j) in g.edges() {
        adj[(i - 1) * n + (j - 1)] = true;
    }
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj[i * n + j]);
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
