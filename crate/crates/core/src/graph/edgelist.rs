//! Plain edge-list files: a `d r` header line, then `r` lines `i j`.

use super::Graph;
use crate::error::{Error, Result};

fn numbers(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected two integers")))?;
        tok.parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad integer {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing tokens")));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (d, r) = numbers(header, n)?;
    let mut edges = Vec::with_capacity(r.min(1 << 16));
    for (n, line) in lines {
        edges.push(numbers(line, n)?);
    }
    if edges.len() != r {
        return Err(Error::Parse(format!("header declares {r} edges, found {}", edges.len())));
    }
    Graph::new(d, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.d(), g.r());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
