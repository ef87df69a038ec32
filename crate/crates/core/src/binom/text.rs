//! Text form of monomials and binomials: `x1*x4*x5*x7^2 - x2*x3*x6*x8^2`,
//! 1-based variable indices, `1` for the unit monomial.

use super::{ExponentVector, MonomialOrder, PureBinomial};
use crate::error::{Error, Result};

fn parse_factor(tok: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad factor {tok:?}"));
    let rest = tok.strip_prefix('x').ok_or_else(bad)?;
    let (index, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e.trim().parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let index: usize = index.trim().parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok((index, exp))
}

fn factors(text: &str) -> Result<Vec<(usize, u32)>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    text.split('*').map(|t| parse_factor(t.trim())).collect()
}

/// Largest variable index mentioned in `text`, 0 when none.
pub fn max_variable_index(text: &str) -> usize {
    let mut best = 0;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(v) = text[start..end].parse::<usize>() {
                best = best.max(v);
            }
            i = end.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}

/// Parses a monomial over `n` variables.
pub fn parse_monomial(text: &str, n: usize) -> Result<ExponentVector> {
    let mut v = vec![0u32; n];
    for (index, exp) in factors(text)? {
        if index > n {
            return Err(Error::Parse(format!("variable x{index} outside x1..x{n}")));
        }
        v[index - 1] = v[index - 1].checked_add(exp).ok_or(Error::ExponentOverflow)?;
    }
    Ok(ExponentVector(v))
}

/// Parses `m1 - m2` over `n` variables and orients it for `order`.
pub fn parse_binomial(text: &str, n: usize, order: &MonomialOrder) -> Result<PureBinomial> {
    let (a, b) = text
        .split_once('-')
        .ok_or_else(|| Error::Parse(format!("expected `m1 - m2`, got {text:?}")))?;
    let a = parse_monomial(a, n)?;
    let b = parse_monomial(b, n)?;
    PureBinomial::new(a, b, order).map_err(|_| Error::Parse(format!("binomial {text:?} is zero")))
}
