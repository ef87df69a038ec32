//! Exact rank of sparse matrices given as rows of `(column, value)` pairs
//! sorted by column.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

pub type SparseRow = Vec<(usize, i64)>;

trait Exact: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Exact for T {}

/// `a * r - b * p`, merging sorted rows and dropping zeros.
fn combine<T: Exact>(a: &T, r: &[(usize, T)], b: &T, p: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j == p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i == r.len() || (j < p.len() && p[j].0 < r[i].0);
        let (col, v) = if take_r {
            i += 1;
            (r[i - 1].0, a.checked_mul(&r[i - 1].1)?)
        } else if take_p {
            j += 1;
            (p[j - 1].0, T::zero().checked_sub(&b.checked_mul(&p[j - 1].1)?)?)
        } else {
            i += 1;
            j += 1;
            let v = a.checked_mul(&r[i - 1].1)?.checked_sub(&b.checked_mul(&p[j - 1].1)?)?;
            (r[i - 1].0, v)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn make_primitive<T: Exact>(row: &mut [(usize, T)]) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.div_floor(&g);
        }
    }
}

/// Fraction-free elimination; `None` on overflow of `T`.
fn integer_rank<T: Exact>(rows: Vec<Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some((col, lead)) = row.first().cloned() else { break };
            match pivots.get(&col) {
                Some(p) => {
                    let plead = &p[0].1;
                    let g = plead.gcd(&lead);
                    let (a, b) = (plead.div_floor(&g), lead.div_floor(&g));
                    row = combine(&a, &row, &b, p)?;
                    make_primitive(&mut row);
                }
                None => {
                    make_primitive(&mut row);
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    if let Some(r) = integer_rank(rows.to_vec()) {
        return r;
    }
    let big = rows
        .iter()
        .map(|row| row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    integer_rank::<BigInt>(big).expect("big integers do not overflow")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut exp) = (1u128, a as u128 % p as u128, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    result as u64
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut row: Vec<(usize, u64)> =
            row.iter().map(|&(c, v)| (c, reduce(v))).filter(|&(_, v)| v != 0).collect();
        loop {
            let Some(&(col, lead)) = row.first() else { break };
            match pivots.get(&col) {
                Some(piv) => {
                    // row -= lead * piv, piv normalized to leading 1
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        let (c, v) = if j == piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                            i += 1;
                            row[i - 1]
                        } else {
                            let sub = (lead as u128 * piv[j].1 as u128 % p as u128) as u64;
                            let (c, cur) = if i < row.len() && row[i].0 == piv[j].0 {
                                i += 1;
                                (row[i - 1].0, row[i - 1].1)
                            } else {
                                (piv[j].0, 0)
                            };
                            j += 1;
                            (c, (cur + p - sub) % p)
                        };
                        if v != 0 {
                            out.push((c, v));
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = inv_mod(lead, p);
                    for (_, v) in row.iter_mut() {
                        *v = (*v as u128 * inv as u128 % p as u128) as u64;
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
