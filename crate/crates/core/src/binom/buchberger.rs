use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use super::{reduce_terms, BinomialBasis, ExponentVector, MonomialOrder, PureBinomial};
use crate::error::{Error, Result};

struct PairQueue {
    heap: BinaryHeap<Reverse<(Vec<i64>, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn push(&mut self, key: Vec<i64>, i: usize, j: usize) {
        self.pending.insert((i, j));
        self.heap.push(Reverse((key, i, j)));
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let Reverse((_, i, j)) = self.heap.pop()?;
        self.pending.remove(&(i, j));
        Some((i, j))
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

fn s_pair(f: &PureBinomial, g: &PureBinomial, lcm: &ExponentVector) -> Result<(ExponentVector, ExponentVector)> {
    let a = lcm.checked_div(&f.lead).expect("lead divides lcm").checked_mul(&f.trail)?;
    let b = lcm.checked_div(&g.lead).expect("lead divides lcm").checked_mul(&g.trail)?;
    Ok((a, b))
}

// sugar of the S-pair: the larger of the two multiplied sugars
fn pair_sugar(lcm: &ExponentVector, f: &PureBinomial, sf: u64, g: &PureBinomial, sg: u64) -> u64 {
    let d = lcm.degree();
    (sf + d - f.lead.degree()).max(sg + d - g.lead.degree())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are taken by smallest sugar degree, ties by smallest lcm. Pairs with coprime leads are never
/// queued, and a pair is dropped when a third lead divides its lcm and both
/// connecting pairs are already settled.
pub fn buchberger(gens: &[PureBinomial], order: &MonomialOrder) -> Result<BinomialBasis> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidParameter("empty generator list".into()))?;
    let n = first.nvars();
    if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::LengthMismatch { expected: n, found: bad.nvars() });
    }

    let mut basis: Vec<PureBinomial> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut queue = PairQueue { heap: BinaryHeap::new(), pending: HashSet::new() };

    let add = |h: PureBinomial, s: u64, basis: &mut Vec<PureBinomial>, sugar: &mut Vec<u64>, queue: &mut PairQueue| {
        let m = basis.len();
        for (i, g) in basis.iter().enumerate() {
            if !g.lead.is_coprime(&h.lead) {
                let lcm = g.lead.lcm(&h.lead);
                let ps = pair_sugar(&lcm, g, sugar[i], &h, s);
                let mut key = vec![ps as i64];
                key.extend(order.sort_key(lcm.as_slice()));
                queue.push(key, i, m);
            }
        }
        basis.push(h);
        sugar.push(s);
    };

    for g in gens {
        let s = g.lead.degree().max(g.trail.degree());
        if let Some(h) = reduce_terms(g.lead.clone(), g.trail.clone(), &basis, order)? {
            add(h, s, &mut basis, &mut sugar, &mut queue);
        }
    }

    while let Some((i, j)) = queue.pop() {
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        let chained = (0..basis.len()).any(|m| {
            m != i
                && m != j
                && basis[m].lead.divides(&lcm)
                && !queue.is_pending(i, m)
                && !queue.is_pending(j, m)
        });
        if chained {
            continue;
        }
        let s = pair_sugar(&lcm, &basis[i], sugar[i], &basis[j], sugar[j]);
        let (a, b) = s_pair(&basis[i], &basis[j], &lcm)?;
        if let Some(h) = reduce_terms(a, b, &basis, order)? {
            add(h, s, &mut basis, &mut sugar, &mut queue);
        }
    }

    let elements = auto_reduce(basis, order)?;
    let mut out = BinomialBasis::new(elements, order.clone(), n, true);
    out.canonicalize();
    Ok(out)
}

/// Drops elements whose lead is divisible by another lead, then reduces every
/// trail modulo the rest. Applied to a Gröbner basis this yields the reduced
/// Gröbner basis.
pub fn auto_reduce(elements: Vec<PureBinomial>, order: &MonomialOrder) -> Result<Vec<PureBinomial>> {
    let elements: Vec<PureBinomial> = elements.into_iter().map(|b| b.reorient(order)).collect();
    let minimal: Vec<PureBinomial> = elements
        .iter()
        .enumerate()
        .filter(|&(i, g)| {
            !elements.iter().enumerate().any(|(j, h)| {
                j != i && h.lead.divides(&g.lead) && (h.lead != g.lead || j < i)
            })
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<PureBinomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = reduce_terms(g.lead.clone(), g.trail.clone(), &others, order)?
            .expect("lead is irreducible and exceeds the trail");
        debug_assert_eq!(r.lead, g.lead);
        reduced.push(r);
    }
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::{normal_form, parse_binomial};

    fn parse_all(n: usize, lines: &[&str], order: &MonomialOrder) -> Vec<PureBinomial> {
        lines.iter().map(|l| parse_binomial(l, n, order).unwrap()).collect()
    }

    #[test]
    fn single_generator() {
        let o = MonomialOrder::Lex;
        let g = parse_all(2, &["x1 - x2"], &o);
        let gb = buchberger(&g, &o).unwrap();
        assert_eq!(gb.elements, g);
        assert!(gb.reduced);
    }

    #[test]
    fn twisted_cubic_grevlex() {
        // (x1 x3 - x2^2, x2 x4 - x3^2, x1 x4 - x2 x3): already a reduced grevlex basis
        let o = MonomialOrder::Grevlex;
        let g = parse_all(4, &["x2^2 - x1*x3", "x3^2 - x2*x4", "x1*x4 - x2*x3"], &o);
        let gb = buchberger(&g, &o).unwrap();
        assert_eq!(gb.len(), 3);
        for b in &g {
            assert!(gb.contains(b).unwrap());
        }
    }

    /// Buchberger's criterion checked over every pair, with no shortcuts.
    fn all_s_pairs_reduce(gb: &BinomialBasis) -> bool {
        for (i, f) in gb.elements.iter().enumerate() {
            for g in &gb.elements[i + 1..] {
                let lcm = f.lead.lcm(&g.lead);
                let (a, b) = s_pair(f, g, &lcm).unwrap();
                if let Some(s) = PureBinomial::new(a, b, &gb.order).ok() {
                    if normal_form(&s, gb).unwrap().is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn twisted_cubic_lex() {
        let o = MonomialOrder::Lex;
        let g = parse_all(4, &["x2^2 - x1*x3", "x3^2 - x2*x4", "x1*x4 - x2*x3"], &o);
        let gb = buchberger(&g, &o).unwrap();
        assert!(all_s_pairs_reduce(&gb));
        for b in &g {
            assert!(gb.contains(b).unwrap());
        }
        // reducedness
        for (i, f) in gb.elements.iter().enumerate() {
            for (j, h) in gb.elements.iter().enumerate() {
                if i != j {
                    assert!(!h.lead().divides(f.lead()));
                    assert!(!h.lead().divides(f.trail()));
                }
            }
        }
    }

    #[test]
    fn non_gb_input_is_completed() {
        // f = x1 x2 - x3 x4, g = x1 x5 - x3 x6: S-pair has the common factor x3
        let o = MonomialOrder::Lex;
        let g = parse_all(6, &["x1*x2 - x3*x4", "x1*x5 - x3*x6"], &o);
        let gb = buchberger(&g, &o).unwrap();
        assert!(all_s_pairs_reduce(&gb));
        assert_eq!(gb.len(), 3);
        assert!(gb.elements.iter().any(|b| b.to_string() == "x2*x3*x6 - x3*x4*x5"));
    }

    #[test]
    fn permutation_invariance() {
        let o = MonomialOrder::Lex;
        let lines = ["x2^2 - x1*x3", "x3^2 - x2*x4", "x1*x4 - x2*x3"];
        let a = buchberger(&parse_all(4, &lines, &o), &o).unwrap();
        let mut rev = lines;
        rev.reverse();
        let b = buchberger(&parse_all(4, &rev, &o), &o).unwrap();
        assert_eq!(a, b);
        assert!(buchberger(&[], &o).is_err());
    }
}
