use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::MonomialIdeal;
use crate::binom::ExponentVector;
use crate::error::Result;
use crate::homology::{facet_homology, reduce_facets, reduced_homology_dims, Face, FieldChoice, HomologyDims, SimplicialComplex};

pub const DEFAULT_LATTICE_GUARD: usize = 20_000;

/// Multigraded Betti numbers `β_{i,a}(S/I)`, nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, ExponentVector), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTriple {
    pub i: usize,
    pub a: ExponentVector,
    pub dim: usize,
}

impl BettiTable {
    fn new(nvars: usize) -> Self {
        BettiTable { nvars, entries: BTreeMap::new() }
    }

    fn insert(&mut self, i: usize, a: ExponentVector, dim: usize) {
        if dim > 0 {
            *self.entries.entry((i, a)).or_default() += dim;
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, a: &ExponentVector) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry; 0 when there is none.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, d)| d).sum()
    }

    /// Multidegrees carrying a nonzero entry at index `i`.
    pub fn degrees_at(&self, i: usize) -> Vec<ExponentVector> {
        self.entries.keys().filter(|(j, _)| *j == i).map(|(_, a)| a.clone()).collect()
    }

    /// Standard-graded collapse: `(i, total degree) → dim`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), d) in &self.entries {
            *out.entry((*i, a.degree())).or_default() += d;
        }
        out
    }

    pub fn triples(&self) -> Vec<BettiTriple> {
        self.entries
            .iter()
            .map(|((i, a), d)| BettiTriple { i: *i, a: a.clone(), dim: *d })
            .collect()
    }
}

/// Rows are `j - i`, columns are `i`, entries are graded Betti numbers.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let graded = self.graded();
        if graded.is_empty() {
            return writeln!(f, "zero module");
        }
        let pd = self.pd();
        let rows: Vec<u64> = {
            let mut r: Vec<u64> = graded.keys().map(|(i, j)| j - *i as u64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let width = graded.values().map(|d| d.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        for row in rows {
            write!(f, "{:>5}:", row)?;
            for i in 0..=pd {
                match graded.get(&(i, row + i as u64)) {
                    Some(d) => write!(f, " {d:>width$}")?,
                    None => write!(f, " {:>width$}", "-")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)
    }
}

fn base_table(ideal: &MonomialIdeal) -> Option<BettiTable> {
    let mut t = BettiTable::new(ideal.nvars());
    if ideal.is_unit() {
        return Some(t);
    }
    t.insert(0, ExponentVector::zeros(ideal.nvars()), 1);
    if ideal.is_zero() {
        return Some(t);
    }
    None
}

// homology index j at multidegree a contributes to β_{j+2,a}
fn assemble(nvars: usize, per_degree: Vec<(ExponentVector, HomologyDims)>) -> BettiTable {
    let mut table = BettiTable::new(nvars);
    table.insert(0, ExponentVector::zeros(nvars), 1);
    for (a, h) in per_degree {
        for (j, dim) in h.nonzero() {
            table.insert((j + 2) as usize, a.clone(), dim);
        }
    }
    table
}

/// Betti numbers via upper Koszul complexes over the lcm lattice, each
/// shrunk by collapses before its homology is computed.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    betti_table_with(ideal, field, DEFAULT_LATTICE_GUARD)
}

pub fn betti_table_with(ideal: &MonomialIdeal, field: FieldChoice, guard: usize) -> Result<BettiTable> {
    if let Some(t) = base_table(ideal) {
        return Ok(t);
    }
    let lattice = ideal.lcm_lattice(guard)?;
    let per_degree: Vec<_> = lattice
        .into_par_iter()
        .map(|a| {
            let core = reduce_facets(&ideal.upper_koszul_facets(&a));
            (a, facet_homology(&core, field))
        })
        .collect();
    Ok(assemble(ideal.nvars(), per_degree))
}

/// Projective dimension of `S/I` and the multidegrees where it is attained.
///
/// Each reduced upper Koszul complex bounds the homological index it can
/// contribute (its dimension plus two, at most its vertex count); lattice
/// elements are visited by decreasing bound and homology is computed only
/// while the bound can still reach the best index found.
pub fn top_betti(ideal: &MonomialIdeal, field: FieldChoice, guard: usize) -> Result<(usize, Vec<ExponentVector>)> {
    if ideal.is_unit() {
        return Ok((0, Vec::new()));
    }
    if ideal.is_zero() {
        return Ok((0, vec![ExponentVector::zeros(ideal.nvars())]));
    }
    let lattice = ideal.lcm_lattice(guard)?;
    let mut cores: Vec<(usize, ExponentVector, Vec<Face>)> = lattice
        .into_par_iter()
        .filter_map(|a| {
            let core = reduce_facets(&ideal.upper_koszul_facets(&a));
            let top = core.iter().map(Vec::len).max().unwrap_or(0);
            let nverts = core.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
            // a single nonempty facet is a simplex, hence acyclic
            if core.len() == 1 && top > 0 {
                return None;
            }
            let bound = if top == 0 { 1 } else { (top + 1).min(nverts) };
            Some((bound, a, core))
        })
        .collect();
    cores.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| x.1.cmp(&y.1)));
    let mut best = 0;
    let mut tops = Vec::new();
    for (bound, a, core) in cores {
        if bound < best.max(1) {
            break;
        }
        let Some((j, _)) = facet_homology(&core, field).nonzero().last() else { continue };
        let i = (j + 2) as usize;
        if i > best {
            best = i;
            tops.clear();
        }
        if i == best {
            tops.push(a);
        }
    }
    tops.sort();
    Ok((best, tops))
}

/// Independent route: `β_{i,a}(S/I) = dim H̃_{i-2}` of the order complex of
/// the open interval `(1, a)` in the lcm lattice.
pub fn betti_gpw(ideal: &MonomialIdeal, field: FieldChoice) -> Result<BettiTable> {
    if let Some(t) = base_table(ideal) {
        return Ok(t);
    }
    let mut lattice = ideal.lcm_lattice(DEFAULT_LATTICE_GUARD)?;
    lattice.sort_by_key(|m| m.degree());
    let per_degree: Vec<_> = lattice
        .par_iter()
        .map(|a| {
            let below: Vec<&ExponentVector> =
                lattice.iter().filter(|m| *m != a && m.divides(a)).collect();
            let labels = 0..below.len() as u32;
            let chain = SimplicialComplex::grow(labels, |w| {
                // labels follow increasing degree, so a chain is ordered by them
                w.windows(2).all(|p| below[p[0] as usize].divides(below[p[1] as usize]))
            });
            (a.clone(), reduced_homology_dims(&chain, field))
        })
        .collect();
    Ok(assemble(ideal.nvars(), per_degree))
}

/// Projective dimension of `S/I` over the rationals.
pub fn pd(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal, FieldChoice::Rationals)?.pd())
}
