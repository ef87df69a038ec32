//! The affine semigroup `S_G = N{a_1, ..., a_r}` and the complexes
//! `Δ_s = {F ⊆ [r] : s - n_F ∈ S_G}`.

use std::collections::HashSet;

use crate::binom::ExponentVector;
use crate::error::{Error, Result};
use crate::graph::{DegreeVector, Graph};
use crate::homology::{Face, SimplicialComplex};

/// Default cap on the number of edges for [`delta_complex`].
pub const DEFAULT_EDGE_GUARD: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipResult {
    pub member: bool,
    /// Multiplicities `c` with `Σ c_l a_l = s`, present iff `member`.
    pub certificate: Option<ExponentVector>,
}

struct Search<'a> {
    adj: &'a [Vec<(usize, usize)>],
    failed: HashSet<Vec<u32>>,
    counts: Vec<u32>,
}

impl Search<'_> {
    /// Depth-first search: cover the first vertex with positive residual by
    /// one of its edges, recurse. Failing residuals are memoized.
    fn run(&mut self, residual: &mut Vec<u32>) -> bool {
        let Some(v) = residual.iter().position(|&e| e > 0) else { return true };
        if self.failed.contains(residual.as_slice()) {
            return false;
        }
        for &(w, l) in &self.adj[v] {
            let w = w - 1;
            if residual[w] == 0 {
                continue;
            }
            residual[v] -= 1;
            residual[w] -= 1;
            self.counts[l] += 1;
            let ok = self.run(residual);
            residual[v] += 1;
            residual[w] += 1;
            if ok {
                return true;
            }
            self.counts[l] -= 1;
        }
        self.failed.insert(residual.clone());
        false
    }
}

/// Decides `s ∈ S_G` exhaustively, with a certificate when it holds.
pub fn member(g: &Graph, s: &DegreeVector) -> Result<MembershipResult> {
    if s.len() != g.d() {
        return Err(Error::LengthMismatch { expected: g.d(), found: s.len() });
    }
    Ok(member_unchecked(g, &g.adjacency(), s.as_slice()))
}

fn member_unchecked(g: &Graph, adj: &[Vec<(usize, usize)>], s: &[u32]) -> MembershipResult {
    let total: u64 = s.iter().map(|&e| u64::from(e)).sum();
    if total % 2 == 1 {
        return MembershipResult { member: false, certificate: None };
    }
    let mut search = Search { adj, failed: HashSet::new(), counts: vec![0; g.r()] };
    let mut residual = s.to_vec();
    if search.run(&mut residual) {
        MembershipResult { member: true, certificate: Some(ExponentVector(search.counts)) }
    } else {
        MembershipResult { member: false, certificate: None }
    }
}

/// `Δ_s` on the vertex set `{1, ..., r}` (edge indices) together with `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaComplex {
    pub complex: SimplicialComplex,
    pub degree: DegreeVector,
}

impl DeltaComplex {
    pub fn facets(&self) -> Vec<Face> {
        self.complex.facets()
    }
}

/// Builds `Δ_s`. Subsets are enumerated by size, lexicographically within a
/// size, and tested only when all maximal proper subsets are faces and
/// `s - n_F` is nonnegative. The void complex comes back when `s ∉ S_G`.
pub fn delta_complex(g: &Graph, s: &DegreeVector, edge_guard: usize) -> Result<DeltaComplex> {
    if s.len() != g.d() {
        return Err(Error::LengthMismatch { expected: g.d(), found: s.len() });
    }
    if g.r() > edge_guard {
        return Err(Error::GuardLimit(format!(
            "Δ_s enumeration over {} edges exceeds the limit of {edge_guard}",
            g.r()
        )));
    }
    let adj = g.adjacency();
    let complex = SimplicialComplex::grow(1..=g.r() as u32, |face| {
        let n = g.face_degree(face);
        let residual: Option<Vec<u32>> =
            s.as_slice().iter().zip(n.as_slice()).map(|(&a, &b)| a.checked_sub(b)).collect();
        residual.is_some_and(|res| member_unchecked(g, &adj, &res).member)
    });
    Ok(DeltaComplex { complex, degree: s.clone() })
}

/// The degree `s = (1, 1, k+1, k+1, 1, 1, 2, ..., 2)` of length `k + 6`.
pub fn paper_degree(k: usize) -> Result<DegreeVector> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("family index k must be >= 1, got {k}")));
    }
    let kk = k as u32 + 1;
    let mut s = vec![1, 1, kk, kk, 1, 1];
    s.extend(std::iter::repeat(2).take(k));
    Ok(DegreeVector(s))
}

/// The facets `F_{1,i}` and `F_{2,j}` of `Δ_s` for `G_{k+6}` at [`paper_degree`].
pub fn family_facets(k: usize) -> (Vec<Face>, Vec<Face>) {
    let r = 2 * (k as u32 - 1) + 8;
    let tail: Vec<u32> = (7..=r).collect();
    let first = (1..=k as u32)
        .map(|i| {
            let mut f = vec![1, 4, 5];
            f.extend(tail.iter().copied().filter(|&l| l != 2 * (i - 1) + 8));
            f
        })
        .collect();
    let second = (1..=k as u32)
        .map(|j| {
            let mut f = vec![2, 3, 6];
            f.extend(tail.iter().copied().filter(|&l| l != 2 * (j - 1) + 7));
            f
        })
        .collect();
    (first, second)
}
