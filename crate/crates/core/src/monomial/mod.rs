//! Monomial ideals: minimal generators, sums and intersections, and exact
//! multigraded Betti numbers of `S/I`.

mod betti;

use std::collections::BTreeSet;
use std::fmt;

use crate::binom::{parse_monomial, BinomialBasis, ExponentVector};
use crate::error::{Error, Result};
use crate::homology::{Face, SimplicialComplex};

pub use betti::{betti_gpw, betti_table, betti_table_with, pd, top_betti, BettiTable, BettiTriple, DEFAULT_LATTICE_GUARD};

/// A monomial ideal stored by its minimal generators, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn new(n: usize, gens: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::LengthMismatch { expected: n, found: g.len() });
        }
        Ok(minimalize(n, gens))
    }

    /// The ideal generated by the leads of a reduced basis.
    pub fn initial_ideal(basis: &BinomialBasis) -> Result<Self> {
        if !basis.reduced {
            return Err(Error::NotReduced);
        }
        MonomialIdeal::new(basis.nvars(), basis.leads().cloned())
    }

    /// One monomial per line in the `x1*x2^2` form; blank lines and `#` comments skipped.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let gens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| parse_monomial(l, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(minimalize(n, gens))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_one)
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_slice(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| g.as_slice().iter().zip(m).all(|(a, b)| a <= b))
    }

    /// 0-based indices of variables occurring in some minimal generator.
    pub fn variables_used(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(ExponentVector::support).collect()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(minimalize(self.n, self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        Ok(minimalize(self.n, lcms))
    }

    /// Products of pairs of generators, `I · J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let mut prods = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.checked_mul(b)?);
            }
        }
        Ok(minimalize(self.n, prods))
    }

    /// Restricts to the given variables (0-based) when no generator uses any other.
    pub fn restrict_to(&self, vars: &[usize]) -> Result<Self> {
        let used = self.variables_used();
        if let Some(v) = used.iter().find(|v| !vars.contains(v)) {
            return Err(Error::Precondition(format!("variable x{} is used by the ideal", v + 1)));
        }
        let gens = self.gens.iter().map(|g| ExponentVector(vars.iter().map(|&v| g.0[v]).collect()));
        MonomialIdeal::new(vars.len(), gens)
    }

    /// Facets of [`upper_koszul_complex`](Self::upper_koszul_complex): one per
    /// generator `m` dividing `x^a`, namely `{v : m_v < a_v}` (1-based).
    pub fn upper_koszul_facets(&self, a: &ExponentVector) -> Vec<Face> {
        let support = a.support();
        self.gens
            .iter()
            .filter(|m| m.divides(a))
            .map(|m| support.iter().filter(|&&v| m.0[v] < a.0[v]).map(|&v| v as u32 + 1).collect())
            .collect()
    }

    /// Joins of all nonempty sets of minimal generators, deduplicated.
    pub fn lcm_lattice(&self, guard: usize) -> Result<Vec<ExponentVector>> {
        let mut seen: BTreeSet<ExponentVector> = self.gens.iter().cloned().collect();
        let mut frontier: Vec<ExponentVector> = seen.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for g in &self.gens {
                    let j = m.lcm(g);
                    if !seen.contains(&j) {
                        seen.insert(j.clone());
                        next.push(j);
                        if seen.len() > guard {
                            return Err(Error::GuardLimit(format!(
                                "lcm lattice has more than {guard} elements"
                            )));
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(seen.into_iter().collect())
    }

    /// The upper Koszul simplicial complex on `supp(a)` (1-based labels): `W`
    /// is a face iff `x^(a - 1_W) ∈ I`.
    pub fn upper_koszul_complex(&self, a: &ExponentVector) -> SimplicialComplex {
        let support: Vec<u32> = a.support().into_iter().map(|i| i as u32 + 1).collect();
        SimplicialComplex::grow(support, |w| {
            let mut m = a.0.clone();
            for &v in w {
                m[v as usize - 1] -= 1;
            }
            self.contains_slice(&m)
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Removes generators divisible by another one; the result is sorted.
pub fn minimalize(n: usize, gens: Vec<ExponentVector>) -> MonomialIdeal {
    let mut gens = gens;
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    MonomialIdeal { n, gens: kept }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&text.replace(',', "\n"), n).unwrap()
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(ideal(2, "x1, x1*x2"), ideal(2, "x1"));
        assert!(ideal(2, "").is_zero());
        let i = ideal(12, "x7*x10, x7*x12, x9*x12");
        assert_eq!(i.gens().len(), 3);
        let used = i.variables_used();
        assert!(!used.contains(&7) && !used.contains(&10)); // x8, x11
    }

    #[test]
    fn sums_and_intersections() {
        let a = ideal(3, "x1*x2, x2*x3");
        assert_eq!(a.intersect(&a).unwrap(), a);
        let b = ideal(3, "x1");
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, "x1*x2, x1*x2*x3"));
        assert_eq!(a.sum(&b).unwrap(), ideal(3, "x1, x2*x3"));
        assert!(a.sum(&ideal(2, "x1")).is_err());
    }

    #[test]
    fn upper_koszul_examples() {
        let i = ideal(1, "x1");
        let k = i.upper_koszul_complex(&ExponentVector(vec![1]));
        assert_eq!(k.dim(), Some(-1));
        let i = ideal(2, "x1*x2");
        assert_eq!(i.upper_koszul_complex(&ExponentVector(vec![1, 1])).dim(), Some(-1));
        let i = ideal(3, "x1*x2, x2*x3");
        let k = i.upper_koszul_complex(&ExponentVector(vec![1, 1, 1]));
        assert_eq!(k.facets(), vec![vec![1], vec![3]]);
        assert!(i.upper_koszul_complex(&ExponentVector(vec![1, 0, 1])).is_void());
    }

    #[test]
    fn koszul_facets_span_the_complex() {
        let i = ideal(4, "x1^2*x2, x2*x3, x3^2*x4, x1*x4");
        for a in i.lcm_lattice(100).unwrap() {
            let c = i.upper_koszul_complex(&a);
            let from = SimplicialComplex::from_facets(c.vertices().to_vec(), &i.upper_koszul_facets(&a));
            assert_eq!(c, from, "{a}");
        }
    }

    #[test]
    fn lattice() {
        let i = ideal(3, "x1*x2, x2*x3");
        assert_eq!(i.lcm_lattice(100).unwrap().len(), 3);
        assert!(i.lcm_lattice(2).unwrap_err().is_guard());
    }
}
