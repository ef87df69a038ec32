//! End-to-end check of every computed claim about the family `G_{k+6}`.

use serde::Serialize;

use super::{depth_report, DepthOptions};
use crate::binom::ExponentVector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{mayer_vietoris_check, reduced_homology_dims, SimplicialComplex};
use crate::monomial::{betti_table, MonomialIdeal};
use crate::semigroup::{delta_complex, family_facets, paper_degree};
use crate::toric::{toric_ideal, verify_family_gb, walk_binomials_family};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyVerification {
    pub k: usize,
    pub checks: Vec<Check>,
    pub depth: Option<usize>,
    pub krull_dim: usize,
}

impl FamilyVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn a(i: usize) -> usize {
    2 * (i - 1) + 7
}

fn b(i: usize) -> usize {
    2 * (i - 1) + 8
}

/// Ideals used in the decomposition of the initial ideal, in `r = 2k + 6` variables.
pub struct FamilyIdeals {
    /// Leads of the type I walk binomials, `x_{a_i} x_{b_j}` for `i < j`.
    pub i_prime: MonomialIdeal,
    /// `(x_{a_1}, ..., x_{a_k})^2 + I'`.
    pub i1: MonomialIdeal,
    /// `(x1 x4 x5) + I'`.
    pub i2: MonomialIdeal,
    /// `x1 x4 x5 (x_{a_1}, ..., x_{a_k})^2 + I'`.
    pub expected_initial: MonomialIdeal,
}

pub fn family_ideals(k: usize) -> Result<FamilyIdeals> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("family index k must be >= 1, got {k}")));
    }
    let n = 2 * k + 6;
    let mono = |f: &[(usize, u32)]| ExponentVector::from_factors(n, f);
    let mut type_i = Vec::new();
    let mut squares = Vec::new();
    let mut weighted = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            if i < j {
                type_i.push(mono(&[(a(i), 1), (b(j), 1)]));
            }
            let sq = if i == j { vec![(a(i), 2)] } else { vec![(a(i), 1), (a(j), 1)] };
            squares.push(mono(&sq));
            let mut w = vec![(1, 1), (4, 1), (5, 1)];
            w.extend(sq);
            weighted.push(mono(&w));
        }
    }
    let i_prime = MonomialIdeal::new(n, type_i)?;
    let triple = MonomialIdeal::new(n, [mono(&[(1, 1), (4, 1), (5, 1)])])?;
    Ok(FamilyIdeals {
        i1: MonomialIdeal::new(n, squares)?.sum(&i_prime)?,
        i2: triple.sum(&i_prime)?,
        expected_initial: MonomialIdeal::new(n, weighted)?.sum(&i_prime)?,
        i_prime,
    })
}

fn push(checks: &mut Vec<Check>, name: &str, passed: bool, detail: String) {
    checks.push(Check { name: name.to_string(), passed, detail });
}

/// Runs the whole pipeline for `G_{k+6}` under lex order.
pub fn verify_family(k: usize, opts: &DepthOptions) -> Result<FamilyVerification> {
    let g = Graph::family(k)?;
    let r = g.r();
    let field = opts.field;
    let mut checks = Vec::new();

    let gb = verify_family_gb(k)?;
    let walks = walk_binomials_family(k)?;
    push(
        &mut checks,
        "groebner-basis",
        gb.matches && gb.element_count == k * k && walks.len() == k * k,
        format!("{} elements, raw walk set reduced: {}", gb.element_count, gb.raw_matches),
    );

    let basis = toric_ideal(&g, &crate::binom::MonomialOrder::Lex)?;
    let initial = MonomialIdeal::initial_ideal(&basis)?;
    let fam = family_ideals(k)?;
    let expected_count = k * (k - 1) / 2 + k * (k + 1) / 2;
    push(
        &mut checks,
        "initial-ideal",
        initial == fam.expected_initial && initial.gens().len() == expected_count,
        format!("{} minimal generators, expected {expected_count}", initial.gens().len()),
    );

    let inter = fam.i1.intersect(&fam.i2)?;
    let sum = fam.i1.sum(&fam.i2)?;
    let triple_plus_i1 = fam.i1.sum(&MonomialIdeal::new(r, [ExponentVector::from_factors(r, &[(1, 1), (4, 1), (5, 1)])])?)?;
    push(
        &mut checks,
        "decomposition",
        inter == initial && sum == triple_plus_i1,
        "I1 ∩ I2 = in(I_G) and I1 + I2 = (x1 x4 x5) + I1".to_string(),
    );

    let pd_of = |i: &MonomialIdeal| betti_table(i, field).map(|t| t.pd());
    let (pd_in, pd1, pd2, pd_sum, pd_prime) =
        (pd_of(&initial)?, pd_of(&fam.i1)?, pd_of(&fam.i2)?, pd_of(&sum)?, pd_of(&fam.i_prime)?);
    let bound = 2 * k - 1;
    push(
        &mut checks,
        "exact-sequence-bound",
        pd_in <= pd1.max(pd2).max(pd_sum.saturating_sub(1)),
        format!("pd in(I_G) = {pd_in}, pd I1 = {pd1}, pd I2 = {pd2}, pd (I1+I2) = {pd_sum}"),
    );
    push(
        &mut checks,
        "syzygy-ceilings",
        pd_sum == pd1 + 1
            && pd2 == pd_prime + 1
            && pd1 <= fam.i1.variables_used().len()
            && pd_prime <= fam.i_prime.variables_used().len(),
        format!("pd I' = {pd_prime}, pd I1 = {pd1}"),
    );

    let s = paper_degree(k)?;
    let delta = delta_complex(&g, &s, opts.edge_guard)?;
    let (f1, f2) = family_facets(k);
    let mut listed: Vec<_> = f1.iter().chain(&f2).cloned().collect();
    listed.sort();
    push(
        &mut checks,
        "facets",
        delta.facets() == listed,
        format!("{} facets", delta.facets().len()),
    );

    let vertices: Vec<u32> = (1..=r as u32).collect();
    let d1 = SimplicialComplex::from_facets(vertices.clone(), &f1);
    let d2 = SimplicialComplex::from_facets(vertices, &f2);
    let cap = d1.intersection(&d2);
    let cap_dim = cap.dim().unwrap_or(-2);
    push(
        &mut checks,
        "intersection-dimension",
        cap_dim == 2 * k as isize - 3 && d1.union(&d2) == delta.complex,
        format!("dim = {cap_dim}"),
    );

    let h = reduced_homology_dims(&delta.complex, field);
    let top = h.get(2 * k as isize - 2);
    push(&mut checks, "homology-nonvanishing", top >= 1, format!("dim H̃_{} = {top}", 2 * k - 2));
    push(
        &mut checks,
        "mayer-vietoris",
        mayer_vietoris_check(&d1, &d2, field)?,
        "H̃_i(Δ) = H̃_(i-1)(Δ1 ∩ Δ2) for all i".to_string(),
    );

    push(
        &mut checks,
        "pd-bounds",
        pd_in <= bound && top >= 1,
        format!("pd in(I_G) = {pd_in} <= {bound} <= pd K[G]"),
    );

    let report = depth_report(&g, opts)?;
    push(
        &mut checks,
        "depth",
        report.value() == Some(7) && report.krull_dim == k + 6,
        format!(
            "depth in [{}, {}], krull dim {}",
            report.depth_lower, report.depth_upper, report.krull_dim
        ),
    );

    Ok(FamilyVerification { k, checks, depth: report.value(), krull_dim: report.krull_dim })
}
