//! Random instances and property predicates shared by the integration tests.

#![allow(dead_code)]

use edgering::homology::{reduced_homology_dims, Face};
use edgering::semigroup::{delta_complex, member};
use edgering::{DegreeVector, ExponentVector, FieldChoice, Graph, MonomialIdeal, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::Rng;

/// A connected graph on `d` vertices: a random spanning tree plus each other
/// pair with probability `p`.
pub fn connected_graph(rng: &mut impl Rng, d: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (1..=d).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..d {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    for a in 1..=d {
        for b in a + 1..=d {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges.shuffle(rng);
    Graph::new(d, edges).unwrap()
}

/// Any simple graph on `d` vertices.
pub fn any_graph(rng: &mut impl Rng, d: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=d {
        for b in a + 1..=d {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(d, edges).unwrap()
}

/// A connected nonbipartite graph with at most `max_edges` edges.
pub fn small_nonbipartite(rng: &mut impl Rng, max_edges: usize) -> Graph {
    loop {
        let d = rng.gen_range(3..=6);
        let g = connected_graph(rng, d, 0.35);
        if !g.is_bipartite() && g.r() <= max_edges {
            return g;
        }
    }
}

/// A degree vector `Σ c_l a_l` with random nonnegative `c` of small total.
pub fn semigroup_element(rng: &mut impl Rng, g: &Graph, max_total: u32) -> DegreeVector {
    let mut s = vec![0u32; g.d()];
    for _ in 0..rng.gen_range(0..=max_total) {
        let (i, j) = g.edge(rng.gen_range(1..=g.r()));
        s[i - 1] += 1;
        s[j - 1] += 1;
    }
    DegreeVector(s)
}

/// A uniformly random degree vector with entries at most `max`.
pub fn degree_vector(rng: &mut impl Rng, d: usize, max: u32) -> DegreeVector {
    DegreeVector((0..d).map(|_| rng.gen_range(0..=max)).collect())
}

/// Random facets on `{1, ..., n}`.
pub fn random_facets(rng: &mut impl Rng, n: u32) -> Vec<Face> {
    (0..rng.gen_range(1..=7))
        .map(|_| {
            (1..=n).filter(|_| rng.gen_bool(0.45)).collect()
        })
        .collect()
}

/// Up to `max_gens` nonzero monomials in `n <= max_vars` variables, exponents at most `max_exp`.
pub fn monomial_ideal(rng: &mut impl Rng, max_vars: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let gens: Vec<Vec<u32>> = (0..rng.gen_range(1..=max_gens))
        .map(|_| loop {
            let m: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if m.iter().any(|&e| e > 0) {
                break m;
            }
        })
        .collect();
    MonomialIdeal::new(n, gens.into_iter().map(ExponentVector)).unwrap()
}

/// Membership by enumerating edge multiplicities directly.
pub fn brute_member(g: &Graph, s: &[u32]) -> bool {
    fn go(g: &Graph, l: usize, residual: &mut [u32]) -> bool {
        if residual.iter().all(|&e| e == 0) {
            return true;
        }
        if l > g.r() {
            return false;
        }
        let (i, j) = g.edge(l);
        let most = residual[i - 1].min(residual[j - 1]);
        for c in 0..=most {
            residual[i - 1] -= c;
            residual[j - 1] -= c;
            let ok = go(g, l + 1, residual);
            residual[i - 1] += c;
            residual[j - 1] += c;
            if ok {
                return true;
            }
        }
        false
    }
    go(g, 1, &mut s.to_vec())
}

/// A membership answer is sound (certificate sums to `s`) and agrees with enumeration.
pub fn check_membership(g: &Graph, s: &DegreeVector) -> Result<(), String> {
    let res = member(g, s).map_err(|e| e.to_string())?;
    if res.member != brute_member(g, s.as_slice()) {
        return Err(format!("membership of {s:?} disagrees with enumeration"));
    }
    match (&res.certificate, res.member) {
        (Some(c), true) => {
            let mut sum = vec![0u32; g.d()];
            for (l, &m) in c.0.iter().enumerate() {
                let (i, j) = g.edge(l + 1);
                sum[i - 1] += m;
                sum[j - 1] += m;
            }
            if sum != s.0 {
                return Err(format!("certificate {c:?} sums to {sum:?}, not {s:?}"));
            }
            Ok(())
        }
        (None, false) => Ok(()),
        _ => Err("certificate presence does not match the answer".into()),
    }
}

/// `Δ_s` is closed under subsets and every face passes the defining test.
pub fn check_delta_closure(g: &Graph, s: &DegreeVector) -> Result<(), String> {
    let delta = delta_complex(g, s, 20).map_err(|e| e.to_string())?;
    if !delta.complex.is_downward_closed() {
        return Err(format!("Δ_s not downward closed at {s:?}"));
    }
    for face in delta.complex.faces() {
        let n = g.face_degree(face);
        let res: Option<Vec<u32>> = s.0.iter().zip(&n.0).map(|(&a, &b)| a.checked_sub(b)).collect();
        if !res.is_some_and(|r| brute_member(g, &r)) {
            return Err(format!("{face:?} in Δ_s but s - n_F is not in the semigroup"));
        }
    }
    Ok(())
}

pub fn check_euler(facets: &[Face], n: u32) -> Result<(), String> {
    let c = SimplicialComplex::from_facets(1..=n, facets);
    for field in [FieldChoice::Rationals, FieldChoice::prime(2).unwrap()] {
        let h = reduced_homology_dims(&c, field);
        if c.reduced_euler_characteristic() != h.euler_characteristic() {
            return Err(format!("Euler characteristic mismatch on {facets:?}"));
        }
    }
    Ok(())
}

/// Coning every facet over a new apex gives an acyclic complex.
pub fn check_cone(facets: &[Face], n: u32) -> Result<(), String> {
    let coned: Vec<Face> = facets.iter().map(|f| f.iter().copied().chain([n + 1]).collect()).collect();
    let c = SimplicialComplex::from_facets(1..=n + 1, &coned);
    for field in [FieldChoice::Rationals, FieldChoice::prime(3).unwrap()] {
        if !reduced_homology_dims(&c, field).is_acyclic() {
            return Err(format!("cone over {facets:?} has homology"));
        }
    }
    Ok(())
}

pub fn check_graph6(g: &Graph) -> Result<(), String> {
    use edgering::graph::{encode_graph6, parse_graph6};
    let text = encode_graph6(g);
    let back = parse_graph6(&text).map_err(|e| e.to_string())?;
    let mut want = g.edges().to_vec();
    want.sort_unstable();
    if back.d() != g.d() || back.edges() != want.as_slice() || encode_graph6(&back) != text {
        return Err(format!("graph6 round trip failed for {text}"));
    }
    Ok(())
}
