//! Simplicial complexes and their reduced homology over `Q` or `F_p`.

mod collapse;
mod rank;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use collapse::facet_homology;
pub use rank::{rank_mod_p, rank_rational, SparseRow};

/// A face: strictly increasing vertex labels.
pub type Face = Vec<u32>;

/// Downward-closed family of faces. A complex is either void (no faces at
/// all) or contains the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    /// `faces[j + 1]` holds the `j`-dimensional faces, sorted.
    faces: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    pub fn void(vertices: impl IntoIterator<Item = u32>) -> Self {
        SimplicialComplex { vertices: sorted_unique(vertices), faces: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(vertices: impl IntoIterator<Item = u32>) -> Self {
        SimplicialComplex { vertices: sorted_unique(vertices), faces: vec![vec![Vec::new()]] }
    }

    /// Builds a complex from an explicit face list, which must be downward closed.
    pub fn from_faces(vertices: impl IntoIterator<Item = u32>, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let vertices = sorted_unique(vertices);
        let vset: HashSet<u32> = vertices.iter().copied().collect();
        let mut all: BTreeSet<Face> = BTreeSet::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(v) = f.iter().find(|v| !vset.contains(v)) {
                return Err(Error::Precondition(format!("face uses vertex {v} outside the vertex set")));
            }
            all.insert(f);
        }
        let c = Self::assemble(vertices, all);
        if !c.is_downward_closed() {
            return Err(Error::Precondition("face family is not downward closed".into()));
        }
        Ok(c)
    }

    /// The complex generated by `facets`. An empty facet list gives the void complex.
    pub fn from_facets(vertices: impl IntoIterator<Item = u32>, facets: &[Face]) -> Self {
        let mut all = BTreeSet::new();
        for facet in facets {
            let mut facet = facet.clone();
            facet.sort_unstable();
            facet.dedup();
            let n = facet.len();
            assert!(n < 63, "facet too large to expand");
            for mask in 0u64..(1 << n) {
                let face: Face = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                all.insert(face);
            }
        }
        Self::assemble(sorted_unique(vertices), all)
    }

    fn assemble(vertices: Vec<u32>, all: BTreeSet<Face>) -> Self {
        let top = all.iter().map(Vec::len).max();
        let mut faces = match top {
            Some(t) => vec![Vec::new(); t + 1],
            None => Vec::new(),
        };
        for f in all {
            faces[f.len()].push(f);
        }
        SimplicialComplex { vertices, faces }
    }

    /// Builds the complex of all sets accepted by `is_face`, which must be
    /// monotone (subsets of faces are faces). Works level by level: a set is
    /// offered to `is_face` only when all its maximal proper subsets were
    /// accepted. Candidates of one size are tested in parallel.
    pub fn grow(vertices: impl IntoIterator<Item = u32>, is_face: impl Fn(&[u32]) -> bool + Sync) -> Self {
        let vertices = sorted_unique(vertices);
        if !is_face(&[]) {
            return SimplicialComplex { vertices, faces: Vec::new() };
        }
        let mut levels: Vec<Vec<Face>> = vec![vec![Vec::new()]];
        loop {
            let current = levels.last().unwrap();
            let known: HashSet<&[u32]> = current.iter().map(Vec::as_slice).collect();
            let candidates: Vec<Face> = current
                .iter()
                .flat_map(|f| {
                    let start = f.last().map_or(0, |&m| vertices.partition_point(|&v| v <= m));
                    vertices[start..].iter().map(move |&v| {
                        let mut c = f.clone();
                        c.push(v);
                        c
                    })
                })
                .filter(|c| {
                    (0..c.len() - 1).all(|i| {
                        let mut sub = c.clone();
                        sub.remove(i);
                        known.contains(sub.as_slice())
                    })
                })
                .collect();
            let next: Vec<Face> = candidates.into_par_iter().filter(|c| is_face(c)).collect();
            if next.is_empty() {
                break;
            }
            levels.push(next);
        }
        SimplicialComplex { vertices, faces: levels }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension, `-1` for `{∅}`, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.faces.len() as isize - 2)
    }

    pub fn faces_of_dim(&self, j: isize) -> &[Face] {
        usize::try_from(j + 1).ok().and_then(|i| self.faces.get(i)).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Face counts `f_{-1}, f_0, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        self.faces.get(face.len()).is_some_and(|level| level.binary_search_by(|f| f.as_slice().cmp(face)).is_ok())
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().flatten().all(|f| {
            (0..f.len()).all(|i| {
                let mut sub = f.clone();
                sub.remove(i);
                self.contains(&sub)
            })
        })
    }

    /// Inclusion-maximal faces, sorted.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for (len, level) in self.faces.iter().enumerate() {
            let above = self.faces.get(len + 1);
            for f in level {
                let covered = above.is_some_and(|up| up.iter().any(|g| is_subset(f, g)));
                if !covered {
                    out.push(f.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let all: BTreeSet<Face> = self.faces().chain(other.faces()).cloned().collect();
        Self::assemble(sorted_unique(self.vertices.iter().chain(&other.vertices).copied()), all)
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let all: BTreeSet<Face> = self.faces().filter(|f| other.contains(f)).cloned().collect();
        Self::assemble(sorted_unique(self.vertices.iter().chain(&other.vertices).copied()), all)
    }

    /// Reduced Euler characteristic `Σ_j (-1)^j f_j`, from `j = -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, level)| if i % 2 == 1 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }

    /// Columns of the boundary map from `j`-faces to `(j-1)`-faces, as sparse
    /// rows. Deleting the `i`-th smallest vertex carries the sign `(-1)^i`.
    pub fn boundary_rows(&self, j: isize) -> Vec<SparseRow> {
        let lower = self.faces_of_dim(j - 1);
        let index: HashMap<&[u32], usize> = lower.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        self.faces_of_dim(j)
            .iter()
            .map(|f| {
                let mut row: SparseRow = (0..f.len())
                    .map(|i| {
                        let mut sub = f.clone();
                        sub.remove(i);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        (index[sub.as_slice()], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        let facets: Vec<String> = self
            .facets()
            .iter()
            .map(|fc| format!("{{{}}}", fc.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&facets.join(" "))
    }
}

fn sorted_unique(v: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut v: Vec<u32> = v.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

pub const DEFAULT_PRIME: u64 = 32003;

impl FieldChoice {
    pub fn prime(p: u64) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if !is_prime || p > u32::MAX as u64 {
            return Err(Error::InvalidParameter(format!("{p} is not a supported prime modulus")));
        }
        Ok(FieldChoice::Prime(p))
    }

    pub fn rank(&self, rows: &[SparseRow]) -> usize {
        match *self {
            FieldChoice::Rationals => rank_rational(rows),
            FieldChoice::Prime(p) => rank_mod_p(rows, p),
        }
    }
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Rationals
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Rationals => f.write_str("q"),
            FieldChoice::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    /// `q` for the rationals, `fp:P` for the prime field of order `P`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldChoice::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected q or fp:P")))?;
        FieldChoice::prime(p)
    }
}

/// `dim H̃_j` for `j = -1, 0, ..., dim`. Empty for the void complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyDims(pub Vec<usize>);

impl HomologyDims {
    pub fn get(&self, j: isize) -> usize {
        usize::try_from(j + 1).ok().and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// `(j, dim)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.0.iter().enumerate().filter(|(_, &d)| d > 0).map(|(i, &d)| (i as isize - 1, d))
    }

    /// Alternating sum `Σ_j (-1)^j dim H̃_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Facets of a complex, reduced by strong collapses: a vertex `v` is deleted
/// while some other vertex lies in every facet containing `v`. The result is
/// homotopy equivalent to the input, so reduced homology is unchanged.
pub fn strong_core(facets: &[Face]) -> Vec<Face> {
    let mut facets = maximal_faces(facets.to_vec());
    loop {
        let mut vertices: Vec<u32> = facets.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() <= 1 {
            return facets;
        }
        let dominated = vertices.iter().copied().find(|&v| {
            let mut containing = facets.iter().filter(|f| f.binary_search(&v).is_ok());
            let first = containing.next().expect("vertex lies in a facet");
            let mut common: Vec<u32> = first.iter().copied().filter(|&w| w != v).collect();
            for f in containing {
                common.retain(|w| f.binary_search(w).is_ok());
            }
            !common.is_empty()
        });
        let Some(v) = dominated else { return facets };
        for f in &mut facets {
            if let Ok(i) = f.binary_search(&v) {
                f.remove(i);
            }
        }
        facets = maximal_faces(facets);
    }
}

/// Facets of the nerve of the facet cover: vertex `i` stands for the `i`-th
/// facet (1-based), and each vertex `v` of the complex contributes the set of
/// facets containing it. Homotopy equivalent to the input.
pub fn nerve(facets: &[Face]) -> Vec<Face> {
    let mut vertices: Vec<u32> = facets.iter().flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    let stars = vertices
        .iter()
        .map(|v| (1..).zip(facets).filter(|(_, f)| f.contains(v)).map(|(i, _)| i).collect())
        .collect();
    maximal_faces(stars)
}

/// Alternates [`strong_core`] and [`nerve`] while the nerve has fewer
/// vertices, returning a small complex with the same reduced homology.
pub fn reduce_facets(facets: &[Face]) -> Vec<Face> {
    let mut current = strong_core(facets);
    loop {
        let nverts = current.iter().flatten().collect::<BTreeSet<_>>().len();
        if current.len() >= nverts || current.iter().any(Vec::is_empty) {
            return current;
        }
        current = strong_core(&nerve(&current));
    }
}

fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    for f in &mut faces {
        f.sort_unstable();
        f.dedup();
    }
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|k| f.iter().all(|x| k.binary_search(x).is_ok())) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// Reduced homology dimensions, including the augmentation to the empty face.
/// Ranks for different degrees are computed in parallel.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: FieldChoice) -> HomologyDims {
    let Some(dim) = c.dim() else { return HomologyDims::default() };
    // ranks[j + 1] = rank of the boundary out of j-faces, j = -1..=dim+1
    let ranks: Vec<usize> = (-1..=dim + 1)
        .into_par_iter()
        .map(|j| if j == -1 { 0 } else { field.rank(&c.boundary_rows(j)) })
        .collect();
    let dims = (-1..=dim)
        .map(|j| {
            let idx = (j + 1) as usize;
            c.faces_of_dim(j).len() - ranks[idx] - ranks[idx + 1]
        })
        .collect();
    HomologyDims(dims)
}

/// Checks `H̃_i(c1 ∪ c2) ≅ H̃_{i-1}(c1 ∩ c2)` dimensionwise. Both complexes must
/// be acyclic, otherwise the identity does not apply and an error is returned.
pub fn mayer_vietoris_check(c1: &SimplicialComplex, c2: &SimplicialComplex, field: FieldChoice) -> Result<bool> {
    for (name, c) in [("first", c1), ("second", c2)] {
        if !reduced_homology_dims(c, field).is_acyclic() {
            return Err(Error::Precondition(format!("{name} complex has nonvanishing reduced homology")));
        }
    }
    let union = reduced_homology_dims(&c1.union(c2), field);
    let inter = reduced_homology_dims(&c1.intersection(c2), field);
    let top = union.0.len().max(inter.0.len() + 1) as isize;
    Ok((-1..top).all(|i| union.get(i) == inter.get(i - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets([1, 2, 3], &[vec![1, 2], vec![1, 3], vec![2, 3]])
    }

    #[test]
    fn hollow_triangle_has_a_loop() {
        let h = reduced_homology_dims(&hollow_triangle(), FieldChoice::Rationals);
        assert_eq!(h.0, vec![0, 0, 1]);
    }

    #[test]
    fn void_and_irrelevant_differ() {
        let void = SimplicialComplex::void([1, 2]);
        let irr = SimplicialComplex::irrelevant([1, 2]);
        assert_ne!(void, irr);
        assert_eq!(void.dim(), None);
        assert_eq!(irr.dim(), Some(-1));
        assert!(reduced_homology_dims(&void, FieldChoice::Rationals).0.is_empty());
        assert_eq!(reduced_homology_dims(&irr, FieldChoice::Rationals).0, vec![1]);
        assert_eq!(void.to_string(), "void");
        assert_eq!(irr.to_string(), "{}");
    }

    #[test]
    fn four_cycle_intersection_complex() {
        let c = SimplicialComplex::from_facets(7..=10, &[vec![9, 10], vec![7, 10], vec![8, 9], vec![7, 8]]);
        let h = reduced_homology_dims(&c, FieldChoice::Rationals);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(0), 0);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP^2
        let facets: Vec<Face> = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [2, 4, 6], [3, 5, 6],
        ]
        .iter()
        .map(|f| f.to_vec())
        .collect();
        let c = SimplicialComplex::from_facets(1..=6, &facets);
        assert_eq!(reduced_homology_dims(&c, FieldChoice::Rationals).0, vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_dims(&c, FieldChoice::Prime(2)).0, vec![0, 0, 1, 1]);
    }

    #[test]
    fn mayer_vietoris_two_disjoint_simplices() {
        let a = SimplicialComplex::from_facets([1, 2], &[vec![1, 2]]);
        let b = SimplicialComplex::from_facets([3, 4], &[vec![3, 4]]);
        assert!(mayer_vietoris_check(&a, &b, FieldChoice::Rationals).unwrap());
        assert!(mayer_vietoris_check(&hollow_triangle(), &b, FieldChoice::Rationals).is_err());
    }

    #[test]
    fn from_faces_checks_closure() {
        assert!(SimplicialComplex::from_faces([1, 2], [vec![], vec![1, 2]]).is_err());
        assert!(SimplicialComplex::from_faces([1], [vec![2]]).is_err());
        let c = SimplicialComplex::from_faces([1, 2], [vec![], vec![1], vec![2]]).unwrap();
        assert_eq!(c.facets(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn grow_matches_facets() {
        let c = SimplicialComplex::grow(1..=4, |f| f.len() <= 2 && !f.contains(&4) || f == [4]);
        assert_eq!(c.facets(), vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![4]]);
        assert!(SimplicialComplex::grow(1..=3, |_| false).is_void());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Rationals);
        assert_eq!("fp:32003".parse::<FieldChoice>().unwrap(), FieldChoice::Prime(32003));
        assert!("fp:32004".parse::<FieldChoice>().is_err());
        assert!("z".parse::<FieldChoice>().is_err());
    }

    pub(crate) fn random_facets() -> impl Strategy<Value = Vec<Face>> {
        prop::collection::vec(prop::collection::btree_set(1u32..=7, 1..=4), 1..6)
            .prop_map(|sets| sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    proptest! {
        #[test]
        fn reductions_keep_homology(facets in prop::collection::vec(prop::collection::btree_set(1u32..=8, 1..=5), 1..9)) {
            let facets: Vec<Face> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            let nonzero = |f: &[Face]| {
                let c = SimplicialComplex::from_facets(f.iter().flatten().copied(), f);
                reduced_homology_dims(&c, FieldChoice::Rationals).nonzero().collect::<Vec<_>>()
            };
            let full = nonzero(&facets);
            prop_assert_eq!(&nonzero(&nerve(&facets)), &full);
            prop_assert_eq!(&nonzero(&reduce_facets(&facets)), &full);
        }

        #[test]
        fn strong_core_keeps_homology(facets in prop::collection::vec(prop::collection::btree_set(1u32..=7, 0..=5), 1..9)) {
            let facets: Vec<Face> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            let full = SimplicialComplex::from_facets(1..=7, &facets);
            let core = strong_core(&facets);
            let small = SimplicialComplex::from_facets(1..=7, &core);
            prop_assert!(small.num_faces() <= full.num_faces());
            let nonzero = |c: &SimplicialComplex| {
                reduced_homology_dims(c, FieldChoice::Rationals).nonzero().collect::<Vec<_>>()
            };
            prop_assert_eq!(nonzero(&small), nonzero(&full));
        }

        #[test]
        fn euler_characteristic_consistency(facets in random_facets()) {
            let c = SimplicialComplex::from_facets(1..=7, &facets);
            let h = reduced_homology_dims(&c, FieldChoice::Rationals);
            prop_assert_eq!(c.reduced_euler_characteristic(), h.euler_characteristic());
        }

        #[test]
        fn cones_are_acyclic(facets in random_facets()) {
            let coned: Vec<Face> = facets.iter().map(|f| { let mut f = f.clone(); f.push(8); f }).collect();
            let c = SimplicialComplex::from_facets(1..=8, &coned);
            prop_assert!(reduced_homology_dims(&c, FieldChoice::Rationals).is_acyclic());
        }

        #[test]
        fn full_simplex_is_acyclic(n in 1u32..8) {
            let c = SimplicialComplex::from_facets(1..=n, &[(1..=n).collect()]);
            prop_assert!(reduced_homology_dims(&c, FieldChoice::Prime(DEFAULT_PRIME)).is_acyclic());
            prop_assert_eq!(c.facets().len(), 1);
        }
    }
}
