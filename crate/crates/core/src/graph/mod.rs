//! Finite simple graphs on `[d] = {1, ..., d}` with an ordered edge list.
//!
//! Edge `l` (1-based) corresponds to the variable `x_l` of the presentation
//! ring, so edge order is part of a graph's identity.

mod edgelist;
mod graph6;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binom::ExponentVector;
use crate::error::{Error, Result};

pub use edgelist::{format_edge_list, parse_edge_list};
pub use graph6::{encode_graph6, parse_graph6};

/// Exponents of `t_1, ..., t_d`; the grading of the edge ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zeros(d: usize) -> Self {
        DegreeVector(vec![0; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Parses the comma-separated form used on the command line, e.g. `1,1,2,2,1,1,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty degree vector".into()));
        }
        text.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad degree entry {part:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DegreeVector)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Columns `a_1, ..., a_r` of the vertex-edge incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceColumns {
    pub d: usize,
    pub columns: Vec<DegreeVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph. Pairs may be given in either orientation and are
    /// stored as `(i, j)` with `i < j`; the list order is kept.
    pub fn new(d: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for (index, (a, b)) in edges.into_iter().enumerate() {
            let index = index + 1;
            for v in [a, b] {
                if v == 0 || v > d {
                    return Err(Error::VertexOutOfRange { index, vertex: v, d });
                }
            }
            if a == b {
                return Err(Error::Loop { index, vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { index, i: e.0, j: e.1 });
            }
            stored.push(e);
        }
        Ok(Graph { d, edges: stored })
    }

    /// The graph `G_{k+6}`: two triangles `{1,2,3}` and `{4,5,6}` joined by the
    /// `k` paths `3 - (i+6) - 4`.
    ///
    /// Edge order: `{1,2}, {1,3}, {2,3}, {4,5}, {4,6}, {5,6}`, then for each `i`
    /// the pair `{3, i+6}, {4, i+6}`.
    pub fn family(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("family index k must be >= 1, got {k}")));
        }
        let mut edges = vec![(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)];
        for i in 1..=k {
            edges.push((3, i + 6));
            edges.push((4, i + 6));
        }
        Graph::new(k + 6, edges)
    }

    /// A graph on `[d]` whose edge ring has depth `f` and Krull dimension `d`:
    /// `G_{d-f+7}` with pendant edges `{1, d-f+8}, ..., {1, d}` appended.
    pub fn theorem_construction(f: usize, d: usize) -> Result<Self> {
        if f < 7 || f > d {
            return Err(Error::InvalidParameter(format!("need 7 <= f <= d, got f={f}, d={d}")));
        }
        let base = Graph::family(d - f + 1)?;
        let mut edges = base.edges.clone();
        edges.extend((d - f + 8..=d).map(|v| (1, v)));
        Graph::new(d, edges)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of edges, i.e. number of variables of the presentation ring.
    pub fn r(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge `l`, 1-based.
    pub fn edge(&self, l: usize) -> (usize, usize) {
        self.edges[l - 1]
    }

    /// Adds a new vertex `d + 1` joined to `at` by an edge appended last.
    pub fn with_pendant(&self, at: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((at, self.d + 1));
        Graph::new(self.d + 1, edges)
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    /// Neighbour lists indexed by `vertex - 1`, each holding `(neighbour, edge index)`
    /// with 0-based edge indices in edge order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.d];
        for (l, &(i, j)) in self.edges.iter().enumerate() {
            adj[i - 1].push((j, l));
            adj[j - 1].push((i, l));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.d];
        let mut queue = VecDeque::from([1usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v - 1] {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.d
    }

    /// 2-colouring test over every component.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.d];
        for start in 1..=self.d {
            if colour[start - 1].is_some() {
                continue;
            }
            colour[start - 1] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v - 1].unwrap();
                for &(w, _) in &adj[v - 1] {
                    match colour[w - 1] {
                        None => {
                            colour[w - 1] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Krull dimension of the edge ring of a connected graph: `d` when the graph
    /// has an odd cycle, `d - 1` when it is bipartite.
    pub fn krull_dim(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(if self.is_bipartite() { self.d - 1 } else { self.d })
    }

    pub fn incidence_columns(&self) -> IncidenceColumns {
        let columns = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let mut col = vec![0; self.d];
                col[i - 1] = 1;
                col[j - 1] = 1;
                DegreeVector(col)
            })
            .collect();
        IncidenceColumns { d: self.d, columns }
    }

    /// The `t`-degree `Σ c_l a_l` of the monomial `x^c`.
    pub fn t_degree(&self, c: &ExponentVector) -> Result<DegreeVector> {
        if c.len() != self.r() {
            return Err(Error::LengthMismatch { expected: self.r(), found: c.len() });
        }
        let mut deg = vec![0u32; self.d];
        for (&(i, j), &e) in self.edges.iter().zip(c.as_slice()) {
            for v in [i, j] {
                deg[v - 1] = deg[v - 1].checked_add(e).ok_or(Error::ExponentOverflow)?;
            }
        }
        Ok(DegreeVector(deg))
    }

    /// `n_F = Σ_{l ∈ F} a_l` for a set of 1-based edge indices.
    pub fn face_degree(&self, face: &[u32]) -> DegreeVector {
        let mut deg = vec![0u32; self.d];
        for &l in face {
            let (i, j) = self.edges[l as usize - 1];
            deg[i - 1] += 1;
            deg[j - 1] += 1;
        }
        DegreeVector(deg)
    }

    /// Recognizes `G_{k+6}` exactly (same vertex count and edge order).
    pub fn family_index(&self) -> Option<usize> {
        let k = self.d.checked_sub(6)?;
        if k == 0 {
            return None;
        }
        (Graph::family(k).ok()? == *self).then_some(k)
    }
}
