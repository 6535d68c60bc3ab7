//! Small immutable chemical graphs (simple, undirected, max degree 4).
//!
//! Adjacency is stored as one `u64` bit row per vertex, which caps the order
//! at 64. All "mutating" operations return a new graph.

mod canon;
mod graph6;

pub use canon::{canonical_key, canonical_labeling, CanonicalKey, CanonicalLabeling};
pub use graph6::{decode_graph6, encode_graph6};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;
/// Largest vertex degree in a chemical graph.
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} is outside 1..={MAX_ORDER}")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} would have degree above {MAX_DEGREE}")]
    DegreeExceedsFour(usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

/// A simple undirected graph with every vertex degree at most 4.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChemicalGraph {
    n: usize,
    adj: Vec<u64>,
}

impl ChemicalGraph {
    /// Validated construction from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        Ok(ChemicalGraph { n, adj: vec![0; n] })
    }

    /// Builds from adjacency rows, checking symmetry and degrees.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        let mask = row_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::LoopEdge(v));
            }
            if row.count_ones() as usize > MAX_DEGREE {
                return Err(GraphError::DegreeExceedsFour(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::MalformedGraph6(format!(
                        "asymmetric adjacency at {v}-{u}"
                    )));
                }
            }
        }
        Ok(ChemicalGraph { n, adj: rows })
    }

    /// Caller guarantees symmetric, irreflexive rows of popcount ≤ 4.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        ChemicalGraph {
            n: rows.len(),
            adj: rows,
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        for w in [u, v] {
            if self.degree(w) >= MAX_DEGREE {
                return Err(GraphError::DegreeExceedsFour(w));
            }
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn delete_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Removes `remove` then inserts `add`, validating the result.
    pub fn replace_edges(
        &self,
        remove: &[(usize, usize)],
        add: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &(u, v) in remove {
            g.delete_edge(u, v)?;
        }
        for &(u, v) in add {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.replace_edges(&[], &[(u, v)])
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.replace_edges(&[(u, v)], &[])
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    /// Adjacency bit row of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn census(&self) -> Census {
        Census::of(self)
    }

    pub fn is_connected(&self) -> bool {
        self.component_mask(0) == row_mask(self.n)
    }

    /// Bitmask of the component containing `v`.
    pub fn component_mask(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut remaining = row_mask(self.n);
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.component_mask(v);
            out.push(bits(comp).collect());
            remaining &= !comp;
        }
        out
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let rows = vertices
            .iter()
            .map(|&v| {
                bits(self.adj[v])
                    .filter(|&u| pos[u] != usize::MAX)
                    .fold(0u64, |acc, u| acc | 1 << pos[u])
            })
            .collect();
        ChemicalGraph::from_rows_unchecked(rows)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.adj[v]).fold(0u64, |acc, u| acc | 1 << perm[u]);
        }
        ChemicalGraph::from_rows_unchecked(rows)
    }

    /// Disjoint union, `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(ChemicalGraph::from_rows_unchecked(rows))
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        decode_graph6(text)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(self)
    }
}

impl fmt::Debug for ChemicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChemicalGraph({} {:?})", self.n, self.edges())
    }
}

pub(crate) fn row_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bit positions of `x`.
pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// Degree and edge-type counts of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Census {
    /// `degree_counts[i]` = number of vertices of degree `i`, `i = 0..=4`.
    pub degree_counts: [usize; 5],
    /// `edge_counts[i][j]` for `1 ≤ i ≤ j ≤ 4` = number of edges joining a
    /// degree-`i` and a degree-`j` vertex. Entries with `i > j` or a zero
    /// index stay zero.
    pub edge_counts: [[usize; 5]; 5],
}

impl Census {
    pub fn of(g: &ChemicalGraph) -> Self {
        let mut c = Census::default();
        for v in 0..g.order() {
            c.degree_counts[g.degree(v)] += 1;
        }
        for (u, v) in g.edges() {
            let (i, j) = (g.degree(u), g.degree(v));
            c.edge_counts[i.min(j)][i.max(j)] += 1;
        }
        c
    }

    /// `x_{i,j}`, symmetric in its arguments.
    pub fn x(&self, i: usize, j: usize) -> usize {
        self.edge_counts[i.min(j)][i.max(j)]
    }

    /// `n_i`
    pub fn n(&self, i: usize) -> usize {
        self.degree_counts[i]
    }

    pub fn order(&self) -> usize {
        self.degree_counts.iter().sum()
    }

    pub fn size(&self) -> usize {
        (1..=4)
            .flat_map(|i| (i..=4).map(move |j| (i, j)))
            .map(|(i, j)| self.edge_counts[i][j])
            .sum()
    }

    /// `(n_1, n_2, n_3, n_4)`
    pub fn quadruplet(&self) -> [usize; 4] {
        [
            self.degree_counts[1],
            self.degree_counts[2],
            self.degree_counts[3],
            self.degree_counts[4],
        ]
    }

    /// Checks the handshake and per-degree endpoint identities.
    pub fn is_consistent(&self) -> bool {
        let m = self.size();
        let deg_sum: usize = (0..=4).map(|i| i * self.degree_counts[i]).sum();
        if deg_sum != 2 * m {
            return false;
        }
        (1..=4).all(|i| {
            let endpoints: usize = (1..=4)
                .map(|j| {
                    if i == j {
                        2 * self.x(i, i)
                    } else {
                        self.x(i, j)
                    }
                })
                .sum();
            endpoints == i * self.degree_counts[i]
        })
    }
}
