//! Dense undirected simple graphs over vertices `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex. Rows are kept
//! symmetric and irreflexive by every constructor and mutator.

mod cliques;
mod turan;

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use cliques::{
    closure, common_neighbors_in, count_cliques, enumerate_cliques, max_clique, max_clique_in,
    maximal_cliques,
};
pub use turan::{is_turan, turan_graph, turan_part_sizes};

/// A set of vertex indices, one bit per vertex.
pub type VertexSet = FixedBitSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            n,
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v].insert_range(..);
            g.adj[v].set(v, false);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange("cycles need at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if g.has_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph on `n` vertices whose edges are the set bits of
    /// `mask`, enumerating pairs `(0,1), (0,2), .., (n-2,n-1)`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bit < 64 && mask >> bit & 1 == 1 {
                    g.add_edge(u, v)?;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adj[u].contains(v))
    }

    /// Unchecked adjacency test for hot loops; indices must be in range.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let present = self.has_edge(u, v)?;
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        Ok(present)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Lowest-index vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> usize {
        (0..self.n)
            .min_by_key(|&v| (self.degree(v), v))
            .unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }

    /// Converts a vertex list into a set sized for this graph.
    pub fn set_of(&self, vertices: &[usize]) -> Result<VertexSet> {
        let mut s = FixedBitSet::with_capacity(self.n);
        for &v in vertices {
            self.check(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && vertices[i + 1..]
                    .iter()
                    .all(|&v| v < self.n && u != v && self.adj[u].contains(v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v].toggle_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// The subgraph induced on `vertices` (strictly increasing), relabelled
    /// so that new vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(
                "induced subgraph vertices must be strictly increasing",
            ));
        }
        for &v in vertices {
            self.check(v)?;
        }
        let mut h = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    h.adj[i].insert(j);
                    h.adj[j].insert(i);
                }
            }
        }
        Ok(h)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.ones()
            .map(|v| self.adj[v].intersection_count(set))
            .sum::<usize>()
            / 2
    }

    /// Number of edges between two disjoint sets.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.ones().map(|v| self.adj[v].intersection_count(b)).sum()
    }
}

/// A clique stored as a strictly increasing vertex list. Ordering is
/// lexicographic on that list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// Sorts and deduplicates; adjacency is not checked.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    /// Like [`Clique::new`] but verifies that the vertices are pairwise
    /// adjacent in `g`.
    pub fn checked(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let c = Clique::new(vertices);
        for &v in &c.0 {
            g.check(v)?;
        }
        if !g.is_clique(&c.0) {
            return Err(Error::OutOfRange("vertex set is not a clique"));
        }
        Ok(c)
    }

    pub fn from_set(set: &VertexSet) -> Self {
        Clique(set.ones().collect())
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Subset test on sorted lists.
    pub fn is_subset_of(&self, other: &Clique) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            s.insert(v);
        }
        s
    }

    /// Maps every vertex through `labels` (e.g. back from an induced subgraph).
    pub fn relabel(&self, labels: &[usize]) -> Clique {
        Clique::new(self.0.iter().map(|&v| labels[v]).collect())
    }
}

impl From<Vec<usize>> for Clique {
    fn from(v: Vec<usize>) -> Self {
        Clique::new(v)
    }
}
