//! Greedy partitions into vertex-disjoint cliques.
//!
//! A greedy partition repeatedly removes a maximum clique of what is left
//! of the graph. Ties are broken by taking the lexicographically smallest
//! maximum clique, which makes the partition (and everything built on it)
//! reproducible.

use alloc::vec::Vec;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{max_clique_in, Clique, Graph, VertexSet};

/// Ordered parts `A_1, .., A_p` of a clique partition, tied to its host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition<'g> {
    host: &'g Graph,
    parts: Vec<Clique>,
}

/// First violated partition condition, with witnesses. Part indices are
/// 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("part {part} is empty")]
    EmptyPart { part: usize },
    #[error("vertex {vertex} appears in parts {first} and {second}")]
    Overlap {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("vertex {vertex} is in no part")]
    Uncovered { vertex: usize },
    #[error("part {part} is not a clique: {u} and {v} are not adjacent")]
    NotClique { part: usize, u: usize, v: usize },
    #[error("part {part} is larger than the part before it")]
    SizeIncrease { part: usize },
    #[error("part {part} is not a maximum clique of the residual graph; {larger:?} is larger")]
    NotMaximum { part: usize, larger: Clique },
    #[error("vertex {vertex} of part {later} is adjacent to all of part {earlier}")]
    NoNonNeighbor {
        earlier: usize,
        later: usize,
        vertex: usize,
    },
    #[error("{parts} parts exceed n - δ = {bound}")]
    TooManyParts { parts: usize, bound: usize },
}

impl<'g> CliquePartition<'g> {
    /// Wraps explicit parts without checking any partition property beyond
    /// vertex indices being in range. Use [`verify_partition`] to check.
    pub fn new(host: &'g Graph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let parts: Vec<Clique> = parts.into_iter().map(Clique::new).collect();
        for c in &parts {
            if let Some(&v) = c.vertices().iter().find(|&&v| v >= host.order()) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host.order(),
                });
            }
        }
        Ok(CliquePartition { host, parts })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn parts(&self) -> &[Clique] {
        &self.parts
    }

    /// Number of parts `p`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Clique::len).collect()
    }

    pub fn part_sets(&self) -> Vec<VertexSet> {
        self.parts
            .iter()
            .map(|c| c.to_set(self.host.order()))
            .collect()
    }

    /// Index of the part containing each vertex.
    pub fn part_of(&self) -> Vec<usize> {
        let mut owner = alloc::vec![usize::MAX; self.host.order()];
        for (i, c) in self.parts.iter().enumerate() {
            for &v in c.vertices() {
                owner[v] = i;
            }
        }
        owner
    }
}

/// Greedy partition of `h`: at each step the lexicographically smallest
/// maximum clique of the remaining graph is removed.
pub fn greedy_partition(h: &Graph) -> CliquePartition<'_> {
    let mut residual = h.vertex_set();
    let mut parts = Vec::new();
    while !residual.is_clear() {
        let c = max_clique_in(h, &residual);
        for &v in c.vertices() {
            residual.set(v, false);
        }
        parts.push(c);
    }
    CliquePartition { host: h, parts }
}

/// Checks that `p` is a greedy partition of its host:
/// disjoint cliques covering every vertex, non-increasing sizes, each part a
/// maximum clique of the residual graph, every later-part vertex has a
/// non-neighbour in each earlier part, and `p <= n - δ(H)`.
pub fn verify_partition(p: &CliquePartition<'_>) -> core::result::Result<(), PartitionViolation> {
    let g = p.host;
    let n = g.order();
    let mut owner: Vec<Option<usize>> = alloc::vec![None; n];
    for (i, c) in p.parts.iter().enumerate() {
        if c.is_empty() {
            return Err(PartitionViolation::EmptyPart { part: i });
        }
        for &v in c.vertices() {
            if let Some(first) = owner[v] {
                return Err(PartitionViolation::Overlap {
                    vertex: v,
                    first,
                    second: i,
                });
            }
            owner[v] = Some(i);
        }
    }
    if let Some(vertex) = owner.iter().position(Option::is_none) {
        return Err(PartitionViolation::Uncovered { vertex });
    }
    for (i, c) in p.parts.iter().enumerate() {
        let vs = c.vertices();
        for (x, &u) in vs.iter().enumerate() {
            if let Some(&v) = vs[x + 1..].iter().find(|&&v| !g.adjacent(u, v)) {
                return Err(PartitionViolation::NotClique { part: i, u, v });
            }
        }
        if i > 0 && c.len() > p.parts[i - 1].len() {
            return Err(PartitionViolation::SizeIncrease { part: i });
        }
    }
    let mut residual = g.vertex_set();
    for (i, c) in p.parts.iter().enumerate() {
        let best = max_clique_in(g, &residual);
        if best.len() > c.len() {
            return Err(PartitionViolation::NotMaximum {
                part: i,
                larger: best,
            });
        }
        for &v in c.vertices() {
            residual.set(v, false);
        }
    }
    let sets = p.part_sets();
    for (i, earlier) in sets.iter().enumerate() {
        for (j, later) in p.parts.iter().enumerate().skip(i + 1) {
            if let Some(&v) = later
                .vertices()
                .iter()
                .find(|&&v| earlier.is_subset(g.neighbors(v)))
            {
                return Err(PartitionViolation::NoNonNeighbor {
                    earlier: i,
                    later: j,
                    vertex: v,
                });
            }
        }
    }
    let bound = n - g.min_degree();
    if p.len() > bound {
        return Err(PartitionViolation::TooManyParts {
            parts: p.len(),
            bound,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_cliques, turan_graph};
    use alloc::vec;

    use fixedbitset::FixedBitSet;

    fn union_of(sets: &[VertexSet], range: core::ops::Range<usize>, n: usize) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(n);
        for set in &sets[range] {
            s.union_with(set);
        }
        s
    }

    #[test]
    fn greedy_examples() {
        let t12 = turan_graph(12, 4).unwrap();
        let p = greedy_partition(&t12);
        assert_eq!(p.sizes(), vec![4, 4, 4]);
        assert_eq!(p.parts()[0].vertices(), &[0, 1, 2, 3]);
        assert_eq!(verify_partition(&p), Ok(()));

        let c5 = Graph::cycle(5).unwrap();
        let p = greedy_partition(&c5);
        assert_eq!(p.sizes(), vec![2, 2, 1]);
        assert_eq!(verify_partition(&p), Ok(()));
        assert!(p.len() <= 5 - c5.min_degree());

        let e3 = Graph::empty(3).unwrap();
        assert_eq!(greedy_partition(&e3).sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn two_edges_of_k4_is_not_greedy() {
        let k4 = Graph::complete(4).unwrap();
        let p = CliquePartition::new(&k4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        match verify_partition(&p) {
            Err(PartitionViolation::NotMaximum { part: 0, larger }) => assert_eq!(larger.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn structural_violations_are_reported() {
        let k3 = Graph::complete(3).unwrap();
        let p = CliquePartition::new(&k3, vec![vec![0, 1, 2], vec![2]]).unwrap();
        assert!(matches!(
            verify_partition(&p),
            Err(PartitionViolation::Overlap { vertex: 2, .. })
        ));
        let p = CliquePartition::new(&k3, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            verify_partition(&p),
            Err(PartitionViolation::Uncovered { vertex: 2 })
        );
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = CliquePartition::new(&path, vec![vec![0, 2], vec![1]]).unwrap();
        assert_eq!(
            verify_partition(&p),
            Err(PartitionViolation::NotClique {
                part: 0,
                u: 0,
                v: 2
            })
        );
        assert!(CliquePartition::new(&k3, vec![vec![5]]).is_err());
    }

    #[test]
    fn small_parts_are_triangle_free() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 3),
            ],
        )
        .unwrap();
        let p = greedy_partition(&g);
        assert_eq!(verify_partition(&p), Ok(()));
        let sets = p.part_sets();
        let b = p.sizes().iter().filter(|&&s| s >= 3).count();
        let rest = union_of(&sets, b..sets.len(), 7);
        let verts: Vec<usize> = rest.ones().collect();
        assert_eq!(count_cliques(&g.induced(&verts).unwrap(), 3).unwrap(), 0);
    }
}
