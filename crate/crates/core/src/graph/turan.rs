use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::error::{Error, Result};

/// Part sizes of `T(n, t)` when part `r` holds the vertices `v ≡ r (mod t)`.
pub fn turan_part_sizes(n: usize, t: usize) -> Result<Vec<usize>> {
    if t == 0 || t > n {
        return Err(Error::InvalidTuran { n, t });
    }
    Ok((0..t).map(|r| (n - r).div_ceil(t)).collect())
}

/// The Turán graph `T(n, t)`: complete `t`-partite, balanced parts, with
/// vertex `v` in part `v mod t`.
pub fn turan_graph(n: usize, t: usize) -> Result<Graph> {
    if t == 0 || t > n {
        return Err(Error::InvalidTuran { n, t });
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u % t != v % t {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Whether `g` is isomorphic to `T(n, t)`: its complement must be a disjoint
/// union of `min(n, t)` cliques whose sizes differ by at most one.
pub fn is_turan(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if t == 0 {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(n);
    let mut sizes = Vec::new();
    for v in 0..n {
        if seen.contains(v) {
            continue;
        }
        // the part of v: v together with its non-neighbours
        let mut part = g.neighbors(v).clone();
        part.toggle_range(..);
        for u in part.ones() {
            // a multipartite part is independent and every member has the
            // same non-neighbourhood
            let mut other = g.neighbors(u).clone();
            other.toggle_range(..);
            if other != part || seen.contains(u) {
                return false;
            }
        }
        seen.union_with(&part);
        sizes.push(part.count_ones(..));
    }
    let (lo, hi) = (sizes.iter().min(), sizes.iter().max());
    sizes.len() == n.min(t) && matches!((lo, hi), (Some(lo), Some(hi)) if hi - lo <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn turan_examples() {
        let g = turan_graph(6, 4).unwrap();
        let mut sizes = turan_part_sizes(6, 4).unwrap();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sizes, vec![2, 2, 1, 1]);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(turan_graph(4, 4).unwrap(), Graph::complete(4).unwrap());
        assert_eq!(turan_graph(3, 4), Err(Error::InvalidTuran { n: 3, t: 4 }));
        assert_eq!(turan_graph(3, 0), Err(Error::InvalidTuran { n: 3, t: 0 }));
    }

    #[test]
    fn recognises_turan_graphs() {
        for n in 1..=30 {
            for t in 1..=n {
                assert!(is_turan(&turan_graph(n, t).unwrap(), t), "T({n},{t})");
            }
        }
        assert!(is_turan(&Graph::complete(5).unwrap(), 5));
        assert!(!is_turan(&turan_graph(10, 3).unwrap(), 4));
        let mut g = turan_graph(10, 4).unwrap();
        g.remove_edge(0, 1).unwrap();
        assert!(!is_turan(&g, 4));
        assert!(!is_turan(&Graph::cycle(5).unwrap(), 2));
    }
}
