use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{Clique, Graph, VertexSet};
use crate::error::{Error, Result};

/// Candidates that extend a clique whose largest vertex is `v`: neighbours
/// of `v` inside `cand` with index above `v`.
#[inline]
fn forward(g: &Graph, cand: &VertexSet, v: usize) -> VertexSet {
    let mut next = cand.clone();
    next.intersect_with(g.neighbors(v));
    next.remove_range(..v + 1);
    next
}

fn count_from(g: &Graph, cand: &VertexSet, need: usize) -> u64 {
    match need {
        0 => 1,
        1 => cand.count_ones(..) as u64,
        _ => {
            let mut total = 0;
            for v in cand.ones() {
                let next = forward(g, cand, v);
                if next.count_ones(..) + 1 >= need {
                    total += count_from(g, &next, need - 1);
                }
            }
            total
        }
    }
}

/// Number of `t`-vertex cliques, `k_t(G)`.
pub fn count_cliques(g: &Graph, t: usize) -> Result<u64> {
    if t == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    if t > g.order() {
        return Ok(0);
    }
    Ok(count_from(g, &g.vertex_set(), t))
}

fn enumerate_from(
    g: &Graph,
    cand: &VertexSet,
    need: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Clique>,
) {
    if need == 0 {
        out.push(Clique(stack.clone()));
        return;
    }
    for v in cand.ones() {
        let next = forward(g, cand, v);
        if next.count_ones(..) + 1 < need {
            continue;
        }
        stack.push(v);
        enumerate_from(g, &next, need - 1, stack, out);
        stack.pop();
    }
}

/// All `t`-cliques in lexicographic order of their sorted vertex lists.
pub fn enumerate_cliques(g: &Graph, t: usize) -> Result<Vec<Clique>> {
    if t == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    let mut out = Vec::new();
    if t <= g.order() {
        enumerate_from(g, &g.vertex_set(), t, &mut Vec::with_capacity(t), &mut out);
    }
    Ok(out)
}

fn max_from(g: &Graph, cand: &VertexSet, stack: &mut Vec<usize>, best: &mut Vec<usize>) {
    if stack.len() > best.len() {
        best.clone_from(stack);
    }
    for v in cand.ones() {
        let next = forward(g, cand, v);
        // only a strictly larger clique can replace the current best
        if stack.len() + 1 + next.count_ones(..) <= best.len() {
            continue;
        }
        stack.push(v);
        max_from(g, &next, stack, best);
        stack.pop();
    }
}

/// A maximum clique; among all maximum cliques, the one whose sorted
/// vertex list is lexicographically smallest.
///
/// Cliques are visited in lexicographic preorder and the incumbent is only
/// replaced by a strictly larger one, so the first maximum found wins.
pub fn max_clique(g: &Graph) -> Clique {
    max_clique_in(g, &g.vertex_set())
}

/// [`max_clique`] restricted to the subgraph induced on `within`.
pub fn max_clique_in(g: &Graph, within: &VertexSet) -> Clique {
    let mut best = Vec::new();
    max_from(g, within, &mut Vec::new(), &mut best);
    Clique(best)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Clique>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(Clique::new(r.clone()));
        }
        return;
    }
    // pivot: vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (g.neighbors(u).intersection_count(&p), usize::MAX - u))
        .expect("P is non-empty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// All inclusion-maximal cliques (Bron–Kerbosch with pivoting), sorted
/// lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let mut out = Vec::new();
    bron_kerbosch(
        g,
        &mut Vec::new(),
        g.vertex_set(),
        FixedBitSet::with_capacity(g.order()),
        &mut out,
    );
    out.sort_unstable();
    out
}

/// `N_U(W)`: members of `within` adjacent to every member of `of`.
/// An empty `of` yields `within` unchanged.
pub fn common_neighbors_in(g: &Graph, within: &VertexSet, of: &VertexSet) -> VertexSet {
    let mut s = within.clone();
    for w in of.ones() {
        s.intersect_with(g.neighbors(w));
    }
    s
}

/// `T_U[W]` as a vertex set: `N_U(W) ∪ W`. A clique whenever `U` and `W`
/// are cliques.
pub fn closure(g: &Graph, within: &VertexSet, seed: &[usize]) -> VertexSet {
    let mut s = within.clone();
    for &w in seed {
        s.intersect_with(g.neighbors(w));
    }
    for &w in seed {
        s.insert(w);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;
    use alloc::vec;

    /// Naive oracle: test every vertex subset of size t.
    fn brute_count(g: &Graph, t: usize) -> u64 {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == t)
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .count() as u64
    }

    #[test]
    fn counts_on_turan_graphs() {
        let t84 = turan_graph(8, 4).unwrap();
        assert_eq!(brute_count(&t84, 4), 16);
        assert_eq!(count_cliques(&t84, 4).unwrap(), 16);
        let t94 = turan_graph(9, 4).unwrap();
        assert_eq!(brute_count(&t94, 4), 24);
        assert_eq!(count_cliques(&t94, 4).unwrap(), 24);
        let t12 = turan_graph(12, 4).unwrap();
        assert_eq!(count_cliques(&t12, 4).unwrap(), 81);
        assert_eq!(count_cliques(&t12, 5).unwrap(), 0);
        assert_eq!(count_cliques(&t12, 1).unwrap(), 12);
        assert_eq!(count_cliques(&t12, 13).unwrap(), 0);
        assert_eq!(count_cliques(&t12, 0), Err(Error::ZeroCliqueSize));
    }

    #[test]
    fn cycle_is_triangle_free() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(count_cliques(&c5, 3).unwrap(), 0);
        assert_eq!(count_cliques(&c5, 2).unwrap(), 5);
    }

    #[test]
    fn enumeration_order_and_length() {
        let k4 = Graph::complete(4).unwrap();
        let tri = enumerate_cliques(&k4, 3).unwrap();
        assert_eq!(tri.len(), 4);
        assert_eq!(tri[0].vertices(), &[0, 1, 2]);
        assert_eq!(tri[3].vertices(), &[1, 2, 3]);
        assert!(enumerate_cliques(&Graph::empty(5).unwrap(), 2)
            .unwrap()
            .is_empty());

        let t64 = turan_graph(6, 4).unwrap();
        let k4s = enumerate_cliques(&t64, 4).unwrap();
        assert_eq!(k4s.len(), 4);
        for c in &k4s {
            let mut parts: Vec<usize> = c.vertices().iter().map(|v| v % 4).collect();
            parts.sort_unstable();
            assert_eq!(parts, vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn max_clique_tie_break() {
        assert_eq!(max_clique(&turan_graph(12, 4).unwrap()).len(), 4);
        assert_eq!(max_clique(&Graph::cycle(5).unwrap()).vertices(), &[0, 1]);
        assert_eq!(
            max_clique(&Graph::complete(6).unwrap()).vertices(),
            &[0, 1, 2, 3, 4, 5]
        );
        assert_eq!(max_clique(&Graph::empty(3).unwrap()).vertices(), &[0]);
    }

    #[test]
    fn maximal_cliques_of_small_graph() {
        // triangle 0-1-2, pendant edge 2-3, isolated 4
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let m = maximal_cliques(&g);
        let got: Vec<&[usize]> = m.iter().map(|c| c.vertices()).collect();
        assert_eq!(got, vec![&[0, 1, 2][..], &[2, 3], &[4]]);
    }

    #[test]
    fn common_neighbour_examples() {
        let k5 = Graph::complete(5).unwrap();
        let u = k5.set_of(&[0, 1, 2]).unwrap();
        let w = k5.set_of(&[3, 4]).unwrap();
        assert_eq!(
            common_neighbors_in(&k5, &u, &w).ones().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );

        let c5 = Graph::cycle(5).unwrap();
        let u = c5.set_of(&[2, 4]).unwrap();
        let w = c5.set_of(&[3]).unwrap();
        assert_eq!(
            common_neighbors_in(&c5, &u, &w).ones().collect::<Vec<_>>(),
            vec![2, 4]
        );
        let none = c5.set_of(&[]).unwrap();
        assert_eq!(common_neighbors_in(&c5, &u, &none), u);
    }
}
