use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::cover::three::{cross_sets, ThreeCover};
use crate::cover::{CoverBuilder, CoverCertificate, Provenance};
use crate::graph::{Clique, Graph};
use crate::partition::CliquePartition;

/// Edge count of `T(12,4)`.
const TURAN_12_4_EDGES: usize = 54;

/// 3-uniform hypergraph on the size-4 parts of a greedy partition. Part
/// indices are 0-based; vertex `i` stands for part `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleHypergraph {
    pub a: usize,
    pub edges: BTreeSet<[usize; 3]>,
}

impl TripleHypergraph {
    pub fn contains(&self, mut triple: [usize; 3]) -> bool {
        triple.sort_unstable();
        self.edges.contains(&triple)
    }
}

/// A triple of size-4 parts is an edge when the three parts span 54 edges,
/// i.e. induce `T(12,4)` in a K5-free host.
pub fn build_triple_hypergraph(h: &Graph, p: &CliquePartition<'_>) -> TripleHypergraph {
    let fours: Vec<usize> = (0..p.len()).filter(|&i| p.parts()[i].len() == 4).collect();
    let sets = p.part_sets();
    let mut edges = BTreeSet::new();
    for (x, &i) in fours.iter().enumerate() {
        for (y, &j) in fours.iter().enumerate().skip(x + 1) {
            for &k in &fours[y + 1..] {
                let mut u = sets[i].clone();
                u.union_with(&sets[j]);
                u.union_with(&sets[k]);
                if h.edges_within(&u) == TURAN_12_4_EDGES {
                    edges.insert([i, j, k]);
                }
            }
        }
    }
    TripleHypergraph {
        a: fours.len(),
        edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K4Triples {
    /// 4-sets spanning all four triples.
    pub complete: Vec<[usize; 4]>,
    /// 4-sets spanning exactly three triples. Never non-empty for
    /// hypergraphs built from K5-free graphs.
    pub violations: Vec<[usize; 4]>,
}

pub fn find_k4_triples(hg: &TripleHypergraph) -> K4Triples {
    let mut verts: BTreeSet<usize> = BTreeSet::new();
    for e in &hg.edges {
        verts.extend(e.iter().copied());
    }
    let verts: Vec<usize> = verts.into_iter().collect();
    let mut out = K4Triples::default();
    let n = verts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [verts[a], verts[b], verts[c], verts[d]];
                    let spanned = triples_of(q)
                        .iter()
                        .filter(|t| hg.edges.contains(*t))
                        .count();
                    match spanned {
                        4 => out.complete.push(q),
                        3 => out.violations.push(q),
                        _ => {}
                    }
                }
            }
        }
    }
    out
}

fn triples_of(q: [usize; 4]) -> [[usize; 3]; 4] {
    [
        [q[0], q[1], q[2]],
        [q[0], q[1], q[3]],
        [q[0], q[2], q[3]],
        [q[1], q[2], q[3]],
    ]
}

/// How the crossing triangles of one triple of size-4 parts are covered
/// after refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCost {
    pub triple: [usize; 3],
    pub hyperedge: bool,
    /// Sets the base cover spends on this triple.
    pub base: usize,
    /// Sets the refined cover spends, or `None` when the triple is handled
    /// by a complete 4-set of the family.
    pub refined: Option<usize>,
    /// The pair of parts whose cross edges are closed into the third part.
    pub pair: (usize, usize),
    /// Cross edge counts between parts `(j,k)`, `(i,k)` and `(i,j)`.
    pub cross: [usize; 3],
}

#[derive(Debug, Clone)]
pub struct RefinedCover {
    pub certificate: CoverCertificate,
    pub hypergraph: TripleHypergraph,
    pub k4: K4Triples,
    /// Complete 4-sets, pairwise sharing at most two parts, whose triples
    /// are covered by transversal 4-cliques.
    pub family: Vec<[usize; 4]>,
    pub costs: Vec<TripleCost>,
}

impl RefinedCover {
    pub fn cost_of(&self, mut triple: [usize; 3]) -> Option<&TripleCost> {
        triple.sort_unstable();
        self.costs.iter().find(|c| c.triple == triple)
    }
}

/// Improves a 3-cover on the triangles crossing three size-4 parts.
///
/// Triples that do not induce `T(12,4)` are covered through whichever pair
/// of the three parts needs the fewest closure sets. For a greedy family of
/// complete 4-sets of the triple hypergraph, the 48 sets of its four
/// triples are replaced by the 24 transversal 4-cliques of the induced
/// `T(16,4)`. The result is never larger than the base cover.
pub fn refine_3cover(h: &Graph, base: &ThreeCover<'_>) -> RefinedCover {
    let p = &base.partition;
    let parts = p.parts();
    let sets = p.part_sets();
    let part_of = p.part_of();
    let hypergraph = build_triple_hypergraph(h, p);
    let k4 = find_k4_triples(&hypergraph);

    let mut family: Vec<[usize; 4]> = Vec::new();
    for q in &k4.complete {
        if family
            .iter()
            .all(|f| q.iter().filter(|v| f.contains(v)).count() <= 2)
        {
            family.push(*q);
        }
    }
    let in_family: BTreeSet<[usize; 3]> = family.iter().flat_map(|q| triples_of(*q)).collect();

    // base C3 sets grouped by the three parts they touch
    let mut base_sets: BTreeMap<[usize; 3], Vec<usize>> = BTreeMap::new();
    for (idx, (c, tag)) in base.certificate.iter().enumerate() {
        if tag != Provenance::C3 {
            continue;
        }
        let mut touched: Vec<usize> = c.vertices().iter().map(|&v| part_of[v]).collect();
        touched.sort_unstable();
        touched.dedup();
        if let [i, j, k] = touched[..] {
            base_sets.entry([i, j, k]).or_default().push(idx);
        }
    }

    let fours: Vec<usize> = (0..p.len()).filter(|&i| parts[i].len() == 4).collect();
    let mut dropped: BTreeSet<usize> = BTreeSet::new();
    let mut added: Vec<(Clique, Provenance)> = Vec::new();
    let mut costs = Vec::new();
    for (x, &i) in fours.iter().enumerate() {
        for (y, &j) in fours.iter().enumerate().skip(x + 1) {
            for &k in &fours[y + 1..] {
                let triple = [i, j, k];
                let owned = base_sets.get(&triple).map(Vec::as_slice).unwrap_or(&[]);
                let hyperedge = hypergraph.edges.contains(&triple);
                let cross =
                    [(j, k), (i, k), (i, j)].map(|(s, t)| h.edges_between(&sets[s], &sets[t]));
                let mut cost = TripleCost {
                    triple,
                    hyperedge,
                    base: owned.len(),
                    refined: Some(owned.len()),
                    pair: (j, k),
                    cross,
                };
                if in_family.contains(&triple) {
                    dropped.extend(owned.iter().copied());
                    cost.refined = None;
                } else if !hyperedge {
                    let options = [(j, k, i), (i, k, j), (i, j, k)];
                    let mut best: Option<((usize, usize), Vec<Clique>)> = None;
                    for (s, t, third) in options {
                        let cand = cross_sets(h, &sets[third], &parts[s], &parts[t]);
                        if best.as_ref().map_or(true, |(_, b)| cand.len() < b.len()) {
                            best = Some(((s, t), cand));
                        }
                    }
                    let (pair, chosen) = best.expect("three options");
                    if pair != (j, k) {
                        dropped.extend(owned.iter().copied());
                        cost.refined = Some(chosen.len());
                        cost.pair = pair;
                        added.extend(chosen.into_iter().map(|c| (c, Provenance::Refinement)));
                    }
                }
                costs.push(cost);
            }
        }
    }

    for q in &family {
        let t = transversal_cliques(h, parts, *q);
        debug_assert_eq!(t.len(), 24);
        added.extend(t.into_iter().map(|c| (c, Provenance::Refinement)));
    }

    let mut out = CoverBuilder::new(3, h.order());
    for (idx, (c, tag)) in base.certificate.iter().enumerate() {
        if !dropped.contains(&idx) {
            out.push(c.clone(), tag);
        }
    }
    out.extend(added);
    RefinedCover {
        certificate: out.finish(),
        hypergraph,
        k4,
        family,
        costs,
    }
}

/// 4-cliques with one vertex in each of four parts.
fn transversal_cliques(h: &Graph, parts: &[Clique], q: [usize; 4]) -> Vec<Clique> {
    let mut out = Vec::new();
    for &u in parts[q[0]].vertices() {
        for &v in parts[q[1]].vertices() {
            if !h.adjacent(u, v) {
                continue;
            }
            for &w in parts[q[2]].vertices() {
                if !h.adjacent(u, w) || !h.adjacent(v, w) {
                    continue;
                }
                for &x in parts[q[3]].vertices() {
                    if h.adjacent(u, x) && h.adjacent(v, x) && h.adjacent(w, x) {
                        out.push(Clique::new(alloc::vec![u, v, w, x]));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_3cover, validate_cover};
    use crate::graph::turan_graph;
    use crate::partition::greedy_partition;

    #[test]
    fn hypergraph_examples() {
        let t12 = turan_graph(12, 4).unwrap();
        let hg = build_triple_hypergraph(&t12, &greedy_partition(&t12));
        assert_eq!(hg.a, 3);
        assert_eq!(hg.edges.iter().copied().collect::<Vec<_>>(), [[0, 1, 2]]);
        assert!(find_k4_triples(&hg).complete.is_empty());

        let t16 = turan_graph(16, 4).unwrap();
        let hg = build_triple_hypergraph(&t16, &greedy_partition(&t16));
        assert_eq!(hg.a, 4);
        assert_eq!(hg.edges.len(), 4);
        let k4 = find_k4_triples(&hg);
        assert_eq!(k4.complete, [[0, 1, 2, 3]]);
        assert!(k4.violations.is_empty());

        let mut edges = Vec::new();
        for b in [0, 4, 8] {
            for u in b..b + 4 {
                for v in u + 1..b + 4 {
                    edges.push((u, v));
                }
            }
        }
        let three = Graph::from_edges(12, edges).unwrap();
        let hg = build_triple_hypergraph(&three, &greedy_partition(&three));
        assert_eq!(hg.a, 3);
        assert!(hg.edges.is_empty());
    }

    #[test]
    fn violations_are_reported() {
        let hg = TripleHypergraph {
            a: 4,
            edges: [[0, 1, 2], [0, 1, 3], [0, 2, 3]].into_iter().collect(),
        };
        let k4 = find_k4_triples(&hg);
        assert!(k4.complete.is_empty());
        assert_eq!(k4.violations, [[0, 1, 2, 3]]);
    }

    #[test]
    fn turan_16_uses_transversals() {
        let t16 = turan_graph(16, 4).unwrap();
        let base = build_3cover(&t16).unwrap();
        let r = refine_3cover(&t16, &base);
        assert_eq!(r.family, [[0, 1, 2, 3]]);
        assert_eq!(base.certificate.count_of(Provenance::C3), 48);
        assert_eq!(r.certificate.count_of(Provenance::C3), 0);
        assert_eq!(r.certificate.count_of(Provenance::Refinement), 24);
        assert_eq!(r.certificate.len() + 24, base.certificate.len());
        assert_eq!(validate_cover(&t16, &r.certificate), Ok(()));
    }

    #[test]
    fn turan_12_is_unchanged() {
        let t12 = turan_graph(12, 4).unwrap();
        let base = build_3cover(&t12).unwrap();
        let r = refine_3cover(&t12, &base);
        assert_eq!(r.certificate, base.certificate);
        assert_eq!(r.costs.len(), 1);
        assert!(r.costs[0].hyperedge);
        assert_eq!(r.costs[0].refined, Some(12));
    }

    #[test]
    fn sparse_triple_costs_at_most_eleven() {
        let mut g = turan_graph(12, 4).unwrap();
        g.remove_edge(0, 5).unwrap();
        let base = build_3cover(&g).unwrap();
        let r = refine_3cover(&g, &base);
        assert_eq!(validate_cover(&g, &r.certificate), Ok(()));
        assert!(r.certificate.len() <= base.certificate.len());
        for c in &r.costs {
            if !c.hyperedge {
                assert!(c.refined.unwrap() <= 11, "{c:?}");
            }
        }
    }
}
