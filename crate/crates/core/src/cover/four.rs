use alloc::vec::Vec;

use crate::cover::three::{build_3cover, closed};
use crate::cover::{refine_3cover, validate_cover, CoverBuilder, CoverCertificate, Provenance};
use crate::graph::{enumerate_cliques, max_clique, Clique, Graph, VertexSet};
use crate::solver::{exact_min_cover, SolveOptions};

/// Recursively builds a 4-clique cover of `g`.
///
/// Graphs on at most five vertices are solved exactly. Otherwise, with `c`
/// the clique number: nothing is needed when `c <= 3`; every 4-clique is
/// listed when `c = 4`; when `c >= 6` a maximum clique `C` is peeled and
/// each 4-clique meeting it is covered by a closure into `C`; when `c = 5`
/// the lowest minimum-degree vertex `v` is removed and the 4-cliques
/// through it are covered by extending a refined 3-cover of `N(v)`.
///
/// # Panics
///
/// If the resulting certificate fails validation.
pub fn build_4cover(g: &Graph) -> CoverCertificate {
    let cert = build(g);
    if let Err(e) = validate_cover(g, &cert) {
        panic!("4-cover construction produced an invalid certificate: {e}");
    }
    cert
}

fn build(g: &Graph) -> CoverCertificate {
    let n = g.order();
    let mut out = CoverBuilder::new(4, n);
    if n <= 5 {
        let s = exact_min_cover(g, 4, SolveOptions::default()).expect("tiny instance");
        return s.certificate;
    }
    let big = max_clique(g);
    match big.len() {
        0..=3 => {}
        4 => {
            for k in enumerate_cliques(g, 4).expect("t = 4") {
                out.push(k, Provenance::Exact);
            }
        }
        5 => extend(g, &mut out),
        _ => peel(g, &big, &mut out),
    }
    out.finish()
}

/// Cover of `g` minus `removed`, in the labels of `g`, followed by the
/// vertices kept.
fn recurse_without(g: &Graph, removed: &VertexSet, out: &mut CoverBuilder) -> Vec<usize> {
    let rest: Vec<usize> = (0..g.order()).filter(|&v| !removed.contains(v)).collect();
    if !rest.is_empty() {
        let sub = g.induced(&rest).expect("increasing");
        let cert = build(&sub);
        for (c, tag) in cert.iter() {
            out.push(c.relabel(&rest), tag);
        }
    }
    rest
}

fn peel(g: &Graph, big: &Clique, out: &mut CoverBuilder) {
    let within = big.to_set(g.order());
    let rest = recurse_without(g, &within, out);
    out.push(big.clone(), Provenance::Peel);
    if rest.is_empty() {
        return;
    }
    let sub = g.induced(&rest).expect("increasing");
    for &v in &rest {
        out.push(closed(g, &within, &[v]), Provenance::Peel);
    }
    for (u, v) in sub.edges() {
        out.push(closed(g, &within, &[rest[u], rest[v]]), Provenance::Peel);
    }
    for tri in enumerate_cliques(&sub, 3).expect("t = 3") {
        let seed: Vec<usize> = tri.vertices().iter().map(|&x| rest[x]).collect();
        out.push(closed(g, &within, &seed), Provenance::Peel);
    }
}

fn extend(g: &Graph, out: &mut CoverBuilder) {
    let v = g.min_degree_vertex();
    let mut removed = VertexSet::with_capacity(g.order());
    removed.insert(v);
    recurse_without(g, &removed, out);
    let nbrs: Vec<usize> = g.neighbors(v).ones().collect();
    if nbrs.len() < 3 {
        return;
    }
    let h = g.induced(&nbrs).expect("increasing");
    let base = build_3cover(&h).expect("neighbourhood of a vertex in a K6-free graph is K5-free");
    let refined = refine_3cover(&h, &base);
    for q in &refined.certificate.cliques {
        let mut vs: Vec<usize> = q.vertices().iter().map(|&x| nbrs[x]).collect();
        vs.push(v);
        out.push(Clique::new(vs), Provenance::Extension);
    }
}
