use alloc::vec::Vec;

use crate::cover::{CoverBuilder, CoverCertificate, Provenance};
use crate::error::{Error, Result};
use crate::graph::{closure, max_clique, Clique, Graph, VertexSet};
use crate::partition::{greedy_partition, CliquePartition};
use crate::sequence::{sequence_of, value_f, GreedySequence, Value};

/// A 3-clique cover built from a greedy partition, with the data it was
/// built from.
#[derive(Debug, Clone)]
pub struct ThreeCover<'g> {
    pub certificate: CoverCertificate,
    pub partition: CliquePartition<'g>,
    pub sequence: GreedySequence,
    pub value: Value,
}

impl ThreeCover<'_> {
    pub fn f(&self) -> i64 {
        self.value.f
    }
}

pub(crate) fn require_k5_free(h: &Graph) -> Result<()> {
    let w = max_clique(h).len();
    if w >= 5 {
        return Err(Error::CliqueTooLarge {
            size: w,
            forbidden: 5,
        });
    }
    Ok(())
}

pub(crate) fn closed(g: &Graph, within: &VertexSet, seed: &[usize]) -> Clique {
    Clique::from_set(&closure(g, within, seed))
}

/// Covers every triangle of a K5-free graph using the parts of its greedy
/// partition, closures of vertices and edges of later parts into earlier
/// ones, and closures of cross edges into a third part. Sets with fewer
/// than three vertices are dropped.
#[allow(clippy::needless_range_loop)]
pub fn build_3cover(h: &Graph) -> Result<ThreeCover<'_>> {
    require_k5_free(h)?;
    let partition = greedy_partition(h);
    let sequence = sequence_of(&partition)?;
    let value = value_f(&sequence);
    let counts = sequence.counts();
    let (a, b) = (counts.a as usize, counts.b as usize);
    let parts = partition.parts();
    let sets = partition.part_sets();
    let p = parts.len();
    let mut out = CoverBuilder::new(3, h.order());

    for part in parts {
        out.push(part.clone(), Provenance::C1);
    }

    for i in 0..b {
        for j in i + 1..p {
            for &v in parts[j].vertices() {
                out.push(closed(h, &sets[i], &[v]), Provenance::C2);
            }
        }
    }
    for i in 0..a {
        for j in i + 1..a {
            for &v in parts[i].vertices() {
                out.push(closed(h, &sets[j], &[v]), Provenance::C2);
            }
        }
    }
    for i in 0..b {
        for j in (i + 1).max(a)..p {
            let pj = parts[j].vertices();
            for (x, &u) in pj.iter().enumerate() {
                for &v in &pj[x + 1..] {
                    out.push(closed(h, &sets[i], &[u, v]), Provenance::C2);
                }
            }
        }
    }

    for i in 0..p {
        for j in i + 1..p {
            for k in j + 1..p {
                push_cross(h, &mut out, &sets[i], &parts[j], &parts[k], Provenance::C3);
            }
        }
    }

    Ok(ThreeCover {
        certificate: out.finish(),
        partition,
        sequence,
        value,
    })
}

/// Pushes `T_U[u,v]` for every edge `uv` between parts `x` and `y`.
pub(crate) fn push_cross(
    h: &Graph,
    out: &mut CoverBuilder,
    within: &VertexSet,
    x: &Clique,
    y: &Clique,
    tag: Provenance,
) -> usize {
    let mut kept = 0;
    for &u in x.vertices() {
        for &v in y.vertices() {
            if h.adjacent(u, v) && out.push(closed(h, within, &[u, v]), tag) {
                kept += 1;
            }
        }
    }
    kept
}

/// Sets `T_U[u,v]` for the edges between parts `x` and `y`, with fewer than
/// three vertices dropped.
pub(crate) fn cross_sets(h: &Graph, within: &VertexSet, x: &Clique, y: &Clique) -> Vec<Clique> {
    let mut v = Vec::new();
    for &a in x.vertices() {
        for &b in y.vertices() {
            if h.adjacent(a, b) {
                let c = closed(h, within, &[a, b]);
                if c.len() >= 3 {
                    v.push(c);
                }
            }
        }
    }
    v.sort();
    v.dedup();
    v
}
