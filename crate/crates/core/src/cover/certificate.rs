use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{enumerate_cliques, Clique, Graph};

/// Which construction produced a certificate clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    C1,
    C2,
    C3,
    Refinement,
    Peel,
    Extension,
    Exact,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::C1 => "C1",
            Provenance::C2 => "C2",
            Provenance::C3 => "C3",
            Provenance::Refinement => "refinement",
            Provenance::Peel => "peel",
            Provenance::Extension => "extension",
            Provenance::Exact => "exact",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown provenance tag")]
pub struct UnknownProvenance;

impl FromStr for Provenance {
    type Err = UnknownProvenance;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "C1" => Provenance::C1,
            "C2" => Provenance::C2,
            "C3" => Provenance::C3,
            "refinement" => Provenance::Refinement,
            "peel" => Provenance::Peel,
            "extension" => Provenance::Extension,
            "exact" => Provenance::Exact,
            _ => return Err(UnknownProvenance),
        })
    }
}

/// A list of cliques claimed to cover every `t`-clique of an `n`-vertex
/// graph. `provenance[i]` tags `cliques[i]`.
///
/// The fields are public so certificates read from disk can be checked as
/// given; certificates built by this crate go through [`CoverBuilder`] and
/// are deduplicated with no set smaller than `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub t: usize,
    pub n: usize,
    pub cliques: Vec<Clique>,
    pub provenance: Vec<Provenance>,
}

impl CoverCertificate {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Clique, Provenance)> {
        self.cliques.iter().zip(self.provenance.iter().copied())
    }

    pub fn count_of(&self, tag: Provenance) -> usize {
        self.provenance.iter().filter(|&&p| p == tag).count()
    }
}

/// Accumulates certificate cliques in insertion order, dropping sets with
/// fewer than `t` vertices and repeats (the first tag wins).
#[derive(Debug, Clone)]
pub struct CoverBuilder {
    cert: CoverCertificate,
    seen: BTreeSet<Clique>,
}

impl CoverBuilder {
    pub fn new(t: usize, n: usize) -> Self {
        CoverBuilder {
            cert: CoverCertificate {
                t,
                n,
                cliques: Vec::new(),
                provenance: Vec::new(),
            },
            seen: BTreeSet::new(),
        }
    }

    /// Returns whether the clique was kept.
    pub fn push(&mut self, clique: Clique, tag: Provenance) -> bool {
        if clique.len() < self.cert.t || self.seen.contains(&clique) {
            return false;
        }
        self.seen.insert(clique.clone());
        self.cert.cliques.push(clique);
        self.cert.provenance.push(tag);
        true
    }

    pub fn extend<I: IntoIterator<Item = (Clique, Provenance)>>(&mut self, items: I) {
        for (c, p) in items {
            self.push(c, p);
        }
    }

    pub fn len(&self) -> usize {
        self.cert.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cert.is_empty()
    }

    pub fn finish(self) -> CoverCertificate {
        self.cert
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverViolation {
    #[error("certificate is for {found} vertices but the graph has {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("certificate has {cliques} cliques but {tags} provenance tags")]
    TagCountMismatch { cliques: usize, tags: usize },
    #[error("certificate clique #{index} uses vertex {vertex} outside the graph")]
    VertexOutOfRange { index: usize, vertex: usize },
    #[error("certificate set #{index} {set:?} is not a clique")]
    NotAClique { index: usize, set: Clique },
    #[error("certificate set #{index} {set:?} has fewer than {t} vertices")]
    Undersized { index: usize, set: Clique, t: usize },
    #[error("{clique:?} is not contained in any certificate clique")]
    Uncovered { clique: Clique },
}

/// Checks that every certificate set is a clique of `g` with at least
/// `cert.t` vertices and that every `cert.t`-clique of `g` lies inside some
/// certificate set.
pub fn validate_cover(g: &Graph, cert: &CoverCertificate) -> Result<(), CoverViolation> {
    let n = g.order();
    if cert.n != n {
        return Err(CoverViolation::OrderMismatch {
            expected: n,
            found: cert.n,
        });
    }
    if cert.cliques.len() != cert.provenance.len() {
        return Err(CoverViolation::TagCountMismatch {
            cliques: cert.cliques.len(),
            tags: cert.provenance.len(),
        });
    }
    for (index, c) in cert.cliques.iter().enumerate() {
        if let Some(&vertex) = c.vertices().iter().find(|&&v| v >= n) {
            return Err(CoverViolation::VertexOutOfRange { index, vertex });
        }
        if !g.is_clique(c.vertices()) {
            return Err(CoverViolation::NotAClique {
                index,
                set: c.clone(),
            });
        }
        if c.len() < cert.t {
            return Err(CoverViolation::Undersized {
                index,
                set: c.clone(),
                t: cert.t,
            });
        }
    }
    if cert.t == 0 {
        return Ok(());
    }
    // index certificate sets by vertex; a t-clique only needs checking
    // against the sets holding its smallest vertex
    let sets: Vec<_> = cert.cliques.iter().map(|c| c.to_set(n)).collect();
    let mut by_vertex: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (i, c) in cert.cliques.iter().enumerate() {
        for &v in c.vertices() {
            by_vertex[v].push(i);
        }
    }
    let targets = enumerate_cliques(g, cert.t).expect("t >= 1");
    for tc in targets {
        let first = tc.vertices()[0];
        let covered = by_vertex[first]
            .iter()
            .any(|&i| tc.vertices().iter().all(|&v| sets[i].contains(v)));
        if !covered {
            return Err(CoverViolation::Uncovered { clique: tc });
        }
    }
    Ok(())
}
