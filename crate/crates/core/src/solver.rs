//! Exact minimum `t`-clique cover by branch and bound over maximal cliques.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::cover::{CoverBuilder, CoverCertificate, Provenance};
use crate::graph::{enumerate_cliques, maximal_cliques, Clique, Graph};
use crate::Error;

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;
pub const DEFAULT_MAX_UNIVERSE: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search nodes before giving up.
    pub node_limit: u64,
    /// Maximum number of `t`-cliques accepted as a universe.
    pub max_universe: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_limit: DEFAULT_NODE_LIMIT,
            max_universe: DEFAULT_MAX_UNIVERSE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] Error),
    #[error("{count} {t}-cliques exceed the universe cap of {cap}")]
    UniverseTooLarge { t: usize, count: usize, cap: usize },
    #[error("search budget of {nodes} nodes exhausted; best cover found has {} cliques", best.len())]
    BudgetExceeded { nodes: u64, best: CoverCertificate },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    pub certificate: CoverCertificate,
    pub nodes: u64,
}

/// The universe of `t`-cliques against the maximal cliques of a graph.
#[derive(Debug, Clone)]
pub struct SetCoverInstance {
    pub t: usize,
    pub n: usize,
    pub universe: Vec<Clique>,
    pub candidates: Vec<Clique>,
    /// Universe elements covered by each candidate.
    pub incidence: Vec<FixedBitSet>,
    /// Candidates covering each universe element.
    pub covering: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(g: &Graph, t: usize, max_universe: usize) -> Result<Self, SolveError> {
        let universe = enumerate_cliques(g, t)?;
        if universe.len() > max_universe {
            return Err(SolveError::UniverseTooLarge {
                t,
                count: universe.len(),
                cap: max_universe,
            });
        }
        let candidates: Vec<Clique> = maximal_cliques(g)
            .into_iter()
            .filter(|c| c.len() >= t)
            .collect();
        let n = g.order();
        let sets: Vec<FixedBitSet> = candidates.iter().map(|c| c.to_set(n)).collect();
        let mut incidence =
            alloc::vec![FixedBitSet::with_capacity(universe.len()); candidates.len()];
        let mut covering = alloc::vec![Vec::new(); universe.len()];
        for (e, tc) in universe.iter().enumerate() {
            for (c, set) in sets.iter().enumerate() {
                if tc.vertices().iter().all(|&v| set.contains(v)) {
                    incidence[c].insert(e);
                    covering[e].push(c);
                }
            }
        }
        Ok(SetCoverInstance {
            t,
            n,
            universe,
            candidates,
            incidence,
            covering,
        })
    }

    pub fn full(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.universe.len());
        s.insert_range(..);
        s
    }

    /// Elements ordered by candidate count, then index.
    fn scarcity_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.universe.len()).collect();
        order.sort_by_key(|&e| (self.covering[e].len(), e));
        order
    }

    /// Size of a greedy family of uncovered elements pairwise sharing no
    /// candidate.
    fn lower_bound(&self, order: &[usize], uncovered: &FixedBitSet) -> usize {
        let mut blocked = FixedBitSet::with_capacity(self.candidates.len());
        let mut count = 0;
        for &e in order {
            if !uncovered.contains(e) {
                continue;
            }
            if self.covering[e].iter().all(|&c| !blocked.contains(c)) {
                count += 1;
                for &c in &self.covering[e] {
                    blocked.insert(c);
                }
            }
        }
        count
    }

    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.full();
        let mut chosen = Vec::new();
        while uncovered.minimum().is_some() {
            let best = (0..self.candidates.len())
                .max_by_key(|&c| {
                    (
                        self.incidence[c].intersection_count(&uncovered),
                        core::cmp::Reverse(c),
                    )
                })
                .expect("every element has a candidate");
            uncovered.difference_with(&self.incidence[best]);
            chosen.push(best);
        }
        chosen
    }

    fn certificate(&self, chosen: &[usize]) -> CoverCertificate {
        let mut picked: Vec<&Clique> = chosen.iter().map(|&c| &self.candidates[c]).collect();
        picked.sort();
        let mut b = CoverBuilder::new(self.t, self.n);
        for c in picked {
            b.push(c.clone(), Provenance::Exact);
        }
        b.finish()
    }
}

struct Search<'a> {
    inst: &'a SetCoverInstance,
    order: Vec<usize>,
    limit: u64,
    nodes: u64,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: &FixedBitSet) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(());
        }
        if uncovered.is_clear() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        let lb = self.inst.lower_bound(&self.order, uncovered);
        if self.chosen.len() + lb >= self.best.len() {
            return Ok(());
        }
        let e = self
            .order
            .iter()
            .copied()
            .find(|&e| uncovered.contains(e))
            .expect("uncovered is non-empty");
        let mut branches: Vec<(usize, usize)> = self.inst.covering[e]
            .iter()
            .map(|&c| (self.inst.incidence[c].intersection_count(uncovered), c))
            .collect();
        branches.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in branches {
            let mut next = uncovered.clone();
            next.difference_with(&self.inst.incidence[c]);
            self.chosen.push(c);
            let r = self.run(&next);
            self.chosen.pop();
            r?;
        }
        Ok(())
    }
}

/// Minimum number of cliques covering every `t`-clique of `g`, with a
/// witness certificate made of maximal cliques.
pub fn exact_min_cover(g: &Graph, t: usize, opts: SolveOptions) -> Result<Solution, SolveError> {
    if t == 0 {
        return Err(Error::ZeroCliqueSize.into());
    }
    let inst = SetCoverInstance::new(g, t, opts.max_universe)?;
    solve_instance(&inst, opts.node_limit)
}

pub fn solve_instance(inst: &SetCoverInstance, node_limit: u64) -> Result<Solution, SolveError> {
    let mut search = Search {
        inst,
        order: inst.scarcity_order(),
        limit: node_limit,
        nodes: 0,
        chosen: Vec::new(),
        best: inst.greedy(),
    };
    let full = inst.full();
    match search.run(&full) {
        Ok(()) => Ok(Solution {
            size: search.best.len(),
            certificate: inst.certificate(&search.best),
            nodes: search.nodes,
        }),
        Err(()) => Err(SolveError::BudgetExceeded {
            nodes: search.nodes - 1,
            best: inst.certificate(&search.best),
        }),
    }
}

/// Size of a greedy family of `t`-cliques no two of which lie in a common
/// clique. Never exceeds the cover number.
pub fn cover_lower_bound(g: &Graph, t: usize) -> Result<usize, SolveError> {
    if t == 0 {
        return Err(Error::ZeroCliqueSize.into());
    }
    let inst = SetCoverInstance::new(g, t, usize::MAX)?;
    Ok(inst.lower_bound(&inst.scarcity_order(), &inst.full()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::graph::{count_cliques, turan_graph};

    fn solve(g: &Graph, t: usize) -> usize {
        let s = exact_min_cover(g, t, SolveOptions::default()).unwrap();
        assert_eq!(validate_cover(g, &s.certificate), Ok(()));
        assert_eq!(s.certificate.len(), s.size);
        s.size
    }

    #[test]
    fn anchors() {
        assert_eq!(solve(&Graph::complete(5).unwrap(), 4), 1);
        assert_eq!(solve(&turan_graph(6, 4).unwrap(), 4), 4);
        assert_eq!(solve(&turan_graph(4, 2).unwrap(), 2), 4);
        assert_eq!(solve(&turan_graph(9, 3).unwrap(), 3), 27);
        assert_eq!(solve(&Graph::cycle(5).unwrap(), 4), 0);
        assert_eq!(solve(&Graph::cycle(5).unwrap(), 2), 5);
    }

    #[test]
    fn turan_numbers_match_clique_counts() {
        for t in 2..=4 {
            for n in t..=12 {
                let g = turan_graph(n, t).unwrap();
                assert_eq!(
                    solve(&g, t) as u64,
                    count_cliques(&g, t).unwrap(),
                    "T({n},{t})"
                );
            }
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(cover_lower_bound(&turan_graph(8, 4).unwrap(), 4), Ok(16));
        assert_eq!(cover_lower_bound(&Graph::complete(6).unwrap(), 4), Ok(1));
        assert_eq!(cover_lower_bound(&Graph::cycle(5).unwrap(), 4), Ok(0));
    }

    #[test]
    fn budget_is_reported() {
        // K7 minus a perfect-ish matching has many overlapping maximal cliques
        let mut g = Graph::complete(8).unwrap();
        for (u, v) in [(0, 1), (2, 3), (4, 5), (6, 7)] {
            g.remove_edge(u, v).unwrap();
        }
        let opts = SolveOptions {
            node_limit: 1,
            ..SolveOptions::default()
        };
        match exact_min_cover(&g, 3, opts) {
            Err(SolveError::BudgetExceeded { best, .. }) => {
                assert_eq!(validate_cover(&g, &best), Ok(()))
            }
            Ok(s) => assert!(s.nodes <= 1),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn universe_cap() {
        let g = Graph::complete(8).unwrap();
        let opts = SolveOptions {
            max_universe: 10,
            ..SolveOptions::default()
        };
        assert!(matches!(
            exact_min_cover(&g, 4, opts),
            Err(SolveError::UniverseTooLarge { count: 70, .. })
        ));
    }
}
