//! Seeded random graph generators.
//!
//! All generators draw from a caller-supplied RNG; the corpora below seed a
//! `ChaCha8Rng` so a given seed always yields the same graphs.

use ccl_core::graph::{max_clique, turan_graph};
use ccl_core::Graph;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge probabilities drawn per random instance.
pub const EDGE_PROBABILITIES: [f64; 4] = [0.3, 0.5, 0.7, 0.9];

pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Erdős–Rényi graph with `p` drawn from [`EDGE_PROBABILITIES`].
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let p = *EDGE_PROBABILITIES.choose(rng).expect("non-empty");
    erdos_renyi(n, p, rng)
}

/// Deletes a random edge of a maximum clique until no `K_k` remains.
pub fn make_clique_free<R: Rng + ?Sized>(g: &mut Graph, k: usize, rng: &mut R) {
    loop {
        let c = max_clique(g);
        if c.len() < k {
            return;
        }
        let vs = c.vertices();
        let i = rng.random_range(0..vs.len());
        let mut j = rng.random_range(0..vs.len() - 1);
        if j >= i {
            j += 1;
        }
        g.remove_edge(vs[i], vs[j]).expect("in range");
    }
}

/// `T(n,4)` with each edge deleted independently with probability `p`.
pub fn perturbed_turan<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = turan_graph(n, 4.min(n)).expect("1 <= t <= n");
    let edges: Vec<_> = g.edges().collect();
    for (u, v) in edges {
        if rng.random_bool(p) {
            g.remove_edge(u, v).expect("in range");
        }
    }
    g
}

/// `count` K5-free graphs on 5 to `max_n` vertices. One in four is a
/// lightly perturbed `T(n,4)`; the rest are random graphs with K5's broken
/// up by edge deletion.
pub fn k5_free_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(5..=max_n.max(5));
            if rng.random_range(0..4) == 0 {
                let p = [0.0, 0.02, 0.05, 0.1][rng.random_range(0..4)];
                perturbed_turan(n, p, &mut rng)
            } else {
                let mut g = random_graph(n, &mut rng);
                make_clique_free(&mut g, 5, &mut rng);
                g
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_k5_free() {
        let a = k5_free_corpus(30, 25, 7);
        let b = k5_free_corpus(30, 25, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| max_clique(g).len() <= 4));
        assert_ne!(a, k5_free_corpus(30, 25, 8));
    }

    #[test]
    fn clique_removal() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut g = Graph::complete(9).unwrap();
        make_clique_free(&mut g, 6, &mut rng);
        assert!(max_clique(&g).len() <= 5);
    }
}
