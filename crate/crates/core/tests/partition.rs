use ccl_core::graph::max_clique;
use ccl_core::partition::{greedy_partition, verify_partition};
use ccl_core::Graph;

#[test]
fn greedy_partition_is_valid_on_every_small_graph() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..1u64 << pairs {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            let p = greedy_partition(&g);
            verify_partition(&p).unwrap_or_else(|v| panic!("n={n} mask={mask}: {v:?}"));
            let sizes = p.sizes();
            assert_eq!(sizes.iter().sum::<usize>(), n);
            assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(sizes[0], max_clique(&g).len());
        }
    }
}
