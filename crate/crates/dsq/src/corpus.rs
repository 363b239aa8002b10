//! Seeded random graphs for the property suites.

use dsq_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` graphs; each picks an order uniformly in `1..=max_n` and an edge
/// density uniformly in `[0.1, 0.9]`, then includes each pair independently.
pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.1..=0.9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).expect("pairs are distinct")
        })
        .collect()
}

/// Uniform labeled trees (random Prüfer sequences) with order in `min_n..=max_n`.
pub fn random_trees(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n.max(2)..=max_n);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        })
        .collect()
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        assert_eq!(random_graphs(7, 50, 8), random_graphs(7, 50, 8));
        assert_ne!(random_graphs(7, 50, 8), random_graphs(8, 50, 8));
        assert!(random_graphs(1, 200, 8).iter().all(|g| (1..=8).contains(&g.order())));
        let trees = random_trees(3, 100, 2, 14);
        assert!(trees.iter().all(|t| t.is_tree() && t.order() <= 14));
    }
}
