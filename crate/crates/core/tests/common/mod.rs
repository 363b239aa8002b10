#![allow(dead_code)]

use std::collections::HashMap;

use dsq_core::Graph;
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices, each possible edge present independently.
pub fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

pub fn connected_graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n).prop_filter("connected", |g| g.is_connected())
}

/// Trees from random Prüfer sequences.
pub fn trees(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n.max(2)..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_tree(n, &seq))
    })
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

pub fn permutations(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Spanning trees by deletion–contraction on a multigraph given as an edge
/// multiplicity matrix, memoized on the matrix.
pub fn spanning_trees_deletion_contraction(g: &Graph) -> u128 {
    let n = g.order();
    let mut m = vec![vec![0u128; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = 1;
        m[v][u] = 1;
    }
    let mut memo = HashMap::new();
    dc(m, &mut memo)
}

fn dc(m: Vec<Vec<u128>>, memo: &mut HashMap<Vec<Vec<u128>>, u128>) -> u128 {
    let n = m.len();
    if n == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&m) {
        return v;
    }
    // pick an edge class at vertex n-1
    let last = n - 1;
    let Some(u) = (0..last).find(|&u| m[u][last] > 0) else {
        return 0;
    };
    let mult = m[u][last];
    let mut deleted = m.clone();
    deleted[u][last] = 0;
    deleted[last][u] = 0;
    // contract last into u, dropping the loop
    let mut contracted: Vec<Vec<u128>> = m[..last].iter().map(|row| row[..last].to_vec()).collect();
    for w in 0..last {
        if w != u {
            contracted[u][w] += m[last][w];
            contracted[w][u] += m[last][w];
        }
    }
    let r = dc(deleted, memo) + mult * dc(contracted, memo);
    memo.insert(m, r);
    r
}
