mod common;

use std::collections::BTreeMap;

use common::prufer_tree;
use dsq_core::families::{contains_obstruction_h, enumerate_trees, is_centipede, k_inverse, triangle_chains};
use dsq_core::graph::{canonical_label, path};
use dsq_core::spectral::{adjacency_poly, laplacian_poly};
use dsq_core::{CanonicalLabel, Graph};
use num_bigint::BigInt;

/// Free trees by exhaustive labeled generation (Prüfer codes) and dedup.
fn labeled_tree_classes(n: usize) -> BTreeMap<CanonicalLabel, Graph> {
    let mut out = BTreeMap::new();
    if n <= 2 {
        out.insert(canonical_label(&path(n)), path(n));
        return out;
    }
    let mut seq = vec![0; n - 2];
    loop {
        let g = prufer_tree(n, &seq);
        out.entry(canonical_label(&g)).or_insert(g);
        // odometer increment
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
        seq[i] += 1;
    }
}

/// Every tree on `n + 1` vertices is a tree on `n` vertices plus a leaf.
fn grow_by_leaf(classes: &BTreeMap<CanonicalLabel, Graph>) -> BTreeMap<CanonicalLabel, Graph> {
    let mut out = BTreeMap::new();
    for g in classes.values() {
        let n = g.order();
        for v in 0..n {
            let edges = g.edges().into_iter().chain([(v, n)]);
            let h = Graph::from_edges(n + 1, edges).unwrap();
            out.entry(canonical_label(&h)).or_insert(h);
        }
    }
    out
}

#[test]
fn stream_matches_dedup_oracle_through_twelve() {
    let mut oracle = BTreeMap::new();
    for n in 1..=12 {
        oracle = if n <= 8 { labeled_tree_classes(n) } else { grow_by_leaf(&oracle) };
        let mut labels: Vec<_> = enumerate_trees(n, None).unwrap().map(|g| canonical_label(&g)).collect();
        let emitted = labels.len();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), emitted, "isomorphic repeat at n={n}");
        assert!(labels.iter().eq(oracle.keys()), "n={n}");
    }
}

#[test]
fn laplacian_is_shifted_line_graph_adjacency() {
    for n in 2..=10 {
        for g in enumerate_trees(n, None).unwrap() {
            let shifted = adjacency_poly(&g.line_graph()).shift(&BigInt::from(-2)).mul_x_pow(1);
            assert_eq!(laplacian_poly(&g), shifted, "{g:?}");
        }
    }
}

#[test]
fn triangle_chain_shapes() {
    for t in 1..=7 {
        for chain in triangle_chains(t).unwrap() {
            let g = &chain.graph;
            assert_eq!((g.order(), g.size()), (2 * t + 1, 3 * t));
            for (u, v) in g.edges() {
                let common = g.neighbors(u).iter().filter(|w| g.has_edge(v, **w)).count();
                assert_eq!(common, 1, "edge {u}-{v} must lie in exactly one triangle");
            }
        }
    }
}

#[test]
fn one_three_trees_are_centipedes_or_contain_the_spider() {
    for n in (4..=16).step_by(2) {
        let chain = k_inverse(&path((n - 2) / 2)).unwrap().graph;
        let mut seen = 0;
        for g in enumerate_trees(n, Some(3)).unwrap() {
            if g.degrees().contains(&2) {
                continue;
            }
            seen += 1;
            let centipede = is_centipede(&g);
            assert!(centipede ^ contains_obstruction_h(&g).unwrap(), "{g:?}");
            assert_eq!(g.line_graph().is_isomorphic(&chain), centipede, "{g:?}");
        }
        assert!(seen >= 1);
    }
}
