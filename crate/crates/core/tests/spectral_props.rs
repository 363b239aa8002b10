mod common;

use common::{connected_graphs, graphs, permutations, spanning_trees_deletion_contraction, trees};
use dsq_core::spectral::{
    char_poly, char_poly_faddeev_leverrier, eigenvalues_float, laplacian_poly, IntPolynomial,
};
use dsq_core::{Graph, IntSymMatrix, MatrixKind};
use num_bigint::BigInt;
use proptest::prelude::*;

fn kinds() -> impl Strategy<Value = MatrixKind> {
    prop_oneof![Just(MatrixKind::Adjacency), Just(MatrixKind::Laplacian)]
}

proptest! {
    #[test]
    fn newton_identities_rebuild_the_polynomial(g in graphs(9), kind in kinds()) {
        let m = IntSymMatrix::of(&g, kind);
        let n = g.order();
        let traces = m.power_traces(n);
        let rebuilt = IntPolynomial::from_power_sums(n, &traces).unwrap();
        prop_assert_eq!(rebuilt, char_poly(&m));
    }

    #[test]
    fn two_routes_agree(g in graphs(10), kind in kinds()) {
        let m = IntSymMatrix::of(&g, kind);
        prop_assert_eq!(char_poly(&m), char_poly_faddeev_leverrier(&m));
    }

    #[test]
    fn invariant_under_relabeling((g, perm) in graphs(10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutations(n))
    })) {
        let h = g.relabel(&perm);
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian] {
            prop_assert_eq!(char_poly(&IntSymMatrix::of(&g, kind)), char_poly(&IntSymMatrix::of(&h, kind)));
        }
    }

    #[test]
    fn zero_multiplicity_counts_tree_components(ts in proptest::collection::vec(trees(2, 12), 1..4)) {
        let mut forest = Graph::empty(0);
        for t in &ts {
            prop_assert_eq!(laplacian_poly(t).zero_root_multiplicity(), 1);
            forest = forest.disjoint_union(t);
        }
        prop_assert_eq!(laplacian_poly(&forest).zero_root_multiplicity(), ts.len());
    }

    #[test]
    fn float_spectrum_is_bounded(g in graphs(12)) {
        let tol = 1e-9;
        let s = eigenvalues_float(&IntSymMatrix::of(&g, MatrixKind::Laplacian), 1e-12).unwrap();
        prop_assert!(s.values.iter().all(|&x| x >= -tol));
        prop_assert!(s.largest().unwrap() <= 2.0 * g.max_degree() as f64 + tol);
    }

    #[test]
    fn root_product_counts_spanning_trees(g in connected_graphs(8)) {
        let p = laplacian_poly(&g);
        let product = p.coeff(1) * if g.order() % 2 == 0 { -1 } else { 1 };
        let tau = spanning_trees_deletion_contraction(&g);
        prop_assert_eq!(product, BigInt::from(g.order()) * BigInt::from(tau));
    }
}
