mod props;

use hyperlag::hypergraph::{all_sets, binomial, colex_first_m, colex_less, UniformHypergraph};
use hyperlag::lagrangian::{compression_identity_residual, maximize, SolverConfig};
use hyperlag::poset::enumerate_candidates;
use proptest::prelude::*;
use props::*;

#[test]
fn colex_is_a_strict_total_order_on_triples_of_7() {
    let sets: Vec<Vec<usize>> = all_sets(7, 3).iter().map(|e| e.to_vec()).collect();
    for a in &sets {
        assert!(!colex_less(a, a).unwrap());
        for b in &sets {
            let (ab, ba) = (colex_less(a, b).unwrap(), colex_less(b, a).unwrap());
            assert_eq!(ab || ba, a != b);
            assert!(!(ab && ba));
            for c in &sets {
                if ab && colex_less(b, c).unwrap() {
                    assert!(colex_less(a, c).unwrap());
                }
            }
        }
    }
}

#[test]
fn colex_prefix_of_binomial_length_is_complete() {
    for r in 2..=4 {
        for t in r..=8 {
            let g = colex_first_m(r, binomial(t, r) as usize).unwrap();
            assert_eq!(g, UniformHypergraph::complete(r, t).unwrap(), "r={r} t={t}");
        }
    }
}

#[test]
fn compression_identity_on_small_candidates() {
    let cfg = SolverConfig::default();
    for l in [7, 8] {
        for g in enumerate_candidates(l).unwrap() {
            let r = maximize(&g, &cfg).unwrap();
            assert!(r.kkt_residual < 1e-9);
            let support = r.weighting.support();
            for (p, &i) in support.iter().enumerate() {
                for &j in &support[p + 1..] {
                    assert!(compression_identity_residual(&g, &r.weighting, i, j).unwrap() < 1e-7);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in graphs(4, 8)) {
        complement_involution(&g)?;
    }

    #[test]
    fn left_compressed_iff_diff_links_vanish(g in graphs(4, 7)) {
        compressed_iff_no_diff_links(&g)?;
        compressed_iff_no_diff_links(&g.left_compress())?;
    }

    #[test]
    fn left_compress_keeps_size_and_compresses(g in graphs(3, 7)) {
        left_compress_invariants(&g)?;
    }

    #[test]
    fn clique_order_is_monotone((sub, sup) in nested_pairs(8)) {
        clique_monotone(&sub, &sup)?;
    }

    #[test]
    fn replicator_step_never_decreases((g, x) in graph_and_weighting(4, 8)) {
        replicator_monotone(&g, &x)?;
    }

    #[test]
    fn class_averaging_does_not_lose_value(g in three_graphs(7)) {
        class_averaging_keeps_value(&g)?;
    }

    #[test]
    fn sorted_weighting_of_compressed_graph_is_optimal(g in three_graphs(7)) {
        sorting_keeps_value(&g)?;
    }

    #[test]
    fn minimal_support_pairs_share_an_edge(g in graphs(3, 8)) {
        support_pairs_covered(&g)?;
    }

    #[test]
    fn compression_identity_holds_at_stationary_points(g in three_graphs(7)) {
        compression_identity_at_optimum(&g)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn gradient_matches_central_differences((g, x) in graph_and_weighting(4, 8)) {
        gradient_matches_differences(&g, &x)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lagrangian_is_monotone_under_inclusion((sub, sup) in nested_pairs(8)) {
        lagrangian_monotone(&sub, &sup)?;
    }
}
