use proptest::prelude::*;

use toeplitz_core::oracle::ClawSearch;
use toeplitz_core::theorems::{classify_claw_free, decompose_gcd};
use toeplitz_core::{reflect, Graph, Oracle, ToeplitzParams};

/// Valid parameters with `n <= 24`.
fn small_params() -> impl Strategy<Value = ToeplitzParams> {
    (3usize..=24)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::btree_set(1..n, 1..=(n - 1).min(6)),
            )
        })
        .prop_map(|(n, offsets)| ToeplitzParams::new(n, offsets.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_by_difference(p in small_params()) {
        let g = Graph::toeplitz(&p);
        for u in 1..=p.n() {
            for v in 1..=p.n() {
                prop_assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                prop_assert_eq!(g.adjacent(u, v), p.has_offset(u.abs_diff(v)));
            }
        }
    }

    #[test]
    fn edge_count_matches_formula(p in small_params()) {
        let g = Graph::toeplitz(&p);
        prop_assert_eq!(g.edges().len(), p.edge_count());
        prop_assert_eq!(g.edge_count(), p.offsets().iter().map(|t| p.n() - t).sum::<usize>());
    }

    #[test]
    fn reflection_is_an_automorphism(p in small_params()) {
        let g = Graph::toeplitz(&p);
        let all: Vec<usize> = (1..=p.n()).collect();
        let image = reflect(&p, &all).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(g.adjacent(image[u - 1], image[v - 1]));
        }
    }

    #[test]
    fn upward_claws_recover_all(p in small_params()) {
        let oracle = Oracle::default();
        let g = Graph::toeplitz(&p);
        let full = oracle.enumerate_claws(&g, usize::MAX).unwrap();
        let upward = oracle.enumerate_claws_with(&g, usize::MAX, ClawSearch::Upward).unwrap();
        prop_assert_eq!(toeplitz_core::oracle::close_under_reflection(&upward, p.n()), full);
    }

    #[test]
    fn classification_matches_search(p in small_params()) {
        let oracle = Oracle::default();
        let verdict = classify_claw_free(&p, &oracle).unwrap();
        prop_assert_eq!(verdict.claw_free, oracle.is_claw_free(&Graph::toeplitz(&p)).unwrap());
    }

    #[test]
    fn gcd_report_certifies(p in small_params()) {
        let report = decompose_gcd(&p);
        prop_assert!(report.certify(&Graph::toeplitz(&p)).unwrap().is_empty());
    }

    #[test]
    fn interval_implies_chordal(p in small_params()) {
        let oracle = Oracle::new(toeplitz_core::verify::sweep_oracle_limits());
        let g = Graph::toeplitz(&p);
        if oracle.is_interval(&g).unwrap() {
            prop_assert!(oracle.is_chordal(&g).unwrap().is_chordal());
        }
    }
}
