mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use treedim::{
    admits_embedding, brute_force_min_dimension, contract_inner_edge, contract_to_star, embed_tree,
    lattice_dimension, verify_isometric, verify_sampled, Embedding, Tree, VerifyError,
};

use common::{
    caterpillar, ceil_half, leaf_count_by_census, oracle_isometric, star, unlabeled_trees,
};

#[test]
fn oracle_agrees_on_every_small_tree() {
    for t in unlabeled_trees(9) {
        let d = lattice_dimension(&t);
        assert_eq!(brute_force_min_dimension(&t, 6), Ok(d), "\n{t}");
        assert_eq!(embed_tree(&t).unwrap().dimension(), d);
    }
}

#[test]
fn oracle_agrees_on_random_labeled_trees() {
    for seed in 0..500u64 {
        let t = Tree::random(1 + seed as usize % 8, seed).unwrap();
        let d = lattice_dimension(&t);
        assert_eq!(brute_force_min_dimension(&t, 5), Ok(d));
        assert_eq!(embed_tree(&t).unwrap().dimension(), d);
    }
}

#[test]
fn stars_do_not_fit_below_half_their_leaves() {
    for n in 3..=9 {
        let t = star(n);
        let d = ceil_half(n as usize);
        assert_eq!(admits_embedding(&t, d - 1), Ok(false));
        assert_eq!(admits_embedding(&t, d), Ok(true));
    }
}

#[test]
fn contraction_of_caterpillar_with_six_leaves() {
    let t6 = caterpillar(3, 2);
    assert_eq!(t6.leaf_count(), 6);
    let e = embed_tree(&t6).unwrap();
    assert_eq!(e.dimension(), 3);
    let cert = contract_to_star(&t6, &e).unwrap();
    assert_eq!((cert.bound, cert.final_dimension), (3, 3));
    assert_eq!(cert.steps.len(), 2);
    let t8 = caterpillar(4, 2);
    assert_eq!(
        contract_to_star(&t8, &embed_tree(&t8).unwrap())
            .unwrap()
            .bound,
        4
    );
}

fn check_certificate(t: &Tree) {
    let e = embed_tree(t).unwrap();
    let n = leaf_count_by_census(t);
    let inner = t.inner_edges().len();
    let cert = contract_to_star(t, &e).unwrap();
    assert_eq!(cert.steps.len(), inner);
    assert_eq!(cert.final_star_leaf_count, n);
    assert_eq!(cert.bound, ceil_half(n));
    assert!(cert.bound <= cert.final_dimension);
    let directions: BTreeSet<(usize, i8)> = cert
        .leaf_directions
        .iter()
        .map(|d| (d.axis, d.sign))
        .collect();
    assert_eq!(directions.len(), n);
    assert!(directions
        .iter()
        .all(|&(axis, sign)| axis < cert.final_dimension && sign.abs() == 1));
    assert!(n <= 2 * cert.final_dimension);

    // replay step by step
    let (mut tree, mut emb) = (t.clone(), e);
    for step in &cert.steps {
        let (t2, e2, replayed) = contract_inner_edge(&tree, &emb, step.contracted_edge).unwrap();
        assert_eq!(&replayed, step);
        assert_eq!(t2.leaf_count(), n);
        assert!(oracle_isometric(&t2, &e2));
        (tree, emb) = (t2, e2);
    }
}

#[test]
fn certificates_for_small_trees() {
    for t in unlabeled_trees(9).iter().filter(|t| t.vertex_count() >= 3) {
        check_certificate(t);
    }
}

#[test]
fn full_check_counts_every_pair() {
    for n in [1usize, 2, 5, 17] {
        let t = Tree::random(n, n as u64).unwrap();
        let report = verify_isometric(&t, &embed_tree(&t).unwrap()).unwrap();
        assert!(report.passed);
        assert!(!report.sampled);
        assert_eq!(report.checked_pairs as usize, n * (n - 1) / 2);
    }
}

#[test]
fn sampled_check_catches_any_broken_edge() {
    let t = Tree::random(200, 5).unwrap();
    let good = embed_tree(&t).unwrap();
    for victim in [0u64, 57, 199] {
        let broken = Embedding::from_points(
            good.dimension(),
            good.points().map(|(v, mut p)| {
                if v == victim {
                    p.0[0] += 7;
                }
                (v, p.0)
            }),
        )
        .unwrap();
        let report = verify_sampled(&t, &broken, 0, 1).unwrap();
        assert!(!report.passed);
        assert_eq!(report.checked_pairs, 199);
    }
}

#[test]
fn non_isometric_input_is_rejected_by_contraction() {
    // star with two leaves folded onto the same lattice point
    let t = treedim::parse_edge_list("0 1\n1 2\n1 3\n0 4\n0 5").unwrap();
    let e = Embedding::from_points(
        2,
        [
            (0, vec![0, 0]),
            (1, vec![1, 0]),
            (2, vec![2, 0]),
            (3, vec![1, 1]),
            (4, vec![-1, 0]),
            (5, vec![0, 1]),
        ],
    )
    .unwrap();
    assert!(!verify_isometric(&t, &e).unwrap().passed);
    assert!(matches!(
        contract_to_star(&t, &e),
        Err(VerifyError::DuplicateDirection(..))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_for_random_trees(n in 3usize..=60, seed in any::<u64>()) {
        let t = Tree::random(n, seed).unwrap();
                check_certificate(&t);
    }
}
