mod common;

use std::collections::VecDeque;

use proptest::prelude::*;
use treedim::{parse_edge_list, ShapeClass, Tree};

use common::{labeled_trees, unlabeled_trees, FloydDistances};

fn connected_by_traversal(t: &Tree) -> bool {
    let start = t.vertices().next().unwrap();
    let mut seen = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in t.neighbors(x).unwrap() {
            if !seen.contains(&y) {
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    seen.len() == t.vertex_count()
}

#[test]
fn enumeration_counts() {
    // Cayley: n^(n-2) labeled trees; OEIS A000055 for unlabeled ones.
    assert_eq!(labeled_trees(5).count(), 125);
    assert_eq!(labeled_trees(6).count(), 1296);
    let by_size: Vec<usize> = (1..=9)
        .map(|n| {
            unlabeled_trees(9)
                .iter()
                .filter(|t| t.vertex_count() == n)
                .count()
        })
        .collect();
    assert_eq!(by_size, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
}

#[test]
fn random_trees_of_seven_vertices_are_trees() {
    for seed in 0..1000 {
        let t = Tree::random(7, seed).unwrap();
        assert_eq!(t.vertex_count(), 7);
        assert_eq!(t.edges().count(), 6);
        assert!(connected_by_traversal(&t));
        for v in t.vertices() {
            let nbrs: Vec<_> = t.neighbors(v).unwrap().collect();
            assert!(!nbrs.contains(&v));
            assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
            for u in nbrs {
                assert!(t.neighbors(u).unwrap().any(|x| x == v));
            }
        }
    }
}

#[test]
fn random_tree_is_reproducible() {
    let a = Tree::random(8, 42).unwrap();
    let b = Tree::random(8, 42).unwrap();
    assert_eq!(a.to_edge_list(), b.to_edge_list());
    assert_ne!(
        a.to_edge_list(),
        Tree::random(8, 43).unwrap().to_edge_list()
    );
}

#[test]
fn random_tree_covers_all_labeled_trees_on_four_vertices() {
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..2000 {
        seen.insert(Tree::random(4, seed).unwrap().to_edge_list());
    }
    assert_eq!(seen.len(), 16);
}

proptest! {
    #[test]
    fn distance_is_a_metric(n in 1usize..=64, seed in any::<u64>()) {
        let t = Tree::random(n, seed).unwrap();
        let floyd = FloydDistances::new(&t);
        let all = t.all_pairs_distances();
        prop_assert_eq!(all.len(), n * (n - 1) / 2);
        let pairs: Vec<_> = floyd.pairs().collect();
        for (u, v, d) in pairs {
            prop_assert_eq!(all[&(u, v)] as u64, d);
            prop_assert_eq!(t.tree_distance(v, u).unwrap() as u64, d);
            prop_assert!(d > 0);
        }
        for v in t.vertices() {
            prop_assert_eq!(t.tree_distance(v, v).unwrap(), 0);
        }
    }

    #[test]
    fn hanging_paths_are_well_formed(n in 4usize..=64, seed in any::<u64>()) {
        let t = Tree::random(n, seed).unwrap();
        for leaf in t.leaves() {
            match t.hanging_path(leaf) {
                Ok(hp) => {
                    prop_assert!(t.degree(hp.anchor).unwrap() >= 3);
                    prop_assert_eq!(t.tree_distance(hp.anchor, leaf).unwrap(), hp.length);
                    prop_assert_eq!(hp.path.len(), hp.length + 1);
                    prop_assert_eq!(hp.path[0], hp.anchor);
                    prop_assert_eq!(*hp.path.last().unwrap(), leaf);
                    for &x in &hp.path[1..hp.length] {
                        prop_assert_eq!(t.degree(x), Some(2));
                    }
                    for w in hp.path.windows(2) {
                        prop_assert_eq!(t.tree_distance(w[0], w[1]).unwrap(), 1);
                    }
                }
                Err(_) => prop_assert_eq!(t.classify(), ShapeClass::Path),
            }
        }
    }

    #[test]
    fn classify_matches_degree_census(n in 1usize..=40, seed in any::<u64>()) {
        let t = Tree::random(n, seed).unwrap();
        let branching: Vec<_> = t.vertices().filter(|&v| t.degree(v).unwrap() > 2).collect();
        let expected = match (n, branching.as_slice()) {
            (1, _) => ShapeClass::SingleVertex,
            (_, []) => ShapeClass::Path,
            (_, [c]) => ShapeClass::Spider { center: *c },
            _ => ShapeClass::General,
        };
        prop_assert_eq!(t.classify(), expected);
        if expected == ShapeClass::Path {
            prop_assert_eq!(t.leaves().len(), 2);
        }
    }

    #[test]
    fn edge_list_round_trips(n in 1usize..=64, seed in any::<u64>(), shift in 0u64..1_000_000) {
        let t = Tree::random(n, seed).unwrap();
        let relabeled = if n == 1 {
            Tree::single(shift)
        } else {
            Tree::from_edges(t.edges().map(|(u, v)| (u * 3 + shift, v * 3 + shift))).unwrap()
        };
        let text = relabeled.to_edge_list();
        prop_assert_eq!(parse_edge_list(&text).unwrap(), relabeled);
    }
}
