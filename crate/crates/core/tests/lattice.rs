mod common;

use std::collections::HashMap;

use common::{balanced_strings, visited_counts};
use dyck4d::lattice::{LatticeError, PathCounter};
use dyck4d::{
    catalan, complete_node, count_paths_through, enumerate_nodes, is_lattice_node, parse_word,
    word_to_path, Axis, LatticeNode, LatticeRegion,
};
use num_bigint::BigUint;

/// Visitation counts by brute force: for every balanced string, every node
/// its prefixes pass through.
fn visitation(n: usize) -> HashMap<(u64, u64), u64> {
    let mut counts = HashMap::new();
    for s in balanced_strings(n) {
        for lr in visited_counts(&s) {
            *counts.entry(lr).or_insert(0) += 1;
        }
    }
    counts
}

#[test]
fn per_node_counts_match_visitation() {
    for n in 0..=8u64 {
        let oracle = visitation(n as usize);
        let counter = PathCounter::new(n);
        let nodes = enumerate_nodes(LatticeRegion::triangle(n)).unwrap();
        assert_eq!(nodes.len(), oracle.len());
        for node in nodes {
            let expected = oracle[&(node.l(), node.r())];
            assert_eq!(
                counter.count(&node).unwrap(),
                BigUint::from(expected),
                "n={n} {node}"
            );
        }
    }
}

#[test]
fn levels_partition_the_words() {
    for n in 0..=8u64 {
        let counter = PathCounter::new(n);
        let nodes = enumerate_nodes(LatticeRegion::triangle(n)).unwrap();
        for level in 0..=2 * n {
            let sum: BigUint = nodes
                .iter()
                .filter(|q| q.i() == level)
                .map(|q| counter.count(q).unwrap())
                .sum();
            assert_eq!(sum, catalan(n), "n={n} i={level}");
        }
    }
}

#[test]
fn frozen_counts() {
    let node = |l, r| LatticeNode::from_counts(l, r).unwrap();
    assert_eq!(count_paths_through(&node(0, 0), 3).unwrap(), 5u32.into());
    assert_eq!(count_paths_through(&node(2, 0), 2).unwrap(), 1u32.into());
    assert_eq!(count_paths_through(&node(6, 6), 6).unwrap(), 132u32.into());
    assert_eq!(
        count_paths_through(&node(7, 0), 6),
        Err(LatticeError::NotInLattice)
    );
}

#[test]
fn large_counts_do_not_overflow() {
    let n = 60;
    let end = LatticeNode::from_counts(n, n).unwrap();
    let count = count_paths_through(&end, n).unwrap();
    assert_eq!(count, catalan(n));
    assert!(count.bits() > 64);
}

#[test]
fn completion_recovers_every_path_node() {
    for n in 0..=6 {
        for s in balanced_strings(n) {
            for node in word_to_path(&parse_word(&s).unwrap()).nodes() {
                let c = node.signed();
                for a in 0..4 {
                    for b in a + 1..4 {
                        let got =
                            complete_node((Axis::ALL[a], c[a]), (Axis::ALL[b], c[b])).unwrap();
                        assert_eq!(got, *node);
                    }
                }
            }
        }
    }
}

#[test]
fn membership_is_monotone() {
    for n in 0..8u64 {
        for node in enumerate_nodes(LatticeRegion::triangle(n)).unwrap() {
            let [i, j, l, r] = node.signed();
            assert!(is_lattice_node(i, j, l, r, LatticeRegion::triangle(n)));
            assert!(is_lattice_node(i, j, l, r, LatticeRegion::triangle(n + 1)));
            assert!(is_lattice_node(i, j, l, r, LatticeRegion::UNBOUNDED));
        }
    }
}

#[test]
fn membership_agrees_with_enumeration() {
    // every integer point of a small box is a member iff it is enumerated
    let n = 4u64;
    let nodes: Vec<[i64; 4]> = enumerate_nodes(LatticeRegion::triangle(n))
        .unwrap()
        .iter()
        .map(|q| q.signed())
        .collect();
    for i in -1..=9 {
        for j in -1..=5 {
            for l in -1..=5 {
                for r in -1..=5 {
                    assert_eq!(
                        is_lattice_node(i, j, l, r, LatticeRegion::triangle(n)),
                        nodes.contains(&[i, j, l, r])
                    );
                }
            }
        }
    }
}
