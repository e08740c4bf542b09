//! Structural laws of the vertex posets of level hypergraphs, checked over
//! every connected graph on up to 5 vertices and every level:
//!
//! * the characterization of vertex posets as closures of acyclic
//!   1-orientations, with the poset side enumerated from scratch;
//! * injectivity of vertex coordinates;
//! * the vertex count against the constant term of the f-polynomial;
//! * rooted-tree restrictions on every connected subset at the top level;
//! * completeness of level-to-level lifting.

use std::collections::BTreeSet;

use mgp::graph::connected_catalog;
use mgp::hposet::{
    enumerate_hposets, is_hposet, lift_hposets, vertex_coordinates, Poset,
};
use mgp::hyper::level_hypergraph;
use mgp::qsym::{f_polynomial, psi};
use mgp::{SimpleGraph, VertexSet};

/// Every poset on `{0, .., n-1}`, enumerated by assigning each unordered
/// pair one of three states and keeping the assignments that are already
/// transitively closed. Independent of the orientation machinery.
fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for code in 0..3u32.pow(pairs.len() as u32) {
        let mut c = code;
        let mut rels = Vec::new();
        for &(u, v) in &pairs {
            match c % 3 {
                1 => rels.push((u, v)),
                2 => rels.push((v, u)),
                _ => {}
            }
            c /= 3;
        }
        let count = rels.len();
        if let Ok(p) = Poset::from_relations(n, rels) {
            if p.relation_count() == count {
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn poset_enumeration_matches_known_counts() {
    for (n, expected) in [(0usize, 1usize), (1, 1), (2, 3), (3, 19), (4, 219), (5, 4231)] {
        assert_eq!(all_posets(n).len(), expected, "poset count at n={n}");
    }
}

#[test]
fn vertex_posets_are_exactly_the_orientation_closures() {
    for n in 2..=5usize {
        let posets = all_posets(n);
        for g in connected_catalog(n).unwrap() {
            for m in 1..=(n as u64 - 1) {
                let h = level_hypergraph(&g, m);
                let from_orientations = enumerate_hposets(&h);
                let from_definition: BTreeSet<Poset> = posets
                    .iter()
                    .filter(|p| is_hposet(p, &h))
                    .cloned()
                    .collect();
                assert_eq!(
                    from_orientations, from_definition,
                    "characterization failed at n={n} m={m} edges={:?}",
                    g.edges()
                );
            }
        }
    }
}

#[test]
fn distinct_posets_give_distinct_vertices() {
    for n in 2..=5usize {
        for g in connected_catalog(n).unwrap() {
            for m in 1..=(n as u64 - 1) {
                let h = level_hypergraph(&g, m);
                let hposets = enumerate_hposets(&h);
                let coords: BTreeSet<Vec<u64>> = hposets
                    .iter()
                    .map(|p| vertex_coordinates(p, &h).unwrap().coords().to_vec())
                    .collect();
                assert_eq!(coords.len(), hposets.len(), "coordinate collision at n={n} m={m}");
            }
        }
    }
}

#[test]
fn vertex_count_equals_constant_face_coefficient() {
    for n in 2..=5usize {
        for g in connected_catalog(n).unwrap() {
            for m in 1..=(n as u64 - 1) {
                let h = level_hypergraph(&g, m);
                let f = f_polynomial(&psi(&g, m)).unwrap();
                assert_eq!(
                    enumerate_hposets(&h).len() as i64,
                    f.vertex_count(),
                    "vertex count mismatch at n={n} m={m}"
                );
                assert_eq!(f.euler_sum(), 1);
            }
        }
    }
}

#[test]
fn top_level_posets_restrict_to_rooted_trees_on_all_connected_sets() {
    for n in 2..=5usize {
        for g in connected_catalog(n).unwrap() {
            let h = level_hypergraph(&g, n as u64 - 1);
            let connected_sets: Vec<VertexSet> = g
                .vertices()
                .subsets()
                .filter(|s| s.len() >= 2 && g.is_connected_on(*s))
                .collect();
            for p in enumerate_hposets(&h) {
                for &s in &connected_sets {
                    assert!(
                        p.restriction_is_rooted_tree(s),
                        "restriction not a rooted tree at n={n} s={s:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn lifting_is_complete_between_consecutive_levels() {
    for n in 2..=5usize {
        for g in connected_catalog(n).unwrap() {
            let mut current = enumerate_hposets(&level_hypergraph(&g, 1));
            for m in 2..=(n as u64 - 1) {
                let h_next = level_hypergraph(&g, m);
                let mut lifted = BTreeSet::new();
                for p in &current {
                    lifted.extend(lift_hposets(p, &h_next).unwrap());
                }
                let expected = enumerate_hposets(&h_next);
                assert_eq!(lifted, expected, "lift incomplete at n={n} m={m}");

                // Every finer-level poset extends some coarser-level poset.
                for q in &expected {
                    let extends_one = current.iter().any(|p| {
                        p.relations().iter().all(|&(i, j)| q.lt(i, j))
                    });
                    assert!(extends_one, "orphan poset at n={n} m={m}");
                }
                current = expected;
            }
        }
    }
}
