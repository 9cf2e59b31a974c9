//! Validates the isomorph-free enumeration against a brute-force dedup
//! oracle: for every order and edge count in range, the generator must
//! visit exactly one representative per isomorphism class, with no
//! duplicates and no omissions.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::graph_from_mask;
use cospec::iso::canonical_form;
use cospec::search::{enumerate_graphs, enumerate_graphs_parallel, EnumSpec};

/// Brute-force class counts per edge count: all labeled graphs, deduped by
/// canonical form (itself validated against permutations in iso_oracle).
fn brute_class_counts(n: usize) -> BTreeMap<usize, u64> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen: BTreeSet<_> = BTreeSet::new();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for mask in 0..(1u64 << pairs) {
        let g = graph_from_mask(n, mask);
        if seen.insert(canonical_form(&g)) {
            *counts.entry(g.edge_count()).or_default() += 1;
        }
    }
    counts
}

#[test]
fn enumeration_matches_brute_force_up_to_six() {
    for n in 1..=6usize {
        let oracle = brute_class_counts(n);
        let pairs = n * n.saturating_sub(1) / 2;
        for m in 0..=pairs {
            let mut forms = BTreeSet::new();
            let visited = enumerate_graphs(&EnumSpec::new(n, m), |g| {
                assert_eq!(g.n(), n);
                assert_eq!(g.edge_count(), m);
                assert!(g.check_invariants());
                assert!(forms.insert(canonical_form(g)), "duplicate class visited");
            })
            .unwrap();
            assert_eq!(
                visited,
                oracle.get(&m).copied().unwrap_or(0),
                "class count mismatch at n={n}, m={m}"
            );
        }
    }
}

#[test]
fn enumeration_matches_brute_force_at_seven() {
    let oracle = brute_class_counts(7);
    assert_eq!(oracle.values().sum::<u64>(), 1044);
    for m in 0..=21 {
        let mut forms = BTreeSet::new();
        let visited = enumerate_graphs(&EnumSpec::new(7, m), |g| {
            assert!(forms.insert(canonical_form(g)), "duplicate class visited");
        })
        .unwrap();
        assert_eq!(
            visited,
            oracle.get(&m).copied().unwrap_or(0),
            "class count mismatch at n=7, m={m}"
        );
    }
}

/// Filtered enumeration agrees with filtering after the fact.
#[test]
fn filters_agree_with_postfilter() {
    for n in 2..=6usize {
        let pairs = n * (n - 1) / 2;
        for m in 0..=pairs {
            let mut plain: Vec<(bool, bool, usize)> = Vec::new();
            enumerate_graphs(&EnumSpec::new(n, m), |g| {
                let maxdeg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
                plain.push((g.is_bipartite(), g.components().len() == 1, maxdeg));
            })
            .unwrap();

            let bip = enumerate_graphs(
                &EnumSpec { bipartite_only: true, ..EnumSpec::new(n, m) },
                |_| {},
            )
            .unwrap();
            assert_eq!(bip, plain.iter().filter(|t| t.0).count() as u64);

            let conn = enumerate_graphs(
                &EnumSpec { connected_only: true, ..EnumSpec::new(n, m) },
                |_| {},
            )
            .unwrap();
            assert_eq!(conn, plain.iter().filter(|t| t.1).count() as u64);

            let low = enumerate_graphs(
                &EnumSpec { max_degree: Some(3), ..EnumSpec::new(n, m) },
                |_| {},
            )
            .unwrap();
            assert_eq!(low, plain.iter().filter(|t| t.2 <= 3).count() as u64);
        }
    }
}

/// Worker counts change the visit order, never the visited set.
#[test]
fn parallel_visits_same_classes() {
    use std::sync::Mutex;
    let spec = EnumSpec::new(8, 8);
    let mut seq_forms = BTreeSet::new();
    let seq = enumerate_graphs(&spec, |g| {
        seq_forms.insert(canonical_form(g));
    })
    .unwrap();
    for workers in [2usize, 5] {
        let forms = Mutex::new(BTreeSet::new());
        let count = enumerate_graphs_parallel(&spec, workers, |g| {
            forms.lock().unwrap().insert(canonical_form(g));
        })
        .unwrap();
        assert_eq!(count, seq);
        assert_eq!(forms.into_inner().unwrap(), seq_forms);
    }
}
