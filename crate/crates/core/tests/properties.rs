//! Property tests over random small graphs and tournaments.

use proptest::prelude::*;

use locprof_core::classes::{canonical_code, class_table};
use locprof_core::constructions::{clique_union, complete_multipartite};
use locprof_core::enumerate::{count_by_name, profile_exhaustive};
use locprof_core::format::{parse_object, write_graph, write_tournament, Object};
use locprof_core::inequalities::{all_hold, graph_identities, tournament_identities};
use locprof_core::montecarlo::profile_montecarlo;
use locprof_core::profile::{count_k_cliques, profile3_graph, profile4_tournament, triangle_count};
use locprof_core::universality::find_induced_path5;
use locprof_core::{CliqueSpec, Graph, Kind, Structure, Tournament, DEFAULT_WORK_CAP};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            Graph::from_fn(n, |u, v| bits[v * (v - 1) / 2 + u]).unwrap()
        })
    })
}

fn tournament(min_n: usize, max_n: usize) -> impl Strategy<Value = Tournament> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            Tournament::from_fn(n, |u, v| bits[v * (v - 1) / 2 + u]).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_reverses_profile(g in graph(30)) {
        prop_assume!(g.order() >= 3);
        let p = profile3_graph(&g).unwrap();
        let q = profile3_graph(&g.complement()).unwrap();
        let mut rev = p.counts;
        rev.reverse();
        prop_assert_eq!(q.counts, rev);
    }

    #[test]
    fn reverse_swaps_w4_l4(t in tournament(4, 30)) {
        let p = profile4_tournament(&t).unwrap();
        let q = profile4_tournament(&t.reverse()).unwrap();
        prop_assert_eq!(q.t4(), p.t4());
        prop_assert_eq!(q.c4(), p.c4());
        prop_assert_eq!(q.w4(), p.l4());
        prop_assert_eq!(q.l4(), p.w4());
        prop_assert_eq!(q.cyc3(), p.cyc3());
    }

    #[test]
    fn graph_profile_matches_oracle(g in graph(24)) {
        prop_assume!(g.order() >= 3);
        let p = profile3_graph(&g).unwrap();
        let ex = profile_exhaustive(&g, 3, DEFAULT_WORK_CAP).unwrap();
        prop_assert_eq!(p.counts, ["P0", "P1", "P2", "P3"].map(|c| count_by_name(&ex, c)));
        prop_assert!(all_hold(&graph_identities(&g).unwrap()));
    }

    #[test]
    fn tournament_profile_matches_oracle(t in tournament(4, 20)) {
        let p = profile4_tournament(&t).unwrap();
        let ex = profile_exhaustive(&t, 4, DEFAULT_WORK_CAP).unwrap();
        prop_assert_eq!(p.counts4, ["T4", "C4", "W4", "L4"].map(|c| count_by_name(&ex, c)));
        prop_assert!(all_hold(&tournament_identities(&t).unwrap()));
    }

    #[test]
    fn relabelling_preserves_profiles((g, perm) in graph(20).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let h = g.induce(&perm).unwrap();
        prop_assert!(h.check_invariants());
        if g.order() >= 3 {
            prop_assert_eq!(profile3_graph(&g).unwrap().counts, profile3_graph(&h).unwrap().counts);
        }
        if (3..=5).contains(&g.order()) {
            prop_assert_eq!(
                locprof_core::canonical_class(&g).unwrap(),
                locprof_core::canonical_class(&h).unwrap()
            );
        }
    }

    #[test]
    fn induce_composes((g, a, b) in graph(16).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n))
    }).prop_flat_map(|(g, a)| {
        let k = a.len();
        (Just(g), Just(a), proptest::sample::subsequence((0..k).collect::<Vec<_>>(), 0..=k))
    })) {
        let once = g.induce(&b.iter().map(|&i| a[i]).collect::<Vec<_>>()).unwrap();
        let twice = g.induce(&a).unwrap().induce(&b).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn clique_counts_agree_with_triangles(g in graph(40)) {
        prop_assert_eq!(count_k_cliques(&g, 3, DEFAULT_WORK_CAP).unwrap(), triangle_count(&g));
        if g.order() >= 4 {
            let ex = profile_exhaustive(&g, 4, DEFAULT_WORK_CAP).unwrap();
            let k4 = ex.iter().filter(|(c, _)| c.canon == (1 << 6) - 1).map(|(_, &n)| n).sum::<u128>();
            prop_assert_eq!(count_k_cliques(&g, 4, DEFAULT_WORK_CAP).unwrap(), k4);
        }
    }

    #[test]
    fn canonical_code_is_invariant(code in 0u32..1 << 15, perm in permutation(6)) {
        // Relabel the 6-vertex graph with pair code `code` and compare.
        let g = Graph::from_fn(6, |u, v| code >> (14 - (v * (v - 1) / 2 + u)) & 1 == 1).unwrap();
        let h = g.induce(&perm).unwrap();
        let all: Vec<usize> = (0..6).collect();
        prop_assert_eq!(
            canonical_code(Kind::Graph, 6, g.pair_code(&all)),
            canonical_code(Kind::Graph, 6, h.pair_code(&all))
        );
    }

    #[test]
    fn text_round_trip(g in graph(20), t in tournament(1, 20), matrix in any::<bool>()) {
        prop_assert_eq!(parse_object(&write_graph(&g)).unwrap(), Object::Graph(g));
        prop_assert_eq!(parse_object(&write_tournament(&t, matrix)).unwrap(), Object::Tournament(t));
    }

    #[test]
    fn montecarlo_is_a_distribution(t in tournament(5, 25), seed in any::<u64>()) {
        let est = profile_montecarlo(&t, 4, 500, seed).unwrap();
        prop_assert_eq!(est.classes.iter().map(|c| c.count).sum::<u64>(), 500);
        let ex = profile_exhaustive(&t, 4, DEFAULT_WORK_CAP).unwrap();
        for c in &est.classes {
            // A sampled class must exist in the object.
            prop_assert!(c.count == 0 || ex[&c.class] > 0);
        }
    }

    #[test]
    fn p5_free_families(parts in proptest::collection::vec(1usize..4, 1..5), sizes in proptest::collection::vec(1usize..5, 1..4), iso in 0usize..3) {
        let n: usize = parts.iter().sum();
        if n >= 5 {
            let g = complete_multipartite(&parts).unwrap();
            prop_assert_eq!(find_induced_path5(&g, DEFAULT_WORK_CAP).unwrap(), None);
        }
        let total: usize = sizes.iter().sum::<usize>() + iso;
        if (5..=12).contains(&total) {
            let alphas: Vec<f64> = sizes.iter().map(|&s| s as f64 / total as f64).collect();
            let spec = CliqueSpec::from_alphas(&alphas).unwrap();
            let g = clique_union(&spec, total).unwrap();
            prop_assert_eq!(find_induced_path5(&g, DEFAULT_WORK_CAP).unwrap(), None);
        }
    }
}

#[test]
fn class_tables_cover_all_codes() {
    for kind in [Kind::Graph, Kind::Tournament] {
        for l in 3..=5 {
            let table = class_table(kind, l).unwrap();
            let codes = 1u32 << (l * (l - 1) / 2);
            let mut seen = vec![false; table.classes.len()];
            for c in 0..codes {
                seen[table.index_of(c)] = true;
            }
            assert!(seen.iter().all(|&s| s), "{kind:?} l={l}");
        }
    }
}
