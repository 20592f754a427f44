//! Worked examples at the sizes where they are usually quoted.

use locprof_core::constructions::*;
use locprof_core::enumerate::{count_by_name, profile_exhaustive};
use locprof_core::extremal::{clique_union_densities, goodman_slack, grid_search_min, solve_cubic_theta};
use locprof_core::montecarlo::profile_montecarlo;
use locprof_core::profile::{profile3_graph, profile4_tournament};
use locprof_core::universality::{fox_trials, is_l_universal, Mode};
use locprof_core::{binomial, CliqueSpec, Tournament, DEFAULT_WORK_CAP};

#[test]
fn extremal_graph_misses_only_p2() {
    let g = extremal_rho_graph(2000).unwrap();
    let r = is_l_universal(&g, 3, Mode::Exhaustive, 2 * DEFAULT_WORK_CAP).unwrap();
    assert_eq!(r.missing_names(), ["P2"]);
    assert_eq!(r.inspected, binomial(2000, 3));
    assert_eq!(r.counts.values().sum::<u128>(), r.inspected);
    // Same answer from the formula path.
    assert_eq!(profile3_graph(&g).unwrap().counts[2], 0);
}

#[test]
fn circular_101_misses_w4_l4() {
    let t = circular_tournament(101).unwrap();
    let r = is_l_universal(&t, 4, Mode::Exhaustive, DEFAULT_WORK_CAP).unwrap();
    let mut missing = r.missing_names();
    missing.sort();
    assert_eq!(missing, ["L4", "W4"]);
}

/// `T4 = n C((n-1)/2, 3)` and `C(n,4) = n C((n-1)/2,3) + n C((n+1)/2,3) - T4`
/// on circular tournaments, checked against enumeration.
#[test]
fn circular_closed_forms() {
    for n in (5..=13).step_by(2) {
        let nn = n as u128;
        let t = circular_tournament(n).unwrap();
        let ex = profile_exhaustive(&t, 4, DEFAULT_WORK_CAP).unwrap();
        let t4 = nn * binomial((nn - 1) / 2, 3);
        assert_eq!(count_by_name(&ex, "T4"), t4, "n={n}");
        assert_eq!(2 * nn * binomial((nn - 1) / 2, 3) + nn * binomial(nn.div_ceil(2), 3) - binomial(nn, 4), t4);
        assert_eq!(count_by_name(&ex, "W4") + count_by_name(&ex, "L4"), 0);
    }
    let c7 = circular_tournament(7).unwrap();
    assert_eq!(profile4_tournament(&c7).unwrap().cyc3(), 14);
}

#[test]
fn random_graph_goodman_slack_near_zero() {
    let g = random_graph(2000, 0.5, 0).unwrap();
    let s = goodman_slack(&profile3_graph(&g).unwrap());
    assert!(s.abs() <= 0.01, "{s}");
    assert_eq!(goodman_slack(&profile3_graph(&complete_graph(30).unwrap()).unwrap()), 0.75);
}

#[test]
fn fox_sampling_at_k16() {
    let g = random_graph(5000, 0.5, 0).unwrap();
    let f = fox_trials(&g, 16, 100, 0, DEFAULT_WORK_CAP).unwrap();
    assert_eq!(f.m, 16);
    assert!(f.totals.iter().all(|&t| t == 0));
    assert_eq!(f.mean, 0.0);
}

#[test]
fn grid_single_clique() {
    let g = grid_search_min(1, 0.005, 0.01).unwrap().unwrap();
    assert!((g.value - 0.278).abs() <= 0.005, "{g:?}");
    assert!(grid_search_min(3, 0.1, 0.0).unwrap().is_none_or(|g| (g.p0 - g.p3).abs() == 0.0));
}

#[test]
fn grid_never_beats_rho_by_more_than_step() {
    let rho = solve_cubic_theta().rho;
    for (r, step, band) in [(2, 0.01, 0.01), (3, 0.01, 0.005), (4, 0.02, 0.01)] {
        if let Some(g) = grid_search_min(r, step, band).unwrap() {
            assert!(g.value >= rho - step, "r={r} step={step}: {}", g.value);
        }
    }
}

#[test]
fn pentagon_sampling() {
    let g = cycle_graph(5).unwrap();
    let est = profile_montecarlo(&g, 3, 100_000, 1).unwrap();
    for name in ["P1", "P2"] {
        let c = est.get(name).unwrap();
        assert!((c.density - 0.5).abs() <= c.half_width, "{name}: {c:?}");
    }
    assert_eq!(est.get("P0").unwrap().count, 0);
    let k = profile_montecarlo(&complete_graph(12).unwrap(), 4, 1000, 3).unwrap();
    let full = k.classes.iter().find(|c| c.count > 0).unwrap();
    assert_eq!((full.density, full.half_width), (1.0, 0.0));
}

#[test]
fn clique_union_limits_and_counts() {
    let spec = CliqueSpec::from_alphas(&[0.5, 0.5]).unwrap();
    assert_eq!(clique_union_densities(&spec), [0.0, 0.75, 0.0, 0.25]);
    let g = clique_union(&spec, 100).unwrap();
    assert_eq!(profile3_graph(&g).unwrap().counts, [0, 122_500, 0, 39_200]);
    let k = solve_cubic_theta();
    let d = clique_union_densities(&CliqueSpec::new(&[k.theta, k.theta, 1.0 - 2.0 * k.theta], 0.0).unwrap());
    assert!((d[0] - k.rho).abs() < 1e-12 && (d[3] - k.rho).abs() < 1e-12);
    let sizes = clique_union_sizes(&extremal_spec(), 4000).unwrap();
    assert_eq!(sizes.iter().sum::<usize>(), 4000);
}

#[test]
fn small_tournament_examples() {
    let t = Tournament::from_arcs(5, &circular_tournament(5).unwrap().arcs()).unwrap();
    assert_eq!(profile4_tournament(&t).unwrap().counts4, [0, 5, 0, 0]);
    assert_eq!(profile4_tournament(&transitive_tournament(6).unwrap()).unwrap().counts4, [15, 0, 0, 0]);
    let c5 = circular_tournament(5).unwrap();
    let sub = c5.induce(&[0, 1, 3]).unwrap();
    assert!(sub.beats(0, 1) && sub.beats(1, 2) && sub.beats(2, 0));
}
