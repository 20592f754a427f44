//! Finite-n forms of the tournament inequalities, the Goodman floor, and
//! the integer identities tying the profile counts together.
//!
//! Count inequalities are decided in exact `i128` arithmetic; `slack` is
//! the same margin divided by the natural normaliser, for display only.

use rayon::prelude::*;

use crate::bitset::{and_count, ones};
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::profile::{arc_cycle_counts, binomial, profile3_graph, profile4_tournament, Profile3, TournamentProfile4};
use crate::tournament::Tournament;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// Human-readable statement including the finite allowance.
    pub statement: &'static str,
    pub holds: bool,
    /// `lhs - rhs` in density units; non-negative iff `holds`.
    pub slack: f64,
    /// Exact equality at the count level.
    pub tight: bool,
}

fn check(name: &'static str, statement: &'static str, margin: i128, scale: f64) -> Check {
    Check { name, statement, holds: margin >= 0, slack: margin as f64 / scale, tight: margin == 0 }
}

fn identity(name: &'static str, statement: &'static str, lhs: u128, rhs: u128) -> Check {
    Check {
        name,
        statement,
        holds: lhs == rhs,
        slack: lhs as f64 - rhs as f64,
        tight: lhs == rhs,
    }
}

pub fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.holds)
}

/// (a)-(e) on a 4-profile: with `C = C(n,4)`,
/// (a) `(n-2)(C4 - T4) <= 3C`,
/// (b) `T4 >= 3C/8 - 3C/n`,
/// (c) `T4 + L4 >= C/2 - 3C/n`,
/// (d) `T4 + W4 >= C/2 - 3C/n`,
/// (e) `c4 >= 6 c3^2 - 10/n`.
pub fn tournament_inequalities(p: &TournamentProfile4) -> Vec<Check> {
    let n = p.n as i128;
    let c = binomial(p.n as u128, 4) as i128;
    let cf = c as f64;
    let (t4, c4, w4, l4) = (p.t4() as i128, p.c4() as i128, p.w4() as i128, p.l4() as i128);
    let e_margin = p.densities4[1] - 6.0 * p.density_c3 * p.density_c3 + 10.0 / p.n as f64;
    vec![
        check("a", "(n-2)(C4 - T4) <= 3 C(n,4)", 3 * c - (n - 2) * (c4 - t4), (n - 2) as f64 * cf),
        check("b", "T4 >= 3/8 C(n,4) - 3 C(n,4)/n", 8 * n * t4 - (3 * n - 24) * c, 8.0 * n as f64 * cf),
        check("c", "T4 + L4 >= 1/2 C(n,4) - 3 C(n,4)/n", 2 * n * (t4 + l4) - (n - 6) * c, 2.0 * n as f64 * cf),
        check("d", "T4 + W4 >= 1/2 C(n,4) - 3 C(n,4)/n", 2 * n * (t4 + w4) - (n - 6) * c, 2.0 * n as f64 * cf),
        Check {
            name: "e",
            statement: "c4 >= 6 c3^2 - 10/n",
            holds: e_margin >= 0.0,
            slack: e_margin,
            tight: false,
        },
    ]
}

pub fn verify_tournament_inequalities(t: &Tournament) -> Result<Vec<Check>> {
    Ok(tournament_inequalities(&profile4_tournament(t)?))
}

/// `24 (N0 + N3) >= n(n-1)(n-5)`, the finite form of `p0 + p3 >= 1/4`.
pub fn goodman_check(p: &Profile3) -> Check {
    let n = p.n as i128;
    let lhs = 24 * (p.counts[0] + p.counts[3]) as i128;
    check(
        "goodman",
        "24 (N0 + N3) >= n(n-1)(n-5)",
        lhs - n * (n - 1) * (n - 5),
        24.0 * binomial(p.n as u128, 3) as f64,
    )
}

/// Largest order accepted by [`min_monochromatic_exhaustive`].
pub const MAX_EXHAUSTIVE_GOODMAN_ORDER: usize = 8;

/// Least `N0 + N3` over all `2^C(n,2)` labelled graphs on `n <= 8`
/// vertices, via `N0 + N3 = C(n,3) - m(n-2) + sum C(deg,2)`. The low pairs
/// are walked in Gray-code order with O(1) updates per flip; the top
/// pairs split the work.
pub fn min_monochromatic_exhaustive(n: usize) -> Result<u128> {
    if n > MAX_EXHAUSTIVE_GOODMAN_ORDER {
        return input(format!("exhaustive Goodman scan supports n <= {MAX_EXHAUSTIVE_GOODMAN_ORDER}, got {n}"));
    }
    if n < 3 {
        return Ok(0);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let p = pairs.len();
    let high = p.min(6);
    let low = p - high;
    let total = binomial(n as u128, 3) as i64;
    let per_edge = n as i64 - 2;
    let best = (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut on = 0u32;
            let mut deg = [0i64; MAX_EXHAUSTIVE_GOODMAN_ORDER];
            // `value = -m(n-2) + sum C(deg,2)`.
            let mut value = 0i64;
            let mut flip = |i: usize, on: &mut u32| {
                let (u, v) = pairs[i];
                if *on >> i & 1 == 0 {
                    value += deg[u] + deg[v] - per_edge;
                    deg[u] += 1;
                    deg[v] += 1;
                } else {
                    deg[u] -= 1;
                    deg[v] -= 1;
                    value -= deg[u] + deg[v] - per_edge;
                }
                *on ^= 1 << i;
                value
            };
            let mut current = 0;
            for b in 0..high {
                if prefix >> b & 1 == 1 {
                    current = flip(low + b, &mut on);
                }
            }
            let mut best = current;
            for step in 1u64..1 << low {
                current = flip(step.trailing_zeros() as usize, &mut on);
                best = best.min(current);
            }
            best
        })
        .min()
        .expect("at least one graph");
    Ok((total + best) as u128)
}

/// `24 min (N0 + N3) >= n(n-1)(n-5)`, decided over every labelled graph.
pub fn goodman_floor_holds_exhaustive(n: usize) -> Result<bool> {
    let min = min_monochromatic_exhaustive(n)? as i128;
    let n = n as i128;
    Ok(24 * min >= n * (n - 1) * (n - 5))
}

/// Triangles recounted as `sum_v sum_{u in N(v)} |N(u) & N(v)| = 6 N3`.
fn triangles_by_wedges(g: &Graph) -> u128 {
    (0..g.order())
        .into_par_iter()
        .map(|v| {
            ones(g.neighbors(v))
                .map(|u| and_count(g.neighbors(u), g.neighbors(v)) as u128)
                .sum::<u128>()
        })
        .sum::<u128>()
        / 6
}

pub fn graph_identities(g: &Graph) -> Result<Vec<Check>> {
    let p = profile3_graph(g)?;
    let n = g.order() as u128;
    let deg2: u128 = g.degrees().iter().map(|&d| binomial(d as u128, 2)).sum();
    let m = g.edge_count() as u128;
    Ok(vec![
        identity("n-sum", "N0 + N1 + N2 + N3 = C(n,3)", p.total(), binomial(n, 3)),
        identity("triangles", "N3 = 6-fold wedge recount / 6", p.counts[3], triangles_by_wedges(g)),
        identity("wedges", "N2 + 3 N3 = sum C(deg,2)", p.counts[2] + 3 * p.counts[3], deg2),
        identity("edges", "N1 + 2 N2 + 3 N3 = m (n-2)", p.counts[1] + 2 * p.counts[2] + 3 * p.counts[3], m * (n - 2)),
    ])
}

/// The seven integer identities linking the 3- and 4-profile of a
/// tournament to its degree sequences and per-arc cyclic-triangle counts.
pub fn tournament_identities(t: &Tournament) -> Result<Vec<Check>> {
    let p = profile4_tournament(t)?;
    let n = t.order() as u128;
    let arcs = arc_cycle_counts(t);
    let a: u128 = t.out_degrees().iter().map(|&d| binomial(d as u128, 3)).sum();
    let b: u128 = (0..t.order()).map(|v| binomial(t.in_degree(v) as u128, 3)).sum();
    let out2: u128 = t.out_degrees().iter().map(|&d| binomial(d as u128, 2)).sum();
    Ok(vec![
        identity("n-sum", "transitive + cyclic triples = C(n,3)", p.counts3[0] + p.counts3[1], binomial(n, 3)),
        identity("t-sum", "T4 + C4 + W4 + L4 = C(n,4)", p.counts4.iter().sum(), binomial(n, 4)),
        identity("out", "T4 + W4 = sum C(d+,3)", p.t4() + p.w4(), a),
        identity("in", "T4 + L4 = sum C(d-,3)", p.t4() + p.l4(), b),
        identity("arc-pairs", "C4 = sum_e C(s_e,2)", p.c4(), arcs.pair_sum()),
        identity(
            "cyc-extension",
            "cyc3 (n-3) = 2 C4 + W4 + L4",
            p.cyc3() * (n - 3),
            2 * p.c4() + p.w4() + p.l4(),
        ),
        identity("arc-sum", "sum_e s_e = 3 cyc3", arcs.sum(), 3 * p.cyc3()),
        identity("triples", "cyc3 = C(n,3) - sum C(d+,2)", p.cyc3(), binomial(n, 3) - out2),
        Check {
            name: "cyc-bound",
            statement: "24 cyc3 <= n^3 - n",
            holds: 24 * p.cyc3() <= n * n * n - n,
            slack: (n * n * n - n) as f64 - 24.0 * p.cyc3() as f64,
            tight: 24 * p.cyc3() == n * n * n - n,
        },
    ])
}

/// Every check of a named suite, or an input error when the suite does
/// not apply to the kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Goodman,
    TournamentInequalities,
    Identities,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Goodman => "goodman",
            Suite::TournamentInequalities => "tournament-inequalities",
            Suite::Identities => "identities",
        }
    }
}

pub fn run_suite_graph(g: &Graph, suite: Suite) -> Result<Vec<Check>> {
    match suite {
        Suite::Goodman => Ok(vec![goodman_check(&profile3_graph(g)?)]),
        Suite::Identities => graph_identities(g),
        Suite::TournamentInequalities => input("tournament-inequalities needs a tournament"),
    }
}

pub fn run_suite_tournament(t: &Tournament, suite: Suite) -> Result<Vec<Check>> {
    match suite {
        Suite::TournamentInequalities => verify_tournament_inequalities(t),
        Suite::Identities => tournament_identities(t),
        Suite::Goodman => input("goodman needs a graph"),
    }
}
