//! Exact 3-profiles of graphs and 3/4-profiles of tournaments.
//!
//! Counts are exact `u128` integers computed from degree sums and
//! row-intersection popcounts; densities are a derived floating view.
//! Parallel reductions are plain integer sums, so results do not depend on
//! the worker count.

use rayon::prelude::*;

use crate::bitset::{and_count_from, and_not_count, ones, popcount};
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::limits::check_work;
use crate::tournament::Tournament;

/// Binomial coefficient, exact; saturates at `u128::MAX`.
pub fn binomial(n: u128, k: u128) -> u128 {
    checked_binomial(n, k).unwrap_or(u128::MAX)
}

/// Binomial coefficient, or `None` if it exceeds `u128`.
pub fn checked_binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by i + 1; cancel the common factor
        // first so the product only overflows when the result does.
        let d = i + 1;
        let g = gcd(acc, d);
        acc = (acc / g).checked_mul((n - i) / (d / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn c2(x: usize) -> u128 {
    binomial(x as u128, 2)
}

fn c3(x: usize) -> u128 {
    binomial(x as u128, 3)
}

/// Induced 3-vertex graph counts: `counts[i]` triples span exactly `i` edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile3 {
    pub n: usize,
    pub counts: [u128; 4],
    pub densities: [f64; 4],
}

impl Profile3 {
    pub fn from_counts(n: usize, counts: [u128; 4]) -> Profile3 {
        let total = binomial(n as u128, 3) as f64;
        Profile3 {
            n,
            counts,
            densities: counts.map(|c| c as f64 / total),
        }
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

/// Induced 4-vertex tournament counts `(T4, C4, W4, L4)` and the 3-profile
/// `(transitive, cyclic)`.
///
/// `W4` has a vertex beating a cyclic triangle, `L4` a vertex beaten by a
/// cyclic triangle, so that `T4 + W4 = sum C(d+, 3)` and
/// `T4 + L4 = sum C(d-, 3)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TournamentProfile4 {
    pub n: usize,
    pub counts4: [u128; 4],
    pub counts3: [u128; 2],
    pub densities4: [f64; 4],
    pub density_c3: f64,
}

impl TournamentProfile4 {
    pub fn from_counts(n: usize, counts4: [u128; 4], counts3: [u128; 2]) -> TournamentProfile4 {
        let total4 = binomial(n as u128, 4) as f64;
        let total3 = binomial(n as u128, 3) as f64;
        TournamentProfile4 {
            n,
            counts4,
            counts3,
            densities4: counts4.map(|c| c as f64 / total4),
            density_c3: counts3[1] as f64 / total3,
        }
    }

    pub fn t4(&self) -> u128 {
        self.counts4[0]
    }
    pub fn c4(&self) -> u128 {
        self.counts4[1]
    }
    pub fn w4(&self) -> u128 {
        self.counts4[2]
    }
    pub fn l4(&self) -> u128 {
        self.counts4[3]
    }
    pub fn cyc3(&self) -> u128 {
        self.counts3[1]
    }
}

/// Number of triangles, each counted once: for every edge `u < v` the
/// common neighbours above `v`.
pub fn triangle_count(g: &Graph) -> u128 {
    (0..g.order())
        .into_par_iter()
        .map(|u| {
            let nu = g.neighbors(u);
            ones(nu)
                .filter(|&v| v > u)
                .map(|v| and_count_from(nu, g.neighbors(v), v + 1) as u128)
                .sum::<u128>()
        })
        .sum()
}

pub fn profile3_graph(g: &Graph) -> Result<Profile3> {
    let n = g.order();
    if n < 3 {
        return input(format!("3-profile needs at least 3 vertices, got {n}"));
    }
    let n3 = triangle_count(g);
    let cherries: u128 = (0..n).map(|v| c2(g.degree(v))).sum();
    let n2 = cherries - 3 * n3;
    let n1 = g.edge_count() as u128 * (n as u128 - 2) - 2 * n2 - 3 * n3;
    let n0 = binomial(n as u128, 3) - n1 - n2 - n3;
    Ok(Profile3::from_counts(n, [n0, n1, n2, n3]))
}

/// `C(n,3) - sum_v C(d+(v), 2)`.
pub fn cyclic_triangle_count(t: &Tournament) -> u128 {
    let transitive: u128 = t.out_degrees().iter().map(|&d| c2(d)).sum();
    binomial(t.order() as u128, 3) - transitive
}

/// Per-arc cyclic triangle counts `s_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCycleCounts {
    /// `(tail, head, s_e)` in the order of [`Tournament::arcs`].
    pub arcs: Vec<(usize, usize, usize)>,
}

impl ArcCycleCounts {
    pub fn sum(&self) -> u128 {
        self.arcs.iter().map(|&(_, _, s)| s as u128).sum()
    }

    /// `sum_e C(s_e, 2)`: pairs of cyclic triangles sharing an arc, i.e. `C4`.
    pub fn pair_sum(&self) -> u128 {
        self.arcs.iter().map(|&(_, _, s)| c2(s)).sum()
    }

    pub fn get(&self, tail: usize, head: usize) -> Option<usize> {
        self.arcs
            .iter()
            .find(|&&(u, v, _)| u == tail && v == head)
            .map(|&(_, _, s)| s)
    }
}

/// Cyclic triangles through `u -> v`: vertices `w` with `v -> w -> u`,
/// i.e. `|N+(v) minus N+(u)|` (neither `u` nor `v` lies in `N+(v)` there).
#[inline]
fn arc_cycles(t: &Tournament, u: usize, v: usize) -> usize {
    and_not_count(t.out_neighbors(v), t.out_neighbors(u))
}

pub fn arc_cycle_counts(t: &Tournament) -> ArcCycleCounts {
    let arcs = (0..t.order())
        .into_par_iter()
        .flat_map_iter(|u| ones(t.out_neighbors(u)).map(move |v| (u, v, arc_cycles(t, u, v))))
        .collect();
    ArcCycleCounts { arcs }
}

pub fn profile4_tournament(t: &Tournament) -> Result<TournamentProfile4> {
    let n = t.order();
    if n < 4 {
        return input(format!("4-profile needs at least 4 vertices, got {n}"));
    }
    let a: u128 = (0..n).map(|v| c3(t.out_degree(v))).sum();
    let b: u128 = (0..n).map(|v| c3(t.in_degree(v))).sum();
    let c4: u128 = (0..n)
        .into_par_iter()
        .map(|u| {
            ones(t.out_neighbors(u))
                .map(|v| c2(arc_cycles(t, u, v)))
                .sum::<u128>()
        })
        .sum();
    let total = binomial(n as u128, 4);
    let Some(t4) = (a + b + c4).checked_sub(total) else {
        return Err(Error::Internal("negative T4 count".into()));
    };
    let (w4, l4) = (a - t4, b - t4);
    let cyc = cyclic_triangle_count(t);
    let trans = binomial(n as u128, 3) - cyc;
    Ok(TournamentProfile4::from_counts(n, [t4, c4, w4, l4], [trans, cyc]))
}

/// Number of `k`-cliques, by recursive intersection of candidate rows.
/// Anticliques are cliques of [`Graph::complement`]. Returns 0 for `k > n`.
pub fn count_k_cliques(g: &Graph, k: usize, cap: u128) -> Result<u128> {
    let n = g.order();
    if k == 0 {
        return input("clique order must be at least 1");
    }
    if k > n {
        return Ok(0);
    }
    match k {
        1 => return Ok(n as u128),
        2 => return Ok(g.edge_count() as u128),
        3 => return Ok(triangle_count(g)),
        _ => {}
    }
    let estimate = clique_work_estimate(g, k);
    check_work(|| format!("{k}-clique count on {n} vertices"), estimate, cap)?;

    let words = g.adjacency().words();
    let budget = std::sync::atomic::AtomicU64::new(0);
    let limit = cap.min(u64::MAX as u128) as u64;
    let counts: std::result::Result<Vec<u128>, Exhausted> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut cand = g.neighbors(v).to_vec();
            mask_below(&mut cand, v + 1);
            let mut scratch = vec![vec![0u64; words]; k];
            extend_cliques(g, &cand, k - 1, &mut scratch, &budget, limit)
        })
        .collect();
    let counts = counts.map_err(|_| Error::Refused {
        what: format!("{k}-clique count on {n} vertices (run-time node cap)"),
        estimate,
        cap,
    })?;
    Ok(counts.into_iter().sum())
}

struct Exhausted;

/// Cliques of size `need` inside `cand` (all of whose vertices exceed the
/// current prefix).
fn extend_cliques(
    g: &Graph,
    cand: &[u64],
    need: usize,
    scratch: &mut [Vec<u64>],
    budget: &std::sync::atomic::AtomicU64,
    limit: u64,
) -> std::result::Result<u128, Exhausted> {
    if need == 1 {
        return Ok(popcount(cand) as u128);
    }
    if popcount(cand) < need {
        return Ok(0);
    }
    if budget.fetch_add(1, std::sync::atomic::Ordering::Relaxed) > limit {
        return Err(Exhausted);
    }
    let (head, rest) = scratch.split_first_mut().expect("scratch depth");
    let mut total = 0;
    for u in ones(cand) {
        if need == 2 {
            total += and_count_from(cand, g.neighbors(u), u + 1) as u128;
            continue;
        }
        for ((h, &c), &a) in head.iter_mut().zip(cand).zip(g.neighbors(u)) {
            *h = c & a;
        }
        mask_below(head, u + 1);
        total += extend_cliques(g, head, need - 1, rest, budget, limit)?;
    }
    Ok(total)
}

/// Clears bits `< start`.
fn mask_below(row: &mut [u64], start: usize) {
    for (i, w) in row.iter_mut().enumerate() {
        let lo = i * 64;
        if lo + 64 <= start {
            *w = 0;
        } else if lo < start {
            *w &= !0u64 << (start - lo);
        }
    }
}

/// Expected search nodes: partial cliques of size `1..k-1` in a random
/// graph of the same edge density, times the row length.
fn clique_work_estimate(g: &Graph, k: usize) -> u128 {
    let n = g.order();
    let density = if n < 2 {
        0.0
    } else {
        g.edge_count() as f64 / (n as f64 * (n as f64 - 1.0) / 2.0)
    };
    let words = g.adjacency().words() as f64;
    let nodes: f64 = (1..k)
        .map(|j| binomial(n as u128, j as u128) as f64 * density.powi((j * (j - 1) / 2) as i32))
        .sum();
    (nodes * words).min(u128::MAX as f64) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::DEFAULT_WORK_CAP;

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn pentagon() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    /// Triples by edge count, by brute force.
    fn brute3(g: &Graph) -> [u128; 4] {
        let n = g.order();
        let mut c = [0u128; 4];
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let e = g.has_edge(a, b) as usize + g.has_edge(a, d) as usize + g.has_edge(b, d) as usize;
                    c[e] += 1;
                }
            }
        }
        c
    }

    fn circular(n: usize) -> Tournament {
        Tournament::from_fn(n, |u, v| v - u <= (n - 1) / 2).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(100_000, 4), 4_166_416_671_249_975_000);
        assert_eq!(binomial(128, 64), 23_951_146_041_928_082_866_135_587_776_380_551_750);
        assert_eq!(checked_binomial(5000, 16), None);
        assert_eq!(binomial(5000, 16), u128::MAX);
        for n in 1..120u128 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn triangles_of_known_graphs() {
        assert_eq!(triangle_count(&complete(5)), 10);
        assert_eq!(triangle_count(&pentagon()), 0);
        assert_eq!(brute3(&petersen())[3], 0);
        assert_eq!(triangle_count(&petersen()), 0);
    }

    #[test]
    fn profile3_known_graphs() {
        assert_eq!(brute3(&pentagon()), [0, 5, 5, 0]);
        assert_eq!(profile3_graph(&pentagon()).unwrap().counts, [0, 5, 5, 0]);
        assert_eq!(brute3(&petersen()), [30, 60, 30, 0]);
        assert_eq!(profile3_graph(&petersen()).unwrap().counts, [30, 60, 30, 0]);
        assert_eq!(profile3_graph(&complete(7)).unwrap().counts, [0, 0, 0, 35]);
        assert!(profile3_graph(&complete(2)).is_err());
    }

    #[test]
    fn profile3_densities_sum_to_one() {
        let p = profile3_graph(&petersen()).unwrap();
        assert!((p.densities.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(p.total(), 120);
    }

    #[test]
    fn cyclic_triangles() {
        let tt = Tournament::from_fn(8, |_, _| true).unwrap();
        assert_eq!(cyclic_triangle_count(&tt), 0);
        assert_eq!(cyclic_triangle_count(&circular(5)), 5);
        assert_eq!(cyclic_triangle_count(&circular(7)), 14);
    }

    #[test]
    fn arc_counts_on_c5() {
        let t = circular(5);
        let s = arc_cycle_counts(&t);
        for &(u, v, c) in &s.arcs {
            let len = (v + 5 - u) % 5;
            assert_eq!(c, if len == 1 { 1 } else { 2 }, "arc {u}->{v}");
        }
        assert_eq!(s.sum(), 15);
        assert_eq!(s.get(0, 2), Some(2));
        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(arc_cycle_counts(&c3).arcs.iter().all(|a| a.2 == 1));
        let tt = Tournament::from_fn(6, |_, _| true).unwrap();
        assert_eq!(arc_cycle_counts(&tt).sum(), 0);
    }

    #[test]
    fn profile4_known_tournaments() {
        assert_eq!(profile4_tournament(&circular(5)).unwrap().counts4, [0, 5, 0, 0]);
        let tt = Tournament::from_fn(6, |_, _| true).unwrap();
        assert_eq!(profile4_tournament(&tt).unwrap().counts4, [15, 0, 0, 0]);
        let t3 = Tournament::from_fn(3, |_, _| true).unwrap();
        assert!(profile4_tournament(&t3).is_err());
    }

    #[test]
    fn profile4_single_types() {
        // A vertex beating a cyclic triangle is W4; reversing gives L4.
        let w = Tournament::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert_eq!(profile4_tournament(&w).unwrap().counts4, [0, 0, 1, 0]);
        assert_eq!(profile4_tournament(&w.reverse()).unwrap().counts4, [0, 0, 0, 1]);
    }

    #[test]
    fn cliques() {
        assert_eq!(count_k_cliques(&complete(6), 4, DEFAULT_WORK_CAP).unwrap(), 15);
        assert_eq!(count_k_cliques(&complete(9), 6, DEFAULT_WORK_CAP).unwrap(), 84);
        assert_eq!(count_k_cliques(&petersen(), 3, DEFAULT_WORK_CAP).unwrap(), 0);
        assert_eq!(count_k_cliques(&petersen(), 2, DEFAULT_WORK_CAP).unwrap(), 15);
        assert_eq!(count_k_cliques(&complete(3), 5, DEFAULT_WORK_CAP).unwrap(), 0);
        assert!(count_k_cliques(&complete(3), 0, DEFAULT_WORK_CAP).is_err());
    }

    #[test]
    fn clique_cap_refuses() {
        let k40 = complete(40);
        let err = count_k_cliques(&k40, 12, 1000).unwrap_err();
        assert!(matches!(err, Error::Refused { .. }));
    }

    #[test]
    fn mask_below_clears_prefix() {
        let mut row = vec![!0u64, !0u64];
        mask_below(&mut row, 70);
        assert_eq!(popcount(&row), 58);
    }
}
