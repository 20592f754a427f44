//! Generators for the families used throughout: clique unions, the
//! extremal three-clique graph, circular and transitive tournaments,
//! seeded random graphs and tournaments, and the pentagon blow-up.
//!
//! Every generator is a pure function of its parameters (and seed).

use crate::clique_spec::CliqueSpec;
use crate::error::{input, Result};
use crate::extremal::solve_cubic_theta;
use crate::graph::Graph;
use crate::limits::check_order;
use crate::rng::{pair_bits, pair_uniform};
use crate::tournament::Tournament;

/// Largest-remainder apportionment of `n` over `weights` (summing to 1).
/// Ties in the remainder go to the lower index.
pub fn apportion(weights: &[f64], n: usize) -> Vec<usize> {
    let quotas: Vec<f64> = weights.iter().map(|w| w * n as f64).collect();
    let mut sizes: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = sizes.iter().sum();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = quotas[a] - quotas[a].floor();
        let rb = quotas[b] - quotas[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    for &i in order.iter().cycle().take(n.saturating_sub(assigned)) {
        sizes[i] += 1;
    }
    sizes
}

/// Part sizes used by [`clique_union`]: one per clique, then the number of
/// isolated vertices.
pub fn clique_union_sizes(spec: &CliqueSpec, n: usize) -> Result<Vec<usize>> {
    if n < spec.r() {
        return input(format!("{} cliques cannot be placed on {n} vertices", spec.r()));
    }
    let mut weights = spec.alphas().to_vec();
    weights.push(spec.beta());
    Ok(apportion(&weights, n))
}

/// Disjoint union of cliques of sizes `alpha_i * n` (apportioned) followed
/// by isolated vertices. Cliques occupy contiguous index ranges.
pub fn clique_union(spec: &CliqueSpec, n: usize) -> Result<Graph> {
    let sizes = clique_union_sizes(spec, n)?;
    let cliques = &sizes[..sizes.len() - 1];
    let mut block = vec![usize::MAX; n];
    let mut at = 0;
    for (b, &s) in cliques.iter().enumerate() {
        block[at..at + s].fill(b);
        at += s;
    }
    Graph::from_fn(n, |u, v| block[u] != usize::MAX && block[u] == block[v])
}

/// The spec `(theta, theta, 1 - 2 theta)` with no isolated vertices, on
/// which the 3-clique and 3-anticlique densities coincide at `rho`.
pub fn extremal_spec() -> CliqueSpec {
    let theta = solve_cubic_theta().theta;
    CliqueSpec::new(&[theta, theta, 1.0 - 2.0 * theta], 0.0).expect("valid extremal spec")
}

pub fn extremal_rho_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("extremal graph needs at least 3 vertices, got {n}"));
    }
    clique_union(&extremal_spec(), n)
}

/// Odd-order rotational tournament: `v` beats `v+1, ..., v+(n-1)/2` mod `n`.
pub fn circular_tournament(n: usize) -> Result<Tournament> {
    if n < 3 || n.is_multiple_of(2) {
        return input(format!("circular tournaments need odd n >= 3, got {n}"));
    }
    let half = (n - 1) / 2;
    Tournament::from_fn(n, |u, v| v - u <= half)
}

/// `u -> v` iff `u < v`.
pub fn transitive_tournament(n: usize) -> Result<Tournament> {
    if n == 0 {
        return input("tournament needs at least one vertex");
    }
    Tournament::from_fn(n, |_, _| true)
}

/// G(n, p): pair `{u, v}` is an edge iff its counter-based uniform is `< p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability {p} outside [0, 1]"));
    }
    if n == 0 {
        return input("graph needs at least one vertex");
    }
    Graph::from_fn(n, |u, v| pair_uniform(seed, u, v) < p)
}

/// Uniform random tournament: pair `u < v` is oriented `u -> v` iff the
/// top bit of its counter-based word is set.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 {
        return input("tournament needs at least one vertex");
    }
    Tournament::from_fn(n, |u, v| pair_bits(seed, u, v) >> 63 == 1)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::from_fn(n, |_, _| true)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("cycle needs at least 3 vertices, got {n}"));
    }
    Graph::from_fn(n, |u, v| v - u == 1 || (u == 0 && v == n - 1))
}

pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::from_fn(n, |u, v| v - u == 1)
}

pub fn petersen_graph() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &e).expect("petersen")
}

/// Complete multipartite graph with the given part sizes (contiguous).
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let part: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    Graph::from_fn(part.len(), |u, v| part[u] != part[v])
}

pub const MAX_TYOMKYN_DEPTH: u32 = 4;

/// Exact statistics of the level-`k` pentagon blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TyomkynLevel {
    pub k: u32,
    pub n: u128,
    pub edges: u128,
    pub triangles: u128,
}

impl TyomkynLevel {
    /// Level `k >= 1` by the recurrences `m_k = 5 m + 5 n^2` and
    /// `T_k = 5 T + 10 m n` over the previous level.
    pub fn new(k: u32) -> Result<TyomkynLevel> {
        if k == 0 {
            return input("blow-up depth starts at 1");
        }
        let mut level = TyomkynLevel {
            k: 1,
            n: 5,
            edges: 5,
            triangles: 0,
        };
        while level.k < k {
            level = TyomkynLevel {
                k: level.k + 1,
                n: 5 * level.n,
                edges: 5 * level.edges + 5 * level.n * level.n,
                triangles: 5 * level.triangles + 10 * level.edges * level.n,
            };
        }
        Ok(level)
    }
}

/// Level-`k` blow-up: five copies of level `k-1`, consecutive copies (mod 5)
/// joined completely; level 1 is the pentagon. Block `b` occupies
/// `[b 5^(k-1), (b+1) 5^(k-1))`.
///
/// Two vertices are adjacent iff the most significant base-5 digit where
/// they differ differs by one (mod 5).
pub fn tyomkyn_graph(k: u32) -> Result<Graph> {
    if !(1..=MAX_TYOMKYN_DEPTH).contains(&k) {
        return input(format!("blow-up depth must be in 1..={MAX_TYOMKYN_DEPTH}, got {k}"));
    }
    let n = 5usize.pow(k);
    check_order(n)?;
    Graph::from_fn(n, |u, v| {
        let mut scale = n / 5;
        loop {
            let (a, b) = (u / scale % 5, v / scale % 5);
            if a != b {
                let d = (a + 5 - b) % 5;
                return d == 1 || d == 4;
            }
            scale /= 5;
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{cyclic_triangle_count, profile3_graph, profile4_tournament, triangle_count};

    #[test]
    fn apportionment_sums_and_breaks_ties_low() {
        assert_eq!(apportion(&[0.5, 0.5], 7), vec![4, 3]);
        assert_eq!(apportion(&[1.0 / 3.0; 3], 10), vec![4, 3, 3]);
        let w = [0.3, 0.3, 0.4];
        for n in 0..50 {
            assert_eq!(apportion(&w, n).iter().sum::<usize>(), n);
        }
    }

    #[test]
    fn clique_union_extremes() {
        let k = clique_union(&CliqueSpec::new(&[1.0], 0.0).unwrap(), 10).unwrap();
        assert_eq!(profile3_graph(&k).unwrap().densities[3], 1.0);
        let e = clique_union(&CliqueSpec::new(&[], 1.0).unwrap(), 10).unwrap();
        assert_eq!(profile3_graph(&e).unwrap().densities[0], 1.0);
    }

    #[test]
    fn two_halves() {
        let g = clique_union(&CliqueSpec::new(&[0.5, 0.5], 0.0).unwrap(), 100).unwrap();
        assert_eq!(profile3_graph(&g).unwrap().counts, [0, 122_500, 0, 39_200]);
    }

    #[test]
    fn clique_union_refuses_too_many_cliques() {
        let spec = CliqueSpec::new(&[0.25; 4], 0.0).unwrap();
        assert!(clique_union(&spec, 3).is_err());
    }

    #[test]
    fn extremal_small_n() {
        let sizes = clique_union_sizes(&extremal_spec(), 3).unwrap();
        assert_eq!(sizes.iter().sum::<usize>(), 3);
        assert!(extremal_rho_graph(2).is_err());
        let g = extremal_rho_graph(3).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn circular_basics() {
        assert!(circular_tournament(6).is_err());
        let c7 = circular_tournament(7).unwrap();
        assert!(c7.out_degrees().iter().all(|&d| d == 3));
        assert_eq!(cyclic_triangle_count(&c7), (343 - 7) / 24);
        assert_eq!(profile4_tournament(&circular_tournament(5).unwrap()).unwrap().counts4, [0, 5, 0, 0]);
    }

    #[test]
    fn transitive_basics() {
        let t = transitive_tournament(4).unwrap();
        assert_eq!(profile4_tournament(&t).unwrap().counts4, [1, 0, 0, 0]);
        assert_eq!(cyclic_triangle_count(&t), 0);
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert_eq!(random_graph(30, 1.0, 5).unwrap().edge_count(), 435);
        assert_eq!(random_graph(30, 0.0, 5).unwrap().edge_count(), 0);
        assert_eq!(random_graph(50, 0.5, 1).unwrap(), random_graph(50, 0.5, 1).unwrap());
        assert_ne!(random_graph(50, 0.5, 1).unwrap(), random_graph(50, 0.5, 2).unwrap());
        assert_eq!(random_tournament(40, 3).unwrap(), random_tournament(40, 3).unwrap());
        assert!(random_tournament(40, 3).unwrap().check_invariants());
        assert!(random_graph(5, 1.5, 0).is_err());
    }

    #[test]
    fn tyomkyn_levels() {
        let g1 = tyomkyn_graph(1).unwrap();
        assert_eq!(profile3_graph(&g1).unwrap().counts, [0, 5, 5, 0]);
        let g2 = tyomkyn_graph(2).unwrap();
        assert_eq!(g2.edge_count(), 150);
        assert_eq!(profile3_graph(&g2).unwrap().counts, [250, 900, 900, 250]);
        for k in 1..=3 {
            let lvl = TyomkynLevel::new(k).unwrap();
            assert_eq!(lvl.edges, lvl.n * (lvl.n - 1) / 4);
            assert_eq!(triangle_count(&tyomkyn_graph(k).unwrap()), lvl.triangles);
        }
        assert_eq!(TyomkynLevel::new(3).unwrap().triangles, 38750);
        assert!(tyomkyn_graph(0).is_err() && tyomkyn_graph(5).is_err());
    }

    #[test]
    fn misc_families() {
        assert_eq!(cycle_graph(5).unwrap().edge_count(), 5);
        assert_eq!(path_graph(5).unwrap().edge_count(), 4);
        assert_eq!(petersen_graph().edge_count(), 15);
        assert_eq!(complete_multipartite(&[2, 3]).unwrap().edge_count(), 6);
    }
}
