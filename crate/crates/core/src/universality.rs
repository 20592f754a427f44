//! Universality checks, induced 5-vertex paths, transitive
//! subtournaments, and the random-subset sampling step for cliques.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::bitset::{ones, popcount};
use crate::classes::{class_count, enumerate_classes, ClassId, MAX_SMALL_ORDER, MAX_TABLE_ORDER};
use crate::enumerate::profile_exhaustive;
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::montecarlo::{chunk_rng, profile_montecarlo};
use crate::profile::{binomial, count_k_cliques, profile3_graph};
use crate::structure::{Kind, Structure};
use crate::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled { .. } => "sampled",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniversalityReport {
    pub kind: Kind,
    pub l: usize,
    pub n: usize,
    pub mode: Mode,
    /// Every class was observed.
    pub universal: bool,
    /// Classes with zero count. Exhaustive: proven absent. Sampled: not
    /// found. Empty for sampled `l > 5`, where unseen classes have no id.
    pub missing: Vec<ClassId>,
    pub found_classes: usize,
    pub total_classes: usize,
    pub counts: BTreeMap<ClassId, u128>,
    /// Subsets classified: `C(n, l)` or the sample count.
    pub inspected: u128,
}

impl UniversalityReport {
    /// Absence of the missing classes is a proof, not a sampling outcome.
    pub fn absence_certified(&self) -> bool {
        self.mode == Mode::Exhaustive
    }

    /// Known to lack some class.
    pub fn certainly_not_universal(&self) -> bool {
        self.absence_certified() && !self.universal
    }

    pub fn missing_names(&self) -> Vec<String> {
        self.missing.iter().map(|c| c.name()).collect()
    }
}

pub fn is_l_universal<S: Structure>(obj: &S, l: usize, mode: Mode, cap: u128) -> Result<UniversalityReport> {
    let n = obj.order();
    if n < l {
        return input(format!("{l}-universality needs at least {l} vertices, got {n}"));
    }
    let total_classes = class_count(S::KIND, l.min(MAX_SMALL_ORDER));
    let (counts, inspected): (BTreeMap<ClassId, u128>, u128) = match mode {
        Mode::Exhaustive => {
            if !(3..=MAX_TABLE_ORDER).contains(&l) {
                return input(format!("exhaustive universality supports orders 3..=5, got {l}"));
            }
            let counts = profile_exhaustive(obj, l, cap).map_err(|e| match e {
                Error::Refused { what, estimate, cap } => Error::Refused {
                    what: format!("{what}; sampled mode avoids the cap"),
                    estimate,
                    cap,
                },
                e => e,
            })?;
            (counts, binomial(n as u128, l as u128))
        }
        Mode::Sampled { samples, seed } => {
            let est = profile_montecarlo(obj, l, samples, seed)?;
            let counts = est.classes.iter().map(|c| (c.class, c.count as u128)).collect();
            (counts, samples as u128)
        }
    };
    let missing: Vec<ClassId> = counts.iter().filter(|(_, &c)| c == 0).map(|(id, _)| *id).collect();
    let found_classes = counts.values().filter(|&&c| c > 0).count();
    debug_assert!(l > MAX_TABLE_ORDER || enumerate_classes(S::KIND, l).is_ok_and(|c| c.len() == counts.len()));
    Ok(UniversalityReport {
        kind: S::KIND,
        l,
        n,
        mode,
        universal: found_classes == total_classes,
        missing,
        found_classes,
        total_classes,
        counts,
        inspected,
    })
}

/// Some induced path `x1 - x2 - x3 - x4 - x5`, the lexicographically least
/// such tuple, or `None` if the graph is P5-free.
///
/// Refuses when the predicted or the actual number of row operations
/// exceeds `cap`; the prediction is the number of ordered induced 3-paths
/// times the row length.
pub fn find_induced_path5(g: &Graph, cap: u128) -> Result<Option<[usize; 5]>> {
    let n = g.order();
    if n < 5 {
        return input(format!("induced P5 search needs at least 5 vertices, got {n}"));
    }
    let words = g.adjacency().words() as u128;
    let p3 = profile3_graph(g)?.counts[2];
    let estimate = 2 * p3 * words + n as u128;
    crate::limits::check_work(|| format!("induced P5 search on {n} vertices"), estimate, cap)?;

    let limit = cap.min(u64::MAX as u128) as u64;
    let used = AtomicU64::new(0);
    let found: Option<std::result::Result<[usize; 5], ()>> = (0..n).into_par_iter().find_map_first(|x1| {
        let mut path = [x1; 5];
        let mut blocked = vec![0u64; words as usize];
        match extend_path(g, &mut path, 1, &mut blocked, &used, limit) {
            Ok(true) => Some(Ok(path)),
            Ok(false) => None,
            Err(()) => Some(Err(())),
        }
    });
    match found {
        None => Ok(None),
        Some(Ok(p)) => Ok(Some(p)),
        Some(Err(())) => Err(Error::Refused {
            what: format!("induced P5 search on {n} vertices (run-time node cap)"),
            estimate: used.load(Ordering::Relaxed) as u128,
            cap,
        }),
    }
}

/// `blocked` holds the closed neighbourhoods of `path[..len - 1]`; the next
/// vertex must be a neighbour of `path[len - 1]` outside it.
fn extend_path(
    g: &Graph,
    path: &mut [usize; 5],
    len: usize,
    blocked: &mut [u64],
    used: &AtomicU64,
    limit: u64,
) -> std::result::Result<bool, ()> {
    if len == 5 {
        return Ok(true);
    }
    if used.fetch_add(blocked.len() as u64, Ordering::Relaxed) > limit {
        return Err(());
    }
    let last = path[len - 1];
    let cand: Vec<u64> = g
        .neighbors(last)
        .iter()
        .zip(blocked.iter())
        .map(|(a, b)| a & !b)
        .collect();
    if popcount(&cand) == 0 {
        return Ok(false);
    }
    let saved = blocked.to_vec();
    for (b, a) in blocked.iter_mut().zip(g.neighbors(last)) {
        *b |= a;
    }
    blocked[last / 64] |= 1 << (last % 64);
    for v in ones(&cand) {
        path[len] = v;
        if extend_path(g, path, len + 1, blocked, used, limit)? {
            return Ok(true);
        }
    }
    blocked.copy_from_slice(&saved);
    Ok(false)
}

/// Largest tournament order accepted by [`max_transitive`].
pub const MAX_TRANSITIVE_ORDER: usize = 24;

/// Order of the largest transitive subtournament.
///
/// A transitive set has a unique source `v` and the rest lies in the out-
/// neighbourhood of `v`, so `tr(S) = 1 + max_v tr(S & out(v))`; branches
/// that cannot beat the incumbent are cut.
pub fn max_transitive(t: &Tournament) -> Result<usize> {
    let n = t.order();
    if n > MAX_TRANSITIVE_ORDER {
        return Err(Error::Refused {
            what: format!("max transitive subtournament on {n} vertices (limit {MAX_TRANSITIVE_ORDER})"),
            estimate: n as u128,
            cap: MAX_TRANSITIVE_ORDER as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let out: Vec<u32> = (0..n).map(|v| t.out_neighbors(v)[0] as u32).collect();
    let mut best = 0;
    grow(&out, (1u32 << n) - 1, 0, &mut best);
    Ok(best)
}

fn grow(out: &[u32], set: u32, depth: usize, best: &mut usize) {
    if set == 0 {
        *best = (*best).max(depth);
        return;
    }
    let mut order: Vec<(u32, usize)> = Vec::with_capacity(set.count_ones() as usize);
    let mut s = set;
    while s != 0 {
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        order.push(((set & out[v]).count_ones(), v));
    }
    order.sort_unstable_by(|a, b| b.cmp(a));
    for (size, v) in order {
        if depth + 1 + size as usize <= *best {
            break;
        }
        grow(out, set & out[v], depth + 1, best);
    }
}

/// One random induced subgraph on `m = ceil(2^(k/4))` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxSample {
    pub k: usize,
    pub m: usize,
    /// Sorted sample.
    pub vertices: Vec<usize>,
    pub cliques: u128,
    pub anticliques: u128,
}

pub fn fox_m(k: usize) -> usize {
    2f64.powf(k as f64 / 4.0).ceil() as usize
}

fn fox_draw(g: &Graph, k: usize, rng: &mut impl rand::Rng, cap: u128) -> Result<FoxSample> {
    let n = g.order();
    let m = fox_m(k);
    let mut vertices: Vec<usize> = rand::seq::index::sample(rng, n, m).into_vec();
    vertices.sort_unstable();
    let h = g.induce(&vertices)?;
    let cliques = count_k_cliques(&h, k, cap)?;
    let anticliques = count_k_cliques(&h.complement(), k, cap)?;
    Ok(FoxSample { k, m, vertices, cliques, anticliques })
}

fn fox_check(g: &Graph, k: usize) -> Result<()> {
    if k < 4 {
        return input(format!("k must be at least 4, got {k}"));
    }
    let m = fox_m(k);
    if m > g.order() {
        return input(format!("sample size m = {m} exceeds n = {}", g.order()));
    }
    Ok(())
}

pub fn fox_sample(g: &Graph, k: usize, seed: u64, cap: u128) -> Result<FoxSample> {
    fox_check(g, k)?;
    fox_draw(g, k, &mut chunk_rng(seed, 0), cap)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoxTrials {
    pub k: usize,
    pub m: usize,
    pub trials: u64,
    /// `cliques + anticliques` per trial.
    pub totals: Vec<u128>,
    pub mean: f64,
    /// `m^k * 2 * (p(K_k) + p(complement K_k))`, when the densities are
    /// computable within the cap.
    pub bound: Option<f64>,
}

/// Trial `i` draws from stream `i` of `seed`; trial 0 equals
/// [`fox_sample`].
pub fn fox_trials(g: &Graph, k: usize, trials: u64, seed: u64, cap: u128) -> Result<FoxTrials> {
    fox_check(g, k)?;
    if trials == 0 {
        return input("at least one trial is required");
    }
    let samples: Vec<FoxSample> = (0..trials)
        .into_par_iter()
        .map(|i| fox_draw(g, k, &mut chunk_rng(seed, i), cap))
        .collect::<Result<_>>()?;
    let totals: Vec<u128> = samples.iter().map(|s| s.cliques + s.anticliques).collect();
    let mean = totals.iter().map(|&t| t as f64).sum::<f64>() / trials as f64;
    let m = fox_m(k);
    let n = g.order();
    let bound = match (count_k_cliques(g, k, cap), count_k_cliques(&g.complement(), k, cap)) {
        (Ok(a), Ok(b)) => {
            let total = binomial(n as u128, k as u128) as f64;
            Some((m as f64).powi(k as i32) * 2.0 * (a as f64 + b as f64) / total)
        }
        (Err(Error::Refused { .. }), _) | (_, Err(Error::Refused { .. })) => None,
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok(FoxTrials { k, m, trials, totals, mean, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::limits::DEFAULT_WORK_CAP;

    fn brute_p5(g: &Graph) -> Option<[usize; 5]> {
        let n = g.order();
        let mut best: Option<[usize; 5]> = None;
        let mut p = [0usize; 5];
        fn go(g: &Graph, p: &mut [usize; 5], len: usize, best: &mut Option<[usize; 5]>) {
            if len == 5 {
                let ok = (0..5).all(|i| (i + 1..5).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)));
                if ok && best.is_none_or(|b| *p < b) {
                    *best = Some(*p);
                }
                return;
            }
            for v in 0..g.order() {
                if !p[..len].contains(&v) {
                    p[len] = v;
                    go(g, p, len + 1, best);
                }
            }
        }
        if n >= 5 {
            go(g, &mut p, 0, &mut best);
        }
        best
    }

    #[test]
    fn path_finds_itself() {
        let g = path_graph(5).unwrap();
        assert_eq!(find_induced_path5(&g, DEFAULT_WORK_CAP).unwrap(), Some([0, 1, 2, 3, 4]));
        assert_eq!(find_induced_path5(&complete_graph(10).unwrap(), DEFAULT_WORK_CAP).unwrap(), None);
        assert!(find_induced_path5(&path_graph(4).unwrap(), DEFAULT_WORK_CAP).is_err());
    }

    #[test]
    fn p5_matches_brute_force() {
        for seed in 0..40 {
            let n = 5 + (seed as usize % 4);
            let g = random_graph(n, 0.45, seed).unwrap();
            assert_eq!(find_induced_path5(&g, DEFAULT_WORK_CAP).unwrap(), brute_p5(&g), "seed {seed}");
        }
        let g = cycle_graph(7).unwrap();
        assert_eq!(find_induced_path5(&g, DEFAULT_WORK_CAP).unwrap(), brute_p5(&g));
    }

    #[test]
    fn p5_refusal() {
        let g = random_graph(60, 0.5, 1).unwrap();
        assert!(matches!(find_induced_path5(&g, 10), Err(Error::Refused { .. })));
    }

    fn brute_transitive(t: &Tournament) -> usize {
        let n = t.order();
        (0u32..1 << n)
            .filter(|&s| {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                let mut d: Vec<usize> = vs
                    .iter()
                    .map(|&u| vs.iter().filter(|&&v| t.beats(u, v)).count())
                    .collect();
                d.sort_unstable();
                d.iter().enumerate().all(|(i, &x)| i == x)
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn transitive_examples() {
        assert_eq!(max_transitive(&transitive_tournament(10).unwrap()).unwrap(), 10);
        assert_eq!(max_transitive(&circular_tournament(3).unwrap()).unwrap(), 2);
        assert_eq!(max_transitive(&circular_tournament(7).unwrap()).unwrap(), 4);
        assert!(max_transitive(&random_tournament(25, 0).unwrap()).is_err());
    }

    #[test]
    fn transitive_matches_brute_force() {
        for seed in 0..30 {
            let n = 1 + seed as usize % 10;
            let t = random_tournament(n, seed).unwrap();
            assert_eq!(max_transitive(&t).unwrap(), brute_transitive(&t), "seed {seed}");
        }
    }

    #[test]
    fn transitive_log_bound() {
        for seed in 0..5 {
            let t = random_tournament(24, seed).unwrap();
            let tr = max_transitive(&t).unwrap();
            assert!(tr > (24f64).log2().floor() as usize, "seed {seed}: {tr}");
        }
    }

    #[test]
    fn fox_examples() {
        let s = fox_sample(&complete_graph(10).unwrap(), 4, 0, DEFAULT_WORK_CAP).unwrap();
        assert_eq!((s.m, s.cliques, s.anticliques), (2, 0, 0));
        assert_eq!(fox_m(16), 16);
        let g = random_graph(200, 0.5, 0).unwrap();
        let a = fox_sample(&g, 16, 3, DEFAULT_WORK_CAP).unwrap();
        let b = fox_sample(&g, 16, 3, DEFAULT_WORK_CAP).unwrap();
        assert_eq!(a, b);
        assert!(fox_sample(&complete_graph(10).unwrap(), 3, 0, DEFAULT_WORK_CAP).is_err());
        assert!(fox_sample(&complete_graph(10).unwrap(), 20, 0, DEFAULT_WORK_CAP).is_err());
        let t = fox_trials(&g, 16, 4, 3, DEFAULT_WORK_CAP).unwrap();
        assert_eq!(t.totals[0], a.cliques + a.anticliques);
    }

    #[test]
    fn universality_examples() {
        let pentagon = cycle_graph(5).unwrap();
        let r = is_l_universal(&pentagon, 3, Mode::Exhaustive, DEFAULT_WORK_CAP).unwrap();
        assert!(r.certainly_not_universal());
        assert_eq!(r.missing_names(), vec!["P0", "P3"]);
        let c = circular_tournament(13).unwrap();
        let r = is_l_universal(&c, 4, Mode::Exhaustive, DEFAULT_WORK_CAP).unwrap();
        let mut names = r.missing_names();
        names.sort();
        assert_eq!(names, vec!["L4", "W4"]);
        assert_eq!(r.counts.values().sum::<u128>(), r.inspected);
    }

    #[test]
    fn sampled_never_certifies() {
        let pentagon = cycle_graph(5).unwrap();
        let r = is_l_universal(&pentagon, 3, Mode::Sampled { samples: 1000, seed: 1 }, DEFAULT_WORK_CAP).unwrap();
        assert!(!r.universal && !r.certainly_not_universal());
        let g = random_graph(40, 0.5, 2).unwrap();
        let r = is_l_universal(&g, 6, Mode::Sampled { samples: 5000, seed: 1 }, DEFAULT_WORK_CAP).unwrap();
        assert_eq!(r.total_classes, 156);
        assert_eq!(r.counts.values().sum::<u128>(), 5000);
    }

    #[test]
    fn exhaustive_refusal_suggests_sampling() {
        let g = random_graph(200, 0.5, 0).unwrap();
        match is_l_universal(&g, 5, Mode::Exhaustive, 1000) {
            Err(Error::Refused { what, .. }) => assert!(what.contains("sampled")),
            other => panic!("{other:?}"),
        }
    }
}
