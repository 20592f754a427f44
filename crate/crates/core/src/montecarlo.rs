//! Uniform-subset sampling of local profiles.
//!
//! Samples are drawn in fixed chunks; chunk `c` uses a ChaCha8 generator
//! seeded with `seed` on stream `c`, so the estimate is identical for any
//! number of workers.

use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classes::{canonical_code, class_table, ClassId, MAX_SMALL_ORDER, MAX_TABLE_ORDER};
use crate::error::{input, Result};
use crate::structure::{Kind, Structure};

pub const CHUNK: u64 = 4096;

/// Two-sided 99% standard normal quantile.
pub const Z99: f64 = 2.575_829_303_548_900_4;

#[derive(Debug, Clone, PartialEq)]
pub struct ClassEstimate {
    pub class: ClassId,
    pub count: u64,
    pub density: f64,
    /// Half-width of the 99% normal-approximation interval.
    pub half_width: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileEstimate {
    pub kind: Kind,
    pub l: usize,
    pub samples: u64,
    pub seed: u64,
    /// All classes for `l <= 5`; observed classes only for larger `l`
    /// (then `index` is the rank among the observed canonical codes).
    pub classes: Vec<ClassEstimate>,
}

impl ProfileEstimate {
    pub fn get(&self, name: &str) -> Option<&ClassEstimate> {
        self.classes.iter().find(|c| c.class.name() == name)
    }
}

pub(crate) fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

pub fn profile_montecarlo<S: Structure>(obj: &S, l: usize, samples: u64, seed: u64) -> Result<ProfileEstimate> {
    let n = obj.order();
    if !(3..=MAX_SMALL_ORDER).contains(&l) {
        return input(format!("sampled profiles support orders 3..=8, got {l}"));
    }
    if n < l {
        return input(format!("{l}-profile needs at least {l} vertices, got {n}"));
    }
    if samples == 0 {
        return input("at least one sample is required");
    }
    let chunks = samples.div_ceil(CHUNK);
    let canon_counts: HashMap<u32, u64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let take = CHUNK.min(samples - c * CHUNK);
            let mut local: HashMap<u32, u64> = HashMap::new();
            let mut cache: HashMap<u32, u32> = HashMap::new();
            let mut vs = Vec::with_capacity(l);
            for _ in 0..take {
                vs.clear();
                vs.extend(rand::seq::index::sample(&mut rng, n, l));
                vs.sort_unstable();
                let code = obj.pair_code(&vs);
                let canon = *cache
                    .entry(code)
                    .or_insert_with(|| canonical_code(S::KIND, l, code));
                *local.entry(canon).or_default() += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let classes: Vec<(ClassId, u64)> = if l <= MAX_TABLE_ORDER {
        let table = class_table(S::KIND, l)?;
        table
            .classes
            .iter()
            .map(|c| (*c, canon_counts.get(&c.canon).copied().unwrap_or(0)))
            .collect()
    } else {
        let sorted: BTreeMap<u32, u64> = canon_counts.into_iter().collect();
        sorted
            .into_iter()
            .enumerate()
            .map(|(index, (canon, count))| {
                (
                    ClassId {
                        kind: S::KIND,
                        l: l as u8,
                        index,
                        canon,
                    },
                    count,
                )
            })
            .collect()
    };
    let total = samples as f64;
    let classes = classes
        .into_iter()
        .map(|(class, count)| {
            let density = count as f64 / total;
            ClassEstimate {
                class,
                count,
                density,
                half_width: Z99 * (density * (1.0 - density) / total).sqrt(),
            }
        })
        .collect();
    Ok(ProfileEstimate {
        kind: S::KIND,
        l,
        samples,
        seed,
        classes,
    })
}
