//! Brute-force oracle: scan descending clique masses on a lattice of the
//! simplex and keep the best `max(p0, p3)` among points with
//! `|p0 - p3| <= band`.

use rayon::prelude::*;

use crate::clique_spec::CliqueSpec;
use crate::error::{input, Result};
use crate::limits::check_work;

pub const MAX_GRID_R: usize = 4;
pub const MIN_STEP: f64 = 1e-4;
pub const MAX_STEP: f64 = 0.1;
/// Lattice points scanned before the search refuses.
pub const GRID_WORK_CAP: u128 = 2_000_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    pub value: f64,
    pub spec: CliqueSpec,
    pub p0: f64,
    pub p3: f64,
    /// Lattice points evaluated, refinement included.
    pub evaluated: u64,
}

/// `(p0, p3)` for masses `a` and isolated mass `b`.
fn p0_p3(a: &[f64], b: f64) -> (f64, f64) {
    let (mut s1, mut s2, mut s3) = (0.0, 0.0, 0.0);
    for &x in a {
        s1 += x;
        s2 += x * x;
        s3 += x * x * x;
    }
    let e2 = (s1 * s1 - s2) / 2.0;
    let e3 = (s1 * s1 * s1 - 3.0 * s1 * s2 + 2.0 * s3) / 6.0;
    (6.0 * e3 + 6.0 * b * e2 + 3.0 * b * b * s1 + b * b * b, s3)
}

#[derive(Debug, Clone)]
struct Best {
    value: f64,
    alphas: Vec<f64>,
    p0: f64,
    p3: f64,
}

/// Smaller value wins; ties go to the lexicographically smaller mass vector.
fn better(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            let ord = a
                .value
                .total_cmp(&b.value)
                .then_with(|| a.alphas.iter().map(|x| x.to_bits()).cmp(b.alphas.iter().map(|x| x.to_bits())));
            Some(if ord.is_le() { a } else { b })
        }
    }
}

struct Scan {
    best: Option<Best>,
    evaluated: u64,
}

impl Scan {
    fn offer(&mut self, alphas: &[f64], band: f64) {
        self.evaluated += 1;
        let sum: f64 = alphas.iter().sum();
        let beta = (1.0 - sum).max(0.0);
        let (p0, p3) = p0_p3(alphas, beta);
        if (p0 - p3).abs() > band {
            return;
        }
        let value = p0.max(p3);
        if let Some(b) = &self.best {
            if value > b.value {
                return;
            }
        }
        let cand = Best { value, alphas: alphas.to_vec(), p0, p3 };
        self.best = better(self.best.take(), Some(cand));
    }
}

/// Visits non-increasing unit vectors `k[depth..]` with entries in
/// `1..=cap` and total at most `budget`.
fn descend(k: &mut Vec<u64>, r: usize, cap: u64, budget: u64, f: &mut impl FnMut(&[u64])) {
    if k.len() == r {
        f(k);
        return;
    }
    for v in 1..=cap.min(budget) {
        k.push(v);
        descend(k, r, v, budget - v, f);
        k.pop();
    }
}

fn lattice_points(r: usize, units: u64) -> u128 {
    // Compositions bound the descending count from above.
    crate::profile::binomial(units as u128 + r as u128, r as u128)
}

pub fn grid_search_min(r_max: usize, step: f64, band: f64) -> Result<Option<GridResult>> {
    if !(1..=MAX_GRID_R).contains(&r_max) {
        return input(format!("r_max must be in 1..={MAX_GRID_R}, got {r_max}"));
    }
    if !(MIN_STEP..=MAX_STEP).contains(&step) {
        return input(format!("step must be in [{MIN_STEP}, {MAX_STEP}], got {step}"));
    }
    if !(band >= 0.0 && band.is_finite()) {
        return input(format!("band must be a non-negative number, got {band}"));
    }
    let units = (1.0 / step + 1e-9).floor() as u64;
    let estimate: u128 = (1..=r_max)
        .map(|r| lattice_points(r, units) / (1..=r as u128).product::<u128>())
        .sum();
    check_work(|| format!("grid search r<={r_max} step={step}"), estimate, GRID_WORK_CAP)?;

    let mut best = None;
    let mut evaluated = 0;
    for r in 1..=r_max {
        let scans: Vec<Scan> = (1..=units)
            .into_par_iter()
            .map(|a1| {
                let mut scan = Scan { best: None, evaluated: 0 };
                let mut k = vec![a1];
                let mut alphas = Vec::with_capacity(r);
                descend(&mut k, r, a1, units - a1, &mut |k| {
                    alphas.clear();
                    alphas.extend(k.iter().map(|&v| v as f64 * step));
                    scan.offer(&alphas, band);
                });
                scan
            })
            .collect();
        for s in scans {
            evaluated += s.evaluated;
            best = better(best, s.best);
        }
    }
    let Some(coarse) = best else { return Ok(None) };

    // One pass on a box of radius `step` around the incumbent at step/10.
    let fine = step / 10.0;
    let r = coarse.alphas.len();
    let centre: Vec<i64> = coarse.alphas.iter().map(|a| (a / fine).round() as i64).collect();
    let mut scan = Scan { best: Some(coarse), evaluated: 0 };
    let mut offsets = vec![-10i64; r];
    let mut alphas = vec![0.0; r];
    'outer: loop {
        let ok = centre.iter().zip(&offsets).all(|(c, o)| c + o >= 1);
        if ok {
            for i in 0..r {
                alphas[i] = (centre[i] + offsets[i]) as f64 * fine;
            }
            let sum: f64 = alphas.iter().sum();
            let sorted = alphas.windows(2).all(|w| w[0] >= w[1]);
            if sorted && sum <= 1.0 + 1e-12 {
                scan.offer(&alphas, band);
            }
        }
        for o in offsets.iter_mut() {
            if *o < 10 {
                *o += 1;
                continue 'outer;
            }
            *o = -10;
        }
        break;
    }
    evaluated += scan.evaluated;
    let b = scan.best.expect("incumbent kept");
    let beta = (1.0 - b.alphas.iter().sum::<f64>()).max(0.0);
    let spec = CliqueSpec::new(&b.alphas, beta)?;
    Ok(Some(GridResult { value: b.value, spec, p0: b.p0, p3: b.p3, evaluated }))
}
