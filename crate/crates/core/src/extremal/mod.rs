//! Limit densities of clique unions and the optimisation of
//! `max(p0, p3)` subject to `p0 = p3` over them.

pub mod cases;
pub mod grid;
pub mod poly;
pub mod reference;

use std::sync::OnceLock;

pub use cases::{enumerate_cases, solve_case, CaseSolution, CaseSpec, CaseStatus, CaseTable};
pub use grid::{grid_search_min, GridResult};

use crate::clique_spec::CliqueSpec;
use crate::profile::{binomial, Profile3};
use poly::{bisect_newton, Poly, Root};

/// Limit densities `(p0, p1, p2, p3)` of the clique union described by
/// `spec`: `p3 = sum a^3`,
/// `p0 = 6 e3 + 6 beta e2 + 3 beta^2 e1 + beta^3` with `e_k` the elementary
/// symmetric functions of the clique masses, `p2 = 0`.
pub fn clique_union_densities(spec: &CliqueSpec) -> [f64; 4] {
    let a = spec.alphas();
    let b = spec.beta();
    let s1: f64 = a.iter().sum();
    let s2: f64 = a.iter().map(|x| x * x).sum();
    let s3: f64 = a.iter().map(|x| x * x * x).sum();
    let e2 = (s1 * s1 - s2) / 2.0;
    let e3 = (s1 * s1 * s1 - 3.0 * s1 * s2 + 2.0 * s3) / 6.0;
    let p0 = 6.0 * e3 + 6.0 * b * e2 + 3.0 * b * b * s1 + b * b * b;
    let p3 = s3;
    let p1 = (1.0 - p0 - p3).max(0.0);
    [p0, p1, 0.0, p3]
}

/// `theta^3 + theta^2 - theta + 1/6`.
pub fn theta_cubic() -> Poly {
    Poly(vec![1.0 / 6.0, -1.0, 1.0, 1.0])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalConstants {
    /// Largest root of the cubic.
    pub theta: f64,
    /// `6 theta^2 (1 - 2 theta)`.
    pub rho: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    /// The other positive root (rejected because it violates `a1 > a2`).
    pub second_root: f64,
}

fn compute_constants() -> ExtremalConstants {
    let f = theta_cubic();
    let big: Root = bisect_newton(&f, 0.3, 0.5).expect("cubic changes sign on [0.3, 0.5]");
    let small: Root = bisect_newton(&f, 0.2, 0.3).expect("cubic changes sign on [0.2, 0.3]");
    let theta = big.value;
    ExtremalConstants {
        theta,
        rho: 6.0 * theta * theta * (1.0 - 2.0 * theta),
        residual: big.residual,
        bracket: big.bracket,
        second_root: small.value,
    }
}

pub fn solve_cubic_theta() -> ExtremalConstants {
    static CONSTANTS: OnceLock<ExtremalConstants> = OnceLock::new();
    *CONSTANTS.get_or_init(compute_constants)
}

/// `p0 + p3 - 1/4`.
pub fn goodman_slack(p: &Profile3) -> f64 {
    p.densities[0] + p.densities[3] - 0.25
}

/// The finite-n floor `n(n-1)(n-5) / (24 C(n,3)) - 1/4` for the slack.
pub fn goodman_floor_slack(n: usize) -> f64 {
    let nf = n as f64;
    nf * (nf - 1.0) * (nf - 5.0) / (24.0 * binomial(n as u128, 3) as f64) - 0.25
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let c = solve_cubic_theta();
        assert!((c.theta - 0.427373).abs() < 1e-6);
        assert!((c.rho - 0.159181).abs() < 1e-6);
        assert!((c.second_root - 0.234643).abs() < 1e-6);
        assert!(c.residual <= 1e-12);
        assert!(c.bracket.1 - c.bracket.0 <= 1e-12);
        assert!((0.42..0.43).contains(&c.theta) && (0.159..0.16).contains(&c.rho));
    }

    #[test]
    fn densities_of_simple_specs() {
        assert_eq!(clique_union_densities(&CliqueSpec::new(&[1.0], 0.0).unwrap()), [0.0, 0.0, 0.0, 1.0]);
        let [p0, p1, p2, p3] = clique_union_densities(&CliqueSpec::new(&[0.5, 0.5], 0.0).unwrap());
        assert_eq!((p0, p2), (0.0, 0.0));
        assert!((p3 - 0.25).abs() < 1e-15 && (p1 - 0.75).abs() < 1e-15);
        let [p0, ..] = clique_union_densities(&CliqueSpec::new(&[], 1.0).unwrap());
        assert_eq!(p0, 1.0);
    }

    #[test]
    fn tight_case_balances() {
        let c = solve_cubic_theta();
        let t = c.theta;
        let spec = CliqueSpec::new(&[t, t, 1.0 - 2.0 * t], 0.0).unwrap();
        let [p0, _, _, p3] = clique_union_densities(&spec);
        assert!((p0 - c.rho).abs() < 1e-12);
        assert!((p3 - c.rho).abs() < 1e-12);
        assert!((2.0 * t.powi(3) + (1.0 - 2.0 * t).powi(3) - c.rho).abs() < 1e-12);
    }

    #[test]
    fn elementary_symmetric_against_direct_sums() {
        let a = [0.3, 0.2, 0.15, 0.1];
        let spec = CliqueSpec::new(&a, 0.25).unwrap();
        let b = 0.25;
        let mut e3 = 0.0;
        let mut e2 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += a[i] * a[j];
                for k in j + 1..4 {
                    e3 += a[i] * a[j] * a[k];
                }
            }
        }
        let direct = 6.0 * e3 + 6.0 * b * e2 + 3.0 * b * b * 0.75 + b * b * b;
        assert!((clique_union_densities(&spec)[0] - direct).abs() < 1e-15);
    }

    #[test]
    fn goodman_helpers() {
        let k = Profile3::from_counts(10, [0, 0, 0, 120]);
        assert_eq!(goodman_slack(&k), 0.75);
        assert!((goodman_floor_slack(25) - (500.0 / 2300.0 - 0.25)).abs() < 1e-15);
    }
}
