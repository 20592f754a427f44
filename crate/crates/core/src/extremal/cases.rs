//! Case analysis of `min max(p0, p3)` subject to `p0 = p3` over clique
//! unions.
//!
//! Interior critical points have all clique masses equal (`r = 1, 2`;
//! `r >= 3` forces `p3 <= 1/9 < p0`). On the face `sum a = 1` the masses
//! take two values, `a1` (`s` times) and `a2` (`t` times); with
//! `x = t a2` each case reduces to one cubic `tau(x) = p3 - p0` on the
//! feasibility interval, decreasing there, so bisection is certain.

use super::poly::{bisect_newton, Poly};
use super::solve_cubic_theta;
use crate::clique_spec::CliqueSpec;
use crate::error::{input, Result};

/// Largest `t` accepted by [`solve_case`].
pub const MAX_T: u64 = 1_000_000;

/// Boundary solutions with more small cliques carry no [`CliqueSpec`].
pub const MAX_SPEC_T: u64 = 1000;

/// Bracket endpoints move this far inside the open feasibility interval.
pub const ENDPOINT_NUDGE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseSpec {
    /// One clique, isolated vertices fill the rest.
    InteriorR1,
    /// Two equal cliques plus isolated vertices.
    InteriorR2,
    /// No isolated vertices; `s` cliques of mass `a1`, `t` of mass `a2 < a1`.
    Boundary { s: u32, t: u64 },
    /// Analytic lower bound valid for every `t >= t_from`.
    TailBound { s: u32, t_from: u64 },
    /// Three or more equal cliques (interior) or `s >= 3` (boundary).
    ManyCliques,
}

impl CaseSpec {
    pub fn label(&self) -> String {
        match self {
            CaseSpec::InteriorR1 => "interior r=1".into(),
            CaseSpec::InteriorR2 => "interior r=2".into(),
            CaseSpec::Boundary { s, t } => format!("s={s},t={t}"),
            CaseSpec::TailBound { s, t_from } => format!("s={s},t>={t_from}"),
            CaseSpec::ManyCliques => "r>=3 / s>=3".into(),
        }
    }
}

impl std::fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    /// `p0 = p3` solved; `value` is the common density.
    Solved,
    /// No feasible point with `p0 = p3`.
    Infeasible,
    /// `value` bounds every solution of the case family from below.
    LowerBound,
    /// Ruled out because `p3 < p0` throughout; `value` is the lower bound on `p0`.
    Dismissed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseSolution {
    pub case: CaseSpec,
    pub status: CaseStatus,
    /// Mass of the largest clique, when solved.
    pub alpha1: Option<f64>,
    /// The boundary unknown `x = t a2` (or the evaluation point of a bound).
    pub x: Option<f64>,
    pub value: Option<f64>,
    /// Final sign-changing bracket of the solved unknown (`x` on the
    /// boundary, `a1` in the interior).
    pub bracket: Option<(f64, f64)>,
    /// Open feasibility interval of the solved unknown.
    pub interval: Option<(f64, f64)>,
    pub residual: Option<f64>,
    /// The optimal clique union, when solved (and `t <= MAX_SPEC_T`).
    pub spec: Option<CliqueSpec>,
    pub note: String,
}

impl CaseSolution {
    fn empty(case: CaseSpec, status: CaseStatus, note: impl Into<String>) -> CaseSolution {
        CaseSolution {
            case,
            status,
            alpha1: None,
            x: None,
            value: None,
            bracket: None,
            interval: None,
            residual: None,
            spec: None,
            note: note.into(),
        }
    }

    /// The unknown quoted for the case: `x` for `s = 1`, `a1` otherwise.
    pub fn reported_unknown(&self) -> Option<(&'static str, f64)> {
        match self.case {
            CaseSpec::Boundary { s: 1, .. } => self.x.map(|x| ("x", x)),
            _ => self.alpha1.map(|a| ("alpha1", a)),
        }
    }
}

fn one() -> Poly {
    Poly::constant(1.0)
}

fn c(k: f64) -> Poly {
    Poly::constant(k)
}

/// `(p3, p0)` in the interior with `r` equal cliques of mass `a`:
/// `r = 1`: `p3 = a^3`, `p0 = (1-a)^3 + 3 (1-a)^2 a`;
/// `r = 2`: `p3 = 2a^3`, `p0 = (1-2a)^3 + 3 (1-2a)^2 2a + 6 (1-2a) a^2`.
fn interior_polys(r: u32) -> (Poly, Poly) {
    let a = Poly::x();
    match r {
        1 => {
            let b = &one() - &a;
            (a.pow(3), b.pow(3) + c(3.0) * b.pow(2) * a)
        }
        2 => {
            let b = &one() - &a.scale(2.0);
            (
                a.pow(3).scale(2.0),
                b.pow(3) + c(3.0) * b.pow(2) * a.scale(2.0) + c(6.0) * b * a.pow(2),
            )
        }
        _ => unreachable!(),
    }
}

/// `(p3, p0)` on the boundary as functions of `x = t a2`:
/// `s = 1`: `p3 = (1-x)^3 + x^3/t^2`, `p0 = 3x^2 - 2x^3 - 3x^2/t + 2x^3/t^2`;
/// `s = 2`: `p3 = (1-x)^3/4 + x^3/t^2`, `p0 = 3x/2 - x^3/2 - 3x^2/t + 2x^3/t^2`.
fn boundary_polys(s: u32, t: f64) -> (Poly, Poly) {
    let x = Poly::x();
    let b = &one() - &x;
    let tail3 = x.pow(3).scale(1.0 / (t * t));
    let cross = &x.pow(2).scale(-3.0 / t) + &x.pow(3).scale(2.0 / (t * t));
    match s {
        1 => (
            b.pow(3) + tail3,
            x.pow(2).scale(3.0) - x.pow(3).scale(2.0) + cross,
        ),
        2 => (
            b.pow(3).scale(0.25) + tail3,
            x.scale(1.5) - x.pow(3).scale(0.5) + cross,
        ),
        _ => unreachable!(),
    }
}

fn boundary_interval(s: u32, t: f64) -> (f64, f64) {
    match s {
        1 => (0.0, t / (t + 1.0)),
        _ => (0.0, t / (t + 2.0)),
    }
}

fn nudged((lo, hi): (f64, f64)) -> (f64, f64) {
    (lo + ENDPOINT_NUDGE, hi - ENDPOINT_NUDGE)
}

pub fn solve_case(case: CaseSpec) -> Result<CaseSolution> {
    match case {
        CaseSpec::InteriorR1 | CaseSpec::InteriorR2 => {
            let r = if case == CaseSpec::InteriorR1 { 1 } else { 2 };
            let (p3, p0) = interior_polys(r);
            let tau = &p3 - &p0;
            let interval = (0.0, 1.0 / r as f64);
            let (lo, hi) = nudged(interval);
            let Some(root) = bisect_newton(&tau, lo, hi) else {
                return Ok(CaseSolution::empty(case, CaseStatus::Infeasible, "no sign change"));
            };
            let a = root.value;
            let spec = CliqueSpec::new(&vec![a; r as usize], 1.0 - r as f64 * a)?;
            Ok(CaseSolution {
                case,
                status: CaseStatus::Solved,
                alpha1: Some(a),
                x: None,
                value: Some(p3.eval(a)),
                bracket: Some(root.bracket),
                interval: Some(interval),
                residual: Some(root.residual),
                spec: Some(spec),
                note: String::new(),
            })
        }
        CaseSpec::Boundary { s, t } => {
            if t == 0 || t > MAX_T {
                return input(format!("t must be in 1..={MAX_T}, got {t}"));
            }
            if s == 0 {
                return input("s must be at least 1");
            }
            if s >= 3 {
                return solve_case(CaseSpec::ManyCliques);
            }
            let tf = t as f64;
            let (p3, p0) = boundary_polys(s, tf);
            let tau = &p3 - &p0;
            let interval = boundary_interval(s, tf);
            let (lo, hi) = nudged(interval);
            let Some(root) = bisect_newton(&tau, lo, hi) else {
                let note = if s == 1 && t == 1 {
                    "vacuous: p3 > p0 = 0"
                } else {
                    "tau keeps one sign on the feasibility interval"
                };
                return Ok(CaseSolution::empty(case, CaseStatus::Infeasible, note));
            };
            let x = root.value;
            let a2 = x / tf;
            let a1 = (1.0 - x) / s as f64;
            let spec = if t <= MAX_SPEC_T {
                let mut masses = vec![a1; s as usize];
                masses.extend(std::iter::repeat_n(a2, t as usize));
                Some(CliqueSpec::from_alphas(&masses)?)
            } else {
                None
            };
            Ok(CaseSolution {
                case,
                status: CaseStatus::Solved,
                alpha1: Some(a1),
                x: Some(x),
                value: Some(p3.eval(x)),
                bracket: Some(root.bracket),
                interval: Some(interval),
                residual: Some(root.residual),
                spec,
                note: String::new(),
            })
        }
        CaseSpec::TailBound { s: 1, t_from } => {
            if t_from == 0 {
                return input("t_from must be at least 1");
            }
            // tau(1/3) > 0 and tau decreasing put the root above 1/3, and p0
            // increases, so p0(root) > p0(1/3) > 7/27 - 1/(3t).
            let t = t_from as f64;
            let (p3, p0) = boundary_polys(1, t);
            let tau_third = (&p3 - &p0).eval(1.0 / 3.0);
            if tau_third <= 0.0 {
                return Err(crate::Error::Internal(format!("tau(1/3) = {tau_third} is not positive")));
            }
            let mut sol = CaseSolution::empty(
                case,
                CaseStatus::LowerBound,
                format!("p0(1/3) = {} > 7/27 - 1/(3t)", p0.eval(1.0 / 3.0)),
            );
            sol.x = Some(1.0 / 3.0);
            sol.value = Some(7.0 / 27.0 - 1.0 / (3.0 * t));
            Ok(sol)
        }
        CaseSpec::TailBound { s: 2, t_from } => {
            if t_from == 0 {
                return input("t_from must be at least 1");
            }
            // x0 solves tau without its 1/t terms; tau(x0) > 0 puts the true
            // root above x0, where p0 is larger. p0(x0) increases with t.
            let x = Poly::x();
            let tau_inf = c(0.25) - x.scale(2.25) + x.pow(2).scale(0.75) + x.pow(3).scale(0.25);
            let root = bisect_newton(&tau_inf, 0.0, 1.0)
                .ok_or_else(|| crate::Error::Internal("tau_inf has no root in [0, 1]".into()))?;
            let x0 = root.value;
            let t = t_from as f64;
            let (p3, p0) = boundary_polys(2, t);
            let tau_x0 = (&p3 - &p0).eval(x0);
            if tau_x0 <= 0.0 || x0 >= boundary_interval(2, t).1 {
                return Err(crate::Error::Internal(format!("x0 = {x0} does not bound the root")));
            }
            let mut sol = CaseSolution::empty(case, CaseStatus::LowerBound, format!("x0 = {x0}"));
            sol.x = Some(x0);
            sol.value = Some(p0.eval(x0));
            sol.bracket = Some(root.bracket);
            sol.residual = Some(root.residual);
            Ok(sol)
        }
        CaseSpec::TailBound { s, .. } => {
            if s >= 3 {
                solve_case(CaseSpec::ManyCliques)
            } else {
                input("s must be at least 1")
            }
        }
        CaseSpec::ManyCliques => {
            // Equal masses a <= 1/3 give p3 = sum a^3 <= 1/9; Goodman gives
            // p0 >= 1/4 - p3.
            let p3_max = 1.0 / 9.0;
            let p0_min = 0.25 - p3_max;
            let mut sol = CaseSolution::empty(
                case,
                CaseStatus::Dismissed,
                format!("p3 <= {p3_max:.6} < {p0_min:.6} <= p0"),
            );
            sol.value = Some(p0_min);
            Ok(sol)
        }
    }
}

/// The full case table and its minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseTable {
    pub rows: Vec<CaseSolution>,
    pub minimum: f64,
    pub argmin: CaseSpec,
    /// Rows whose value is within `1e-9` of the minimum.
    pub attained_by: Vec<CaseSpec>,
}

pub fn case_list() -> Vec<CaseSpec> {
    let mut cases = vec![CaseSpec::InteriorR1, CaseSpec::InteriorR2];
    for s in 1..=2 {
        for t in 1..=3 {
            cases.push(CaseSpec::Boundary { s, t });
        }
    }
    cases.push(CaseSpec::TailBound { s: 1, t_from: 4 });
    cases.push(CaseSpec::TailBound { s: 2, t_from: 3 });
    cases.push(CaseSpec::ManyCliques);
    cases
}

pub fn enumerate_cases() -> CaseTable {
    let rows: Vec<CaseSolution> = case_list()
        .into_iter()
        .map(|c| solve_case(c).expect("built-in cases are valid"))
        .collect();
    let candidates = rows
        .iter()
        .filter(|r| matches!(r.status, CaseStatus::Solved | CaseStatus::LowerBound));
    let (argmin, minimum) = candidates
        .clone()
        .map(|r| (r.case, r.value.unwrap()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one feasible case");
    let attained_by = candidates
        .filter(|r| (r.value.unwrap() - minimum).abs() <= 1e-9)
        .map(|r| r.case)
        .collect();
    debug_assert!((minimum - solve_cubic_theta().rho).abs() < 1e-9);
    CaseTable {
        rows,
        minimum,
        argmin,
        attained_by,
    }
}
