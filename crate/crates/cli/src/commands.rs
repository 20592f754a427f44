//! One function per subcommand; each returns a [`Report`] whose exit code
//! reflects verification outcomes. Errors map to codes in [`CliError`].

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use locprof_core::classes::enumerate_classes;
use locprof_core::constructions as cons;
use locprof_core::enumerate::{count_by_name, profile_exhaustive, ClassCounts};
use locprof_core::extremal::reference::{check_all, Quantity, ReferenceCheck};
use locprof_core::extremal::{
    enumerate_cases, goodman_floor_slack, goodman_slack, grid_search_min, solve_cubic_theta, CaseSolution, CaseStatus,
};
use locprof_core::format::{write_graph, write_tournament, Object};
use locprof_core::inequalities::{
    all_hold, graph_identities, run_suite_graph, run_suite_tournament, tournament_identities,
    tournament_inequalities, Check, Suite,
};
use locprof_core::montecarlo::profile_montecarlo;
use locprof_core::profile::{profile3_graph, profile4_tournament};
use locprof_core::universality::{find_induced_path5, fox_trials, is_l_universal, Mode, UniversalityReport};
use locprof_core::Kind;

use crate::error::{CliError, EXIT_NOT_UNIVERSAL, EXIT_VERIFICATION};
use crate::report::{count, Report};
use crate::source::Loaded;
use crate::{Family, InputArgs, ModeArg, SuiteArg, WitnessArg};

fn load(input: &InputArgs) -> Result<Loaded, CliError> {
    let loaded = input.source()?.load()?;
    loaded.expect_kind(input.kind.map(Into::into))?;
    Ok(loaded)
}

fn start(command: &str, loaded: &Loaded) -> Report {
    let mut rep = Report::new(command);
    rep.input = loaded.input_json();
    rep.seed = loaded.seed;
    rep
}

fn exhaustive(obj: &Object, l: usize, cap: u128) -> Result<ClassCounts, CliError> {
    Ok(match obj {
        Object::Graph(g) => profile_exhaustive(g, l, cap)?,
        Object::Tournament(t) => profile_exhaustive(t, l, cap)?,
    })
}

/// Rows `(name, count)` with densities over `total`.
fn class_rows(rep: &mut Report, rows: &[(String, u128)], total: u128) -> Value {
    let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(5).max(5);
    let _ = writeln!(rep.text, "{:<width$}  {:>20}  {:>12}", "class", "count", "density");
    let mut out = Vec::new();
    for (name, c) in rows {
        let d = *c as f64 / total as f64;
        let _ = writeln!(rep.text, "{name:<width$}  {c:>20}  {d:>12.6}");
        out.push(json!({ "class": name, "count": count(*c), "density": d }));
    }
    Value::Array(out)
}

fn counts_rows(counts: &ClassCounts) -> Vec<(String, u128)> {
    counts.iter().map(|(c, &n)| (c.name(), n)).collect()
}

pub fn profile(
    input: &InputArgs,
    l: Option<usize>,
    samples: Option<u64>,
    seed: u64,
    oracle: bool,
    cap: u128,
) -> Result<Report, CliError> {
    let loaded = load(input)?;
    let mut rep = start("profile", &loaded);
    let obj = &loaded.object;
    let n = obj.order();
    let l = l.unwrap_or(match obj.kind() {
        Kind::Graph => 3,
        Kind::Tournament => 4,
    });
    rep.line(format!("{}: {} on {n} vertices, {l}-profile", loaded.description, obj.kind()));

    if let Some(samples) = samples {
        let est = match obj {
            Object::Graph(g) => profile_montecarlo(g, l, samples, seed)?,
            Object::Tournament(t) => profile_montecarlo(t, l, samples, seed)?,
        };
        rep.seed = Some(seed);
        rep.line(format!("sampled: {samples} subsets, seed {seed}, 99% half-widths"));
        let mut classes = Vec::new();
        let _ = writeln!(rep.text, "{:<8}  {:>12}  {:>12}  {:>12}", "class", "count", "density", "+/-");
        for c in &est.classes {
            let _ = writeln!(
                rep.text,
                "{:<8}  {:>12}  {:>12.6}  {:>12.6}",
                c.class.name(),
                c.count,
                c.density,
                c.half_width
            );
            classes.push(json!({
                "class": c.class.name(),
                "count": count(c.count as u128),
                "density": c.density,
                "half_width": c.half_width,
            }));
        }
        rep.results = json!({ "mode": "sampled", "l": l, "samples": samples, "classes": classes });
        return Ok(rep);
    }

    let mut results = json!({ "mode": "exact", "l": l });
    let formula: Option<Vec<(String, u128)>> = match (obj, l) {
        (Object::Graph(g), 3) => {
            let p = profile3_graph(g)?;
            let ids = graph_identities(g)?;
            results["identities_hold"] = json!(all_hold(&ids));
            results["goodman_slack"] = json!(goodman_slack(&p));
            results["goodman_floor_slack"] = json!(goodman_floor_slack(n));
            Some(["P0", "P1", "P2", "P3"].iter().map(|s| s.to_string()).zip(p.counts).collect())
        }
        (Object::Tournament(t), 3 | 4) if n >= 4 => {
            let p = profile4_tournament(t)?;
            let ids = tournament_identities(t)?;
            results["identities_hold"] = json!(all_hold(&ids));
            if l == 3 {
                Some(vec![("TT3".into(), p.counts3[0]), ("C3".into(), p.counts3[1])])
            } else {
                Some(["T4", "C4", "W4", "L4"].iter().map(|s| s.to_string()).zip(p.counts4).collect())
            }
        }
        _ => None,
    };
    let rows = match &formula {
        Some(rows) => rows.clone(),
        None => counts_rows(&exhaustive(obj, l, cap)?),
    };
    let total: u128 = rows.iter().map(|(_, c)| c).sum();
    results["classes"] = class_rows(&mut rep, &rows, total);
    if results["identities_hold"] == json!(false) {
        rep.line("identity check FAILED");
        rep.exit = EXIT_VERIFICATION;
    }
    if let (Some(s), Some(f)) = (results.get("goodman_slack"), results.get("goodman_floor_slack")) {
        rep.line(format!("p0 + p3 - 1/4 = {s} (finite-n floor {f})"));
    }
    if oracle {
        let ex = exhaustive(obj, l, cap)?;
        let agrees = rows.iter().all(|(name, c)| count_by_name(&ex, name) == *c);
        rep.line(format!("oracle (exhaustive enumeration): {}", if agrees { "agrees" } else { "MISMATCH" }));
        results["oracle_agrees"] = json!(agrees);
        if !agrees {
            rep.exit = EXIT_VERIFICATION;
        }
    }
    rep.results = results;
    Ok(rep)
}

fn status_str(s: CaseStatus) -> &'static str {
    match s {
        CaseStatus::Solved => "solved",
        CaseStatus::Infeasible => "infeasible",
        CaseStatus::LowerBound => "lower bound",
        CaseStatus::Dismissed => "dismissed",
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or("-".into(), |x| format!("{x:.6}"))
}

fn reference_for(checks: &[ReferenceCheck], q: Quantity) -> Option<&ReferenceCheck> {
    checks.iter().find(|c| c.reference.quantity == q)
}

fn case_json(row: &CaseSolution, checks: &[ReferenceCheck]) -> Value {
    let refs: Vec<Value> = [Quantity::Unknown(row.case), Quantity::Value(row.case)]
        .into_iter()
        .filter_map(|q| reference_for(checks, q))
        .map(|c| json!({ "quantity": c.reference.label(), "reference": c.reference.display_value(), "ok": c.ok }))
        .collect();
    json!({
        "case": row.case.label(),
        "status": status_str(row.status),
        "alpha1": row.alpha1,
        "x": row.x,
        "value": row.value,
        "bracket": row.bracket.map(|(a, b)| [a, b]),
        "residual": row.residual,
        "spec": row.spec.as_ref().map(|s| json!({ "alphas": s.alphas(), "beta": s.beta() })),
        "note": row.note,
        "references": refs,
    })
}

pub fn solve_extremal(cases: bool, grid: bool, r: usize, step: f64, band: f64) -> Result<Report, CliError> {
    let mut rep = Report::new("solve-extremal");
    let k = solve_cubic_theta();
    rep.line(format!("theta = {:.6}  ({:.17}, residual {:.1e})", k.theta, k.theta, k.residual));
    rep.line(format!("rho   = {:.6}  ({:.17})", k.rho, k.rho));
    let mut results = json!({
        "constants": {
            "theta": k.theta,
            "rho": k.rho,
            "residual": k.residual,
            "bracket": [k.bracket.0, k.bracket.1],
            "second_root": k.second_root,
        }
    });
    if cases {
        let table = enumerate_cases();
        let checks = check_all(&k, &table.rows);
        rep.line("");
        let _ = writeln!(
            rep.text,
            "{:<14} {:<11} {:>8} {:>10} {:>10} {:>12} {:>12}",
            "case", "status", "unknown", "computed", "reference", "value", "reference"
        );
        for row in &table.rows {
            let unknown = row.reported_unknown();
            let ref_u = reference_for(&checks, Quantity::Unknown(row.case));
            let ref_v = reference_for(&checks, Quantity::Value(row.case));
            let mark = |c: Option<&ReferenceCheck>| match c {
                Some(c) if !c.ok => format!("{} !", c.reference.display_value()),
                Some(c) => c.reference.display_value(),
                None => "-".into(),
            };
            let _ = writeln!(
                rep.text,
                "{:<14} {:<11} {:>8} {:>10} {:>10} {:>12} {:>12}",
                row.case.label(),
                status_str(row.status),
                unknown.map_or("-", |(n, _)| n),
                fmt_opt(unknown.map(|(_, u)| u)),
                mark(ref_u),
                fmt_opt(row.value),
                mark(ref_v),
            );
        }
        for c in checks.iter().filter(|c| matches!(c.reference.quantity, Quantity::Theta | Quantity::Rho | Quantity::SecondRoot | Quantity::TailRoot)) {
            rep.line(format!(
                "{:<12} computed {} reference {}{}",
                c.reference.label(),
                fmt_opt(c.computed),
                c.reference.display_value(),
                if c.ok { "" } else { "  MISMATCH" }
            ));
        }
        let failed: Vec<&ReferenceCheck> = checks.iter().filter(|c| !c.ok).collect();
        if !failed.is_empty() {
            rep.exit = EXIT_VERIFICATION;
            rep.line(format!("{} reference value(s) not reproduced", failed.len()));
        }
        let attained: Vec<String> = table.attained_by.iter().map(|c| c.label()).collect();
        rep.line(format!("min = {:.9} @ {}", table.minimum, attained.join(", ")));
        results["cases"] = Value::Array(table.rows.iter().map(|r| case_json(r, &checks)).collect());
        results["references"] = Value::Array(
            checks
                .iter()
                .map(|c| {
                    json!({
                        "quantity": c.reference.label(),
                        "reference": c.reference.display_value(),
                        "tolerance": c.reference.tolerance(),
                        "computed": c.computed,
                        "ok": c.ok,
                    })
                })
                .collect(),
        );
        results["minimum"] = json!(table.minimum);
        results["attained_by"] = json!(attained);
        results["references_ok"] = json!(failed.is_empty());
    }
    if grid {
        let res = grid_search_min(r, step, band)?;
        results["grid"] = match &res {
            Some(g) => {
                rep.line(format!(
                    "grid (r<={r}, step {step}, band {band}): min max(p0,p3) = {:.6} at alphas {:?}, beta {:.6} ({} points); rho - value = {:+.6}",
                    g.value,
                    g.spec.alphas(),
                    g.spec.beta(),
                    g.evaluated,
                    k.rho - g.value
                ));
                json!({
                    "r_max": r, "step": step, "band": band,
                    "value": g.value, "p0": g.p0, "p3": g.p3,
                    "alphas": g.spec.alphas(), "beta": g.spec.beta(),
                    "evaluated": g.evaluated,
                })
            }
            None => {
                rep.line(format!("grid (r<={r}, step {step}, band {band}): no feasible point"));
                json!({ "r_max": r, "step": step, "band": band, "value": null })
            }
        };
    }
    rep.results = results;
    Ok(rep)
}

fn checks_json(rep: &mut Report, checks: &[Check]) -> Value {
    let mut out = Vec::new();
    for c in checks {
        rep.line(format!(
            "({}) {:<40} {}  slack {:+.3e}{}",
            c.name,
            c.statement,
            if c.holds { "PASS" } else { "FAIL" },
            c.slack,
            if c.tight { "  (tight)" } else { "" }
        ));
        out.push(json!({
            "name": c.name, "statement": c.statement, "holds": c.holds, "slack": c.slack, "tight": c.tight,
        }));
    }
    Value::Array(out)
}

pub fn verify(input: &InputArgs, suite: SuiteArg) -> Result<Report, CliError> {
    let loaded = load(input)?;
    let mut rep = start("verify", &loaded);
    let suite = match suite {
        SuiteArg::Goodman => Suite::Goodman,
        SuiteArg::TournamentInequalities => Suite::TournamentInequalities,
        SuiteArg::Identities => Suite::Identities,
    };
    rep.line(format!("{}: suite {}", loaded.description, suite.as_str()));
    let checks = match &loaded.object {
        Object::Graph(g) => run_suite_graph(g, suite)?,
        Object::Tournament(t) => {
            let checks = run_suite_tournament(t, suite)?;
            if suite == Suite::TournamentInequalities {
                let p = profile4_tournament(t)?;
                rep.line(format!(
                    "t4 = {:.6}  c4 = {:.6}  w4 = {:.6}  l4 = {:.6}  c3 = {:.6}",
                    p.densities4[0], p.densities4[1], p.densities4[2], p.densities4[3], p.density_c3
                ));
                debug_assert_eq!(tournament_inequalities(&p), checks);
            }
            checks
        }
    };
    let list = checks_json(&mut rep, &checks);
    let ok = all_hold(&checks);
    if !ok {
        rep.exit = EXIT_VERIFICATION;
    }
    rep.line(if ok { "all checks pass" } else { "some checks FAIL" });
    rep.results = json!({ "suite": suite.as_str(), "checks": list, "all_hold": ok });
    Ok(rep)
}

fn universality_json(r: &UniversalityReport) -> Value {
    json!({
        "l": r.l,
        "mode": r.mode.as_str(),
        "universal": r.universal,
        "absence_certified": r.absence_certified(),
        "missing": r.missing_names(),
        "found_classes": r.found_classes,
        "total_classes": r.total_classes,
        "inspected": count(r.inspected),
        "counts": r.counts.iter().map(|(c, &n)| json!({ "class": c.name(), "count": count(n) })).collect::<Vec<_>>(),
    })
}

pub fn universal(
    input: &InputArgs,
    l: usize,
    mode: ModeArg,
    samples: u64,
    seed: u64,
    witness: Option<WitnessArg>,
    cap: u128,
) -> Result<Report, CliError> {
    let loaded = load(input)?;
    let mut rep = start("universal", &loaded);
    let mode = match mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Sampled => {
            rep.seed = Some(seed);
            Mode::Sampled { samples, seed }
        }
    };
    let mut results = json!({});
    if witness == Some(WitnessArg::P5) {
        let Object::Graph(g) = &loaded.object else {
            return Err(CliError::Input("--witness p5 needs a graph".into()));
        };
        let hit = find_induced_path5(g, cap)?;
        match hit {
            Some(p) => rep.line(format!("induced P5: {p:?}")),
            None => rep.line("no induced P5"),
        }
        results["p5_witness"] = json!(hit);
    }
    let r = match &loaded.object {
        Object::Graph(g) => is_l_universal(g, l, mode, cap)?,
        Object::Tournament(t) => is_l_universal(t, l, mode, cap)?,
    };
    let verdict = match (r.universal, r.absence_certified()) {
        (true, _) => format!("{l}-universal: all {} classes present", r.total_classes),
        (false, true) => {
            rep.exit = EXIT_NOT_UNIVERSAL;
            format!("not {l}-universal: missing {}", r.missing_names().join(", "))
        }
        (false, false) => {
            let listed = if r.missing.is_empty() { String::new() } else { format!(" (not found: {})", r.missing_names().join(", ")) };
            format!(
                "inconclusive: found {} of {} classes in {} samples{listed}; absence not certified",
                r.found_classes, r.total_classes, r.inspected
            )
        }
    };
    rep.line(format!("{} ({}): {verdict}", loaded.description, mode.as_str()));
    results["universality"] = universality_json(&r);
    rep.results = results;
    Ok(rep)
}

/// Row cap for one sweep.
pub const MAX_SWEEP_ROWS: usize = 100_000;

fn parse_range(range: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::Input(format!("--range expects start:end:step with step > 0, got `{range}`"));
    let parts: Vec<u64> = range
        .split(':')
        .map(|s| s.parse::<u64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [a, b, s] = parts[..] else { return Err(bad()) };
    if s == 0 {
        return Err(bad());
    }
    if a > b {
        return Ok(Vec::new());
    }
    let rows = (b - a) / s + 1;
    if rows > MAX_SWEEP_ROWS as u64 {
        return Err(CliError::Refused(format!("sweep of {rows} rows exceeds the cap of {MAX_SWEEP_ROWS}")));
    }
    Ok((0..rows).map(|i| a + i * s).collect())
}

const GRAPH_COLUMNS: &[(&str, &str)] = &[
    ("param", "family parameter (n, or depth k for tyomkyn)"),
    ("n", "vertices"),
    ("p0", "induced density of 3 independent vertices"),
    ("p1", "induced density of one edge plus a vertex"),
    ("p2", "induced density of the 3-vertex path"),
    ("p3", "triangle density"),
    ("goodman_slack", "p0 + p3 - 1/4"),
    ("goodman_floor_slack", "finite-n floor of goodman_slack"),
];

const TOURNAMENT_COLUMNS: &[(&str, &str)] = &[
    ("param", "family parameter (n)"),
    ("n", "vertices"),
    ("t4", "transitive 4-density"),
    ("c4", "strongly connected 4-density"),
    ("w4", "density of a vertex beating a cyclic triangle (out-degrees 3,1,1,1)"),
    ("l4", "density of a cyclic triangle beating a vertex (out-degrees 2,2,2,0)"),
    ("c3", "cyclic triangle density"),
    ("slack_a", "(a) margin, density units"),
    ("slack_b", "(b) margin"),
    ("slack_c", "(c) margin"),
    ("slack_d", "(d) margin"),
    ("slack_e", "(e) margin"),
];

pub fn sweep(family: Family, range: &str, p: f64, seed: u64, output: Option<&Path>) -> Result<Report, CliError> {
    let mut rep = Report::new("sweep");
    let values = parse_range(range)?;
    let name = match family {
        Family::Circular => "circular",
        Family::Tyomkyn => "tyomkyn",
        Family::ExtremalRho => "extremal-rho",
        Family::RandomGraph => "random-graph",
        Family::RandomTournament => "random-tournament",
    };
    if matches!(family, Family::RandomGraph | Family::RandomTournament) {
        rep.seed = Some(seed);
    }
    let columns = match family {
        Family::Circular | Family::RandomTournament => TOURNAMENT_COLUMNS,
        _ => GRAPH_COLUMNS,
    };
    let mut csv = String::new();
    let _ = writeln!(csv, "# locprof sweep {name} range={range} p={p} seed={seed}");
    for (c, d) in columns {
        let _ = writeln!(csv, "# {c}: {d}");
    }
    let header: Vec<&str> = columns.iter().map(|(c, _)| *c).collect();
    let _ = writeln!(csv, "{}", header.join(","));
    let mut rows = Vec::new();
    for &v in &values {
        let vu = usize::try_from(v).map_err(|_| CliError::Input(format!("parameter {v} too large")))?;
        let row: Vec<f64> = match family {
            Family::Circular | Family::RandomTournament => {
                let t = if family == Family::Circular {
                    cons::circular_tournament(vu)?
                } else {
                    cons::random_tournament(vu, seed)?
                };
                let pr = profile4_tournament(&t)?;
                let checks = tournament_inequalities(&pr);
                let mut r = vec![v as f64, vu as f64];
                r.extend(pr.densities4);
                r.push(pr.density_c3);
                r.extend(checks.iter().map(|c| c.slack));
                r
            }
            _ => {
                let g = match family {
                    Family::Tyomkyn => cons::tyomkyn_graph(u32::try_from(v).unwrap_or(u32::MAX))?,
                    Family::ExtremalRho => cons::extremal_rho_graph(vu)?,
                    _ => cons::random_graph(vu, p, seed)?,
                };
                let pr = profile3_graph(&g)?;
                let mut r = vec![v as f64, g.order() as f64];
                r.extend(pr.densities);
                r.push(goodman_slack(&pr));
                r.push(goodman_floor_slack(g.order()));
                r
            }
        };
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, x)| if i < 2 { format!("{}", *x as u64) } else { format!("{x}") })
            .collect();
        let _ = writeln!(csv, "{}", cells.join(","));
        rows.push(row);
    }
    match output {
        Some(path) => {
            std::fs::write(path, &csv).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            rep.line(format!("wrote {} rows to {}", rows.len(), path.display()));
        }
        None => rep.text.push_str(&csv),
    }
    rep.results = json!({ "family": name, "range": range, "columns": header, "rows": rows });
    Ok(rep)
}

pub fn fox(input: &InputArgs, k: usize, trials: u64, seed: u64, cap: u128) -> Result<Report, CliError> {
    let loaded = load(input)?;
    let mut rep = start("fox", &loaded);
    rep.seed = Some(seed);
    let Object::Graph(g) = &loaded.object else {
        return Err(CliError::Input("fox sampling needs a graph".into()));
    };
    let f = fox_trials(g, k, trials, seed, cap)?;
    let max = f.totals.iter().max().copied().unwrap_or(0);
    let zero = f.totals.iter().filter(|&&t| t == 0).count();
    rep.line(format!("k = {k}, m = {}, {trials} trial(s), seed {seed}", f.m));
    rep.line(format!("k-cliques + k-anticliques per sample: mean {}, max {max}, zero in {zero} of {trials}", f.mean));
    match f.bound {
        Some(b) => rep.line(format!("bound m^k * 2 * (p(K_k) + p(co-K_k)) = {b:e}")),
        None => rep.line("bound not computed: exact k-clique densities of the whole graph exceed the work cap"),
    }
    rep.results = json!({
        "k": k, "m": f.m, "trials": trials,
        "totals": f.totals.iter().map(|&t| count(t)).collect::<Vec<_>>(),
        "mean": f.mean, "max": count(max), "bound": f.bound,
    });
    Ok(rep)
}

pub fn generate(input: &InputArgs, matrix: bool, output: Option<&Path>) -> Result<Report, CliError> {
    let loaded = load(input)?;
    let mut rep = start("generate", &loaded);
    let text = match &loaded.object {
        Object::Graph(g) => write_graph(g),
        Object::Tournament(t) => write_tournament(t, matrix),
    };
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            rep.line(format!("wrote {} to {}", loaded.description, path.display()));
            rep.results = json!({ "output": path.display().to_string() });
        }
        None => {
            rep.text.push_str(&text);
            rep.results = json!({ "text": text });
        }
    }
    Ok(rep)
}

pub fn classes(kind: Kind, l: usize) -> Result<Report, CliError> {
    let mut rep = Report::new("classes");
    let list = enumerate_classes(kind, l)?;
    rep.line(format!("{} {kind} classes on {l} vertices", list.len()));
    let mut out = Vec::new();
    for c in &list {
        rep.line(format!("{:<8} {}", c.name(), c.canon_bits()));
        out.push(json!({ "class": c.name(), "index": c.index, "canonical_code": c.canon_bits() }));
    }
    rep.results = json!({ "kind": kind.as_str(), "l": l, "classes": out });
    Ok(rep)
}
