//! Reference oracle: classify every `l`-subset.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::classes::{class_table, ClassId, ClassTable};
use crate::error::{input, Result};
use crate::limits::check_work;
use crate::profile::binomial;
use crate::structure::Structure;

/// Count per isomorphism class; every class of the order is present.
pub type ClassCounts = BTreeMap<ClassId, u128>;

pub fn profile_exhaustive<S: Structure>(obj: &S, l: usize, cap: u128) -> Result<ClassCounts> {
    let n = obj.order();
    let table = class_table(S::KIND, l)?;
    if n < l {
        return input(format!("{l}-profile needs at least {l} vertices, got {n}"));
    }
    let subsets = binomial(n as u128, l as u128);
    check_work(
        || format!("exhaustive {l}-profile on {n} vertices ({subsets} subsets)"),
        subsets,
        cap,
    )?;
    let classes = table.classes.len();
    let counts = (0..=n - l)
        .into_par_iter()
        .map(|first| {
            let mut local = vec![0u128; classes];
            let mut vs = [first; 8];
            walk(obj, table, &mut vs, 1, first + 1, 0, &mut local);
            local
        })
        .reduce(
            || vec![0u128; classes],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(table.classes.iter().copied().zip(counts).collect())
}

fn walk<S: Structure>(
    obj: &S,
    table: &ClassTable,
    vs: &mut [usize; 8],
    depth: usize,
    start: usize,
    code: u32,
    counts: &mut [u128],
) {
    let n = obj.order();
    let l = table.l;
    for v in start..=n - (l - depth) {
        let mut next = code;
        for &u in &vs[..depth] {
            next = next << 1 | obj.relation(u, v) as u32;
        }
        if depth + 1 == l {
            counts[table.index_of(next)] += 1;
        } else {
            vs[depth] = v;
            walk(obj, table, vs, depth + 1, v + 1, next, counts);
        }
    }
}

/// Count of the class with `name` (e.g. `"W4"`), zero if absent.
pub fn count_by_name(counts: &ClassCounts, name: &str) -> u128 {
    counts
        .iter()
        .find(|(c, _)| c.name() == name)
        .map_or(0, |(_, &n)| n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::limits::DEFAULT_WORK_CAP;
    use crate::profile::{profile3_graph, profile4_tournament};
    use crate::tournament::Tournament;
    use crate::Error;

    #[test]
    fn pentagon_matches_formula() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let ex = profile_exhaustive(&c5, 3, DEFAULT_WORK_CAP).unwrap();
        let counts: Vec<u128> = ex.values().copied().collect();
        assert_eq!(counts, profile3_graph(&c5).unwrap().counts);
    }

    #[test]
    fn circular_nine_has_no_w4_or_l4() {
        let t = Tournament::from_fn(9, |u, v| v - u <= 4).unwrap();
        let ex = profile_exhaustive(&t, 4, DEFAULT_WORK_CAP).unwrap();
        assert_eq!(count_by_name(&ex, "W4"), 0);
        assert_eq!(count_by_name(&ex, "L4"), 0);
        let p = profile4_tournament(&t).unwrap();
        assert_eq!(count_by_name(&ex, "T4"), p.t4());
        assert_eq!(count_by_name(&ex, "C4"), p.c4());
    }

    #[test]
    fn preconditions() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(profile_exhaustive(&g, 3, DEFAULT_WORK_CAP), Err(Error::Input(_))));
        let big = Graph::empty(60).unwrap();
        assert!(matches!(profile_exhaustive(&big, 5, 1000), Err(Error::Refused { .. })));
    }

    #[test]
    fn totals() {
        let g = Graph::from_fn(12, |u, v| (u ^ v) % 3 == 1).unwrap();
        for l in 3..=5 {
            let ex = profile_exhaustive(&g, l, DEFAULT_WORK_CAP).unwrap();
            assert_eq!(ex.values().sum::<u128>(), binomial(12, l as u128));
        }
    }
}
