//! Tournaments: complete orientations stored as out-neighbourhood rows.

use rayon::prelude::*;

use crate::bitset::{ones, popcount, BitMatrix};
use crate::error::{input, Result};
use crate::graph::check_selection;
use crate::limits::check_order;
use crate::structure::{Kind, Structure};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    out: BitMatrix,
    out_deg: Vec<usize>,
}

impl Tournament {
    /// Builds a tournament from its arcs; every unordered pair must appear
    /// in exactly one orientation.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Tournament> {
        check_order(n)?;
        let mut out = BitMatrix::new(n);
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if u >= n || v >= n {
                return input(format!("arc #{i} ({u},{v}): vertex out of range 0..{n}"));
            }
            if u == v {
                return input(format!("arc #{i} ({u},{v}): self-arc"));
            }
            if out.get(u, v) {
                return input(format!("arc #{i} ({u},{v}): duplicate arc"));
            }
            if out.get(v, u) {
                return input(format!("arc #{i} ({u},{v}): pair present in both orientations"));
            }
            out.set(u, v);
        }
        for u in 0..n {
            for v in u + 1..n {
                if !out.get(u, v) && !out.get(v, u) {
                    return input(format!("pair ({u},{v}) has no arc"));
                }
            }
        }
        Ok(Self::from_matrix(out))
    }

    /// For `u < v`, the arc is `u -> v` iff `forward(u, v)`. Rows are filled
    /// in parallel; `forward` must be pure.
    pub fn from_fn<F>(n: usize, forward: F) -> Result<Tournament>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        check_order(n)?;
        let mut out = BitMatrix::new(n);
        out.par_rows_mut().enumerate().for_each(|(v, row)| {
            for u in 0..n {
                let beats = match u.cmp(&v) {
                    std::cmp::Ordering::Greater => forward(v, u),
                    std::cmp::Ordering::Less => !forward(u, v),
                    std::cmp::Ordering::Equal => false,
                };
                if beats {
                    row[u / 64] |= 1 << (u % 64);
                }
            }
        });
        Ok(Self::from_matrix(out))
    }

    fn from_matrix(out: BitMatrix) -> Tournament {
        let out_deg = (0..out.order()).map(|v| out.row_count(v)).collect();
        Tournament { out, out_deg }
    }

    pub fn order(&self) -> usize {
        self.out.order()
    }

    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.out.get(u, v)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[u64] {
        self.out.row(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_deg[v]
    }

    pub fn out_degrees(&self) -> &[usize] {
        &self.out_deg
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.order() - 1 - self.out_deg[v]
    }

    pub fn out_matrix(&self) -> &BitMatrix {
        &self.out
    }

    /// Arcs `(u, v)` meaning `u -> v`, ordered by `u` then `v`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| ones(self.out.row(u)).map(move |v| (u, v)))
            .collect()
    }

    /// Every arc reversed.
    pub fn reverse(&self) -> Tournament {
        let n = self.order();
        let full = self.out.full_row();
        let mut out = BitMatrix::new(n);
        for v in 0..n {
            for (w, (&a, &f)) in out.row_mut(v).iter_mut().zip(self.out.row(v).iter().zip(&full)) {
                *w = !a & f;
            }
            out.clear(v, v);
        }
        Self::from_matrix(out)
    }

    /// Induced subtournament on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induce(&self, vs: &[usize]) -> Result<Tournament> {
        check_selection(self.order(), vs)?;
        check_order(vs.len())?;
        let mut out = BitMatrix::new(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                if i != j && self.beats(a, b) {
                    out.set(i, j);
                }
            }
        }
        Ok(Self::from_matrix(out))
    }

    /// Complete, antisymmetric, loop-free, degrees consistent.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        let pairs_ok = (0..n).all(|u| {
            !self.out.get(u, u) && (u + 1..n).all(|v| self.out.get(u, v) != self.out.get(v, u))
        });
        let degs_ok = (0..n).all(|v| popcount(self.out.row(v)) == self.out_deg[v]);
        let sum: usize = self.out_deg.iter().sum();
        pairs_ok && degs_ok && sum == n * n.saturating_sub(1) / 2
    }
}

impl Structure for Tournament {
    const KIND: Kind = Kind::Tournament;

    fn order(&self) -> usize {
        self.out.order()
    }

    fn matrix(&self) -> &BitMatrix {
        &self.out
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={}, arcs={:?})", self.order(), self.arcs())
    }
}
