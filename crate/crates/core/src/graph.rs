//! Undirected simple graphs with bitset rows.

use rayon::prelude::*;

use crate::bitset::{ones, popcount, BitMatrix};
use crate::error::{input, Result};
use crate::limits::check_order;
use crate::structure::{Kind, Structure};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            adj: BitMatrix::new(n),
            m: 0,
        })
    }

    /// Builds a graph from an undirected edge list. Duplicates and the
    /// orientation of each pair are irrelevant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return input(format!("edge #{i} ({u},{v}): vertex out of range 0..{n}"));
            }
            if u == v {
                return input(format!("edge #{i} ({u},{v}): self-loop"));
            }
            g.adj.set(u, v);
            g.adj.set(v, u);
        }
        g.m = g.adj.total_count() / 2;
        Ok(g)
    }

    /// Builds a graph whose pair `{u, v}` (with `u < v`) is an edge iff
    /// `edge(u, v)`. Rows are filled in parallel; `edge` must be pure.
    pub fn from_fn<F>(n: usize, edge: F) -> Result<Graph>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        check_order(n)?;
        let mut adj = BitMatrix::new(n);
        adj.par_rows_mut().enumerate().for_each(|(v, row)| {
            for u in 0..n {
                if u != v && edge(u.min(v), u.max(v)) {
                    row[u / 64] |= 1 << (u % 64);
                }
            }
        });
        let m = adj.total_count() / 2;
        Ok(Graph { adj, m })
    }

    pub fn order(&self) -> usize {
        self.adj.order()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u64] {
        self.adj.row(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.adj.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.order() {
            out.extend(ones(self.adj.row(u)).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let full = self.adj.full_row();
        let mut adj = BitMatrix::new(n);
        for v in 0..n {
            let row = adj.row_mut(v);
            for (w, (&a, &f)) in row.iter_mut().zip(self.adj.row(v).iter().zip(&full)) {
                *w = !a & f;
            }
            adj.clear(v, v);
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Induced subgraph on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induce(&self, vs: &[usize]) -> Result<Graph> {
        check_selection(self.order(), vs)?;
        let mut g = Graph::empty(vs.len())?;
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.adj.set(i, j);
                    g.adj.set(j, i);
                    g.m += 1;
                }
            }
        }
        Ok(g)
    }

    /// Symmetric, loop-free, cached edge count consistent.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| !self.adj.get(v, v))
            && (0..n).all(|u| ones(self.adj.row(u)).all(|v| v < n && self.adj.get(v, u)))
            && self.adj.total_count() == 2 * self.m
    }
}

pub(crate) fn check_selection(n: usize, vs: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in vs {
        if v >= n {
            return input(format!("vertex {v} out of range 0..{n}"));
        }
        if std::mem::replace(&mut seen[v], true) {
            return input(format!("vertex {v} selected twice"));
        }
    }
    Ok(())
}

impl Structure for Graph {
    const KIND: Kind = Kind::Graph;

    fn order(&self) -> usize {
        self.adj.order()
    }

    fn matrix(&self) -> &BitMatrix {
        &self.adj
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.order(), self.m, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn triangle_and_empty() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(Graph::from_edges(3, &[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn pentagon_degrees() {
        let g = pentagon();
        assert_eq!(g.edge_count(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(g.check_invariants());
    }

    #[test]
    fn duplicates_and_orientation_ignored() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_pairs() {
        let err = Graph::from_edges(3, &[(0, 1), (1, 3)]).unwrap_err();
        assert!(err.to_string().contains("edge #1 (1,3)"), "{err}");
        let err = Graph::from_edges(3, &[(2, 2)]).unwrap_err();
        assert!(err.to_string().contains("self-loop"));
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = t.complement();
        assert_eq!(c.edge_count(), 0);
        assert!(c.check_invariants());
        assert_eq!(c.complement(), t);
    }

    #[test]
    fn induce_selects_in_order() {
        let g = pentagon();
        let h = g.induce(&[0, 1, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.induce(&[0, 1, 2, 3, 4]).unwrap(), g);
        assert!(g.induce(&[0, 0]).is_err());
        assert!(g.induce(&[5]).is_err());
    }

    #[test]
    fn from_fn_matches_from_edges() {
        let g = Graph::from_fn(70, |u, v| (u * 7 + v * 3) % 5 == 0).unwrap();
        let edges: Vec<_> = (0..70)
            .flat_map(|u| (u + 1..70).map(move |v| (u, v)))
            .filter(|&(u, v)| (u * 7 + v * 3) % 5 == 0)
            .collect();
        assert_eq!(g, Graph::from_edges(70, &edges).unwrap());
        assert!(g.check_invariants());
    }
}
