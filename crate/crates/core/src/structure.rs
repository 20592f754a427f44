//! The common view of graphs and tournaments used by the enumerative code.

use crate::bitset::BitMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Graph,
    Tournament,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Tournament => "tournament",
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A binary relation on `0..order()` stored as a bit matrix: adjacency for
/// graphs, `u -> v` for tournaments.
pub trait Structure: Sync {
    const KIND: Kind;

    fn order(&self) -> usize;

    fn matrix(&self) -> &BitMatrix;

    #[inline]
    fn relation(&self, u: usize, v: usize) -> bool {
        self.matrix().get(u, v)
    }

    /// Pair code of the induced subobject on `vs` (in that order).
    ///
    /// Pairs are taken column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
    /// the first pair in the most significant position. The code of a
    /// prefix of `vs` is therefore a prefix of the code of `vs`.
    fn pair_code(&self, vs: &[usize]) -> u32 {
        let mut code = 0u32;
        for j in 1..vs.len() {
            for i in 0..j {
                code = code << 1 | self.relation(vs[i], vs[j]) as u32;
            }
        }
        code
    }
}
