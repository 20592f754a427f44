//! Isomorphism classes of small graphs and tournaments.
//!
//! A labelled object on `l <= 8` vertices is encoded by its pair code (see
//! [`Structure::pair_code`]): one bit per pair `i < j`, pairs taken column
//! by column, first pair most significant. For graphs the bit is adjacency,
//! for tournaments it is `i -> j`. The canonical code of a class is the
//! minimum pair code over relabellings; for `l <= 5` the minimum runs over
//! all `l!` permutations, for larger `l` over permutations that respect a
//! colour-refinement partition (still an isomorphism invariant).

use std::sync::OnceLock;

use crate::error::{input, Result};
use crate::structure::{Kind, Structure};

pub const MAX_TABLE_ORDER: usize = 5;
pub const MAX_SMALL_ORDER: usize = 8;

/// Number of isomorphism classes on `l` vertices, `l = 0..=8`.
pub const GRAPH_CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
pub const TOURNAMENT_CLASS_COUNTS: [usize; 9] = [1, 1, 1, 2, 4, 12, 56, 456, 6880];

pub fn class_count(kind: Kind, l: usize) -> usize {
    match kind {
        Kind::Graph => GRAPH_CLASS_COUNTS[l],
        Kind::Tournament => TOURNAMENT_CLASS_COUNTS[l],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    pub kind: Kind,
    pub l: u8,
    /// Position in the class list of `(kind, l)` sorted by canonical code.
    pub index: usize,
    pub canon: u32,
}

impl ClassId {
    /// Canonical code as a bit string, first pair first.
    pub fn canon_bits(&self) -> String {
        let p = pair_count(self.l as usize);
        (0..p)
            .map(|i| if self.canon >> (p - 1 - i) & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Short human name: `P0..P3` for 3-vertex graphs, `TT3`/`C3` and
    /// `T4`/`C4`/`W4`/`L4` for tournaments, `G<l>#<index>`/`T<l>#<index>`
    /// otherwise.
    pub fn name(&self) -> String {
        let l = self.l as usize;
        let rows = decode(self.kind, l, self.canon);
        let mut degs: Vec<u32> = rows[..l].iter().map(|r| r.count_ones()).collect();
        degs.sort_unstable();
        match (self.kind, l) {
            (Kind::Graph, 3) => format!("P{}", degs.iter().sum::<u32>() / 2),
            (Kind::Tournament, 3) if degs == [1, 1, 1] => "C3".into(),
            (Kind::Tournament, 3) => "TT3".into(),
            (Kind::Tournament, 4) => match degs.as_slice() {
                [0, 1, 2, 3] => "T4",
                [1, 1, 2, 2] => "C4",
                [1, 1, 1, 3] => "W4",
                [0, 2, 2, 2] => "L4",
                _ => unreachable!("not a 4-vertex tournament"),
            }
            .into(),
            (Kind::Graph, _) => format!("G{l}#{}", self.index),
            (Kind::Tournament, _) => format!("T{l}#{}", self.index),
        }
    }
}

impl std::fmt::Display for ClassId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn pair_count(l: usize) -> usize {
    l * l.saturating_sub(1) / 2
}

/// Out-rows (adjacency rows for graphs) of the labelled object with `code`.
pub fn decode(kind: Kind, l: usize, code: u32) -> [u8; MAX_SMALL_ORDER] {
    let p = pair_count(l);
    let mut rows = [0u8; MAX_SMALL_ORDER];
    let mut pos = 0;
    for j in 1..l {
        for i in 0..j {
            let bit = code >> (p - 1 - pos) & 1 == 1;
            pos += 1;
            match (kind, bit) {
                (Kind::Graph, true) => {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                (Kind::Graph, false) => {}
                (Kind::Tournament, true) => rows[i] |= 1 << j,
                (Kind::Tournament, false) => rows[j] |= 1 << i,
            }
        }
    }
    rows
}

/// Minimum pair code over relabellings that place the vertices of
/// `cells[0]` first, then `cells[1]`, and so on.
fn min_code(rows: &[u8; MAX_SMALL_ORDER], l: usize, cells: &[Vec<usize>]) -> u32 {
    let p = pair_count(l);
    let slots: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();

    struct Search<'a> {
        rows: &'a [u8; MAX_SMALL_ORDER],
        l: usize,
        p: usize,
        cells: &'a [Vec<usize>],
        slots: &'a [usize],
        placed: [usize; MAX_SMALL_ORDER],
        used: u8,
        best: u32,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize, code: u32) {
            if pos == self.l {
                self.best = self.best.min(code);
                return;
            }
            for k in 0..self.cells[self.slots[pos]].len() {
                let v = self.cells[self.slots[pos]][k];
                if self.used >> v & 1 == 1 {
                    continue;
                }
                let mut next = code;
                for i in 0..pos {
                    next = next << 1 | (self.rows[self.placed[i]] >> v & 1) as u32;
                }
                let bits = pair_count(pos + 1);
                if next > self.best >> (self.p - bits) {
                    continue;
                }
                self.placed[pos] = v;
                self.used |= 1 << v;
                self.go(pos + 1, next);
                self.used &= !(1 << v);
            }
        }
    }

    let mut s = Search {
        rows,
        l,
        p,
        cells,
        slots: &slots,
        placed: [0; MAX_SMALL_ORDER],
        used: 0,
        best: u32::MAX >> (32 - p.max(1)),
    };
    s.go(0, 0);
    s.best
}

/// Colour refinement started from (out-)degrees; returns cells in
/// canonical colour order.
fn refine(kind: Kind, l: usize, rows: &[u8; MAX_SMALL_ORDER]) -> Vec<Vec<usize>> {
    let mut colour: Vec<usize> = rows[..l].iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..l)
            .map(|v| {
                let mut out: Vec<usize> = (0..l).filter(|&u| rows[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                out.sort_unstable();
                let mut inn: Vec<usize> = match kind {
                    Kind::Graph => Vec::new(),
                    Kind::Tournament => (0..l).filter(|&u| rows[u] >> v & 1 == 1).map(|u| colour[u]).collect(),
                };
                inn.sort_unstable();
                (colour[v], out, inn)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].push(v);
    }
    cells
}

/// Canonical code of the labelled object `code` on `l <= 8` vertices.
pub fn canonical_code(kind: Kind, l: usize, code: u32) -> u32 {
    assert!(l <= MAX_SMALL_ORDER, "order {l} too large for small canonical forms");
    if l < 2 {
        return 0;
    }
    let rows = decode(kind, l, code);
    if l <= MAX_TABLE_ORDER {
        min_code(&rows, l, &[(0..l).collect()])
    } else {
        min_code(&rows, l, &refine(kind, l, &rows))
    }
}

/// Every labelled object of one `(kind, l)` mapped to its class index.
pub struct ClassTable {
    pub kind: Kind,
    pub l: usize,
    pub classes: Vec<ClassId>,
    lookup: Vec<u16>,
}

impl ClassTable {
    fn build(kind: Kind, l: usize) -> ClassTable {
        let codes = 1u32 << pair_count(l);
        let canon: Vec<u32> = (0..codes).map(|c| canonical_code(kind, l, c)).collect();
        let mut distinct = canon.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let lookup = canon
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as u16)
            .collect();
        let classes = distinct
            .iter()
            .enumerate()
            .map(|(index, &canon)| ClassId {
                kind,
                l: l as u8,
                index,
                canon,
            })
            .collect();
        ClassTable {
            kind,
            l,
            classes,
            lookup,
        }
    }

    #[inline]
    pub fn index_of(&self, code: u32) -> usize {
        self.lookup[code as usize] as usize
    }

    #[inline]
    pub fn classify(&self, code: u32) -> ClassId {
        self.classes[self.index_of(code)]
    }

    pub fn by_name(&self, name: &str) -> Option<ClassId> {
        self.classes.iter().copied().find(|c| c.name() == name)
    }
}

static TABLES: [OnceLock<ClassTable>; 6] = [const { OnceLock::new() }; 6];

/// Shared class table for `3 <= l <= 5`.
pub fn class_table(kind: Kind, l: usize) -> Result<&'static ClassTable> {
    if !(3..=MAX_TABLE_ORDER).contains(&l) {
        return input(format!("class tables exist for orders 3..=5, got {l}"));
    }
    let slot = (l - 3) * 2 + (kind == Kind::Tournament) as usize;
    Ok(TABLES[slot].get_or_init(|| ClassTable::build(kind, l)))
}

/// Class of a whole object with 3 to 5 vertices.
pub fn canonical_class<S: Structure>(obj: &S) -> Result<ClassId> {
    let l = obj.order();
    let table = class_table(S::KIND, l)?;
    let all: Vec<usize> = (0..l).collect();
    Ok(table.classify(obj.pair_code(&all)))
}

pub fn enumerate_classes(kind: Kind, l: usize) -> Result<Vec<ClassId>> {
    Ok(class_table(kind, l)?.classes.clone())
}
