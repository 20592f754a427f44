//! Fixtures shared by the criterion benches.

use locprof_core::constructions::{random_graph, random_tournament, tyomkyn_graph};
use locprof_core::{Graph, Tournament};

pub const SEED: u64 = 0x5eed;

pub fn dense_graph(n: usize) -> Graph {
    random_graph(n, 0.5, SEED).expect("valid fixture")
}

pub fn tournament(n: usize) -> Tournament {
    random_tournament(n, SEED).expect("valid fixture")
}

pub fn pentagon_blowup(k: u32) -> Graph {
    tyomkyn_graph(k).expect("valid fixture")
}
