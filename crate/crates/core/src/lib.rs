//! Exact local profiles of graphs and tournaments.
//!
//! The crate counts induced 3-vertex graph types and 3/4-vertex tournament
//! types through closed combinatorial identities, enumerates small
//! isomorphism classes, builds the extremal families (clique unions,
//! circular tournaments, the pentagon blow-up), decides small-order
//! universality, and solves the clique-union optimisation behind the
//! threshold `rho = 6 theta^2 (1 - 2 theta)`.
//!
//! Module map:
//!
//! * [`graph`], [`tournament`], [`clique_spec`], [`format`]: object model and text formats.
//! * [`profile`], [`enumerate`], [`montecarlo`]: counting kernels and their oracles.
//! * [`constructions`]: generators for every family used by the checks.
//! * [`extremal`]: limit densities, root solving, case analysis and the grid oracle.
//! * [`classes`], [`universality`]: canonical forms, universality, P5 search, `tr(T)`.
//! * [`inequalities`]: finite-n forms of the tournament inequalities, Goodman and integer identities.

pub mod bitset;
pub mod classes;
pub mod clique_spec;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod inequalities;
pub mod limits;
pub mod montecarlo;
pub mod profile;
pub mod rng;
pub mod structure;
pub mod tournament;
pub mod universality;

pub use classes::{canonical_class, enumerate_classes, ClassId};
pub use clique_spec::CliqueSpec;
pub use error::{Error, Result};
pub use format::Object;
pub use graph::Graph;
pub use limits::DEFAULT_WORK_CAP;
pub use profile::{binomial, ArcCycleCounts, Profile3, TournamentProfile4};
pub use structure::{Kind, Structure};
pub use tournament::Tournament;
