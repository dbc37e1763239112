//! Constructive clique covers of graphs.
//!
//! `ccl-core` builds and checks `t`-clique covers: collections of cliques such
//! that every `t`-vertex clique of a graph lies inside one of them. It carries
//!
//! - dense bitset graphs, Turán graphs and clique enumeration ([`graph`]),
//! - greedy clique partitions ([`partition`]),
//! - the greedy-sequence value calculus and its closed-form bounds ([`sequence`]),
//! - explicit 3- and 4-clique-cover constructions with certificates ([`cover`]),
//! - an exact branch-and-bound minimum cover oracle ([`solver`]),
//! - exact-rational checkers for the extremal counting bounds ([`bounds`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, random graph
//! generation and the command line live in the companion `ccl` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod cover;
mod error;
pub mod graph;
pub mod partition;
pub mod rational;
pub mod sequence;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Clique, Graph, VertexSet};
