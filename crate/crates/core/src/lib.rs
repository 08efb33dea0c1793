//! Equitable partitions of a graph's vertices into ⌈(Δ+1)/2⌉ linear forests
//! for graphs with maximum degree Δ at least half the order, with a verifier
//! and an exact backtracking oracle for small graphs.

mod bitset;
pub mod cli;
mod coloring;
pub mod construct;
mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod paths;

pub use bitset::VertexSet;
pub use coloring::{Route, TreeColoring};
pub use construct::{classify_regime, equitable_tree_coloring, gamma, Regime, RegimePlan};
pub use error::{Error, Result};
pub use graph::{
    complement, components, degree_stats, induces_forest, induces_linear_forest, DegreeStats,
    Graph, GraphId,
};
pub use matching::{matching_of_size, maximum_matching, Matching};
pub use paths::{inextensible_path, long_cycle, long_path, CycleWitness, PathWitness};
