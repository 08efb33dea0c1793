//! Ground truth at desk scale: coloring verification, exact equitable vertex
//! arboricity by backtracking, exhaustive sweeps over labeled graphs, and
//! in-regime random instances.

mod exact;
mod generate;
mod sweep;
mod verify;

pub use exact::{exact_a_eq, exists_equitable_k_tree_coloring, DEFAULT_CAP, MAX_CAP};
pub use generate::{gen_random, gen_random_with, GenConfig};
pub use sweep::{graph_from_mask, sweep_conjecture, SweepReport, SWEEP_MAX_N};
pub use verify::{verify, Failure, FailureKind, VerifyReport};
