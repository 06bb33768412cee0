//! Per-graph entanglement invariants.

mod coloring;
mod cover;
pub mod gf2;
mod measure;
mod persistency;
mod schmidt;

pub use coloring::{
    is_two_colorable, odd_cycle_transversal_bound, orbit_two_colorable, two_colorable_bounds,
    two_coloring, OddCycleBound,
};
pub use cover::min_vertex_cover;
pub use measure::{pauli_measure, PauliBasis};
pub use persistency::{pauli_persistency, shared_solver, PersistencySolver};
pub use schmidt::{rank_indexes, schmidt_rank, sr_max, Bipartition, RankIndexSet};
