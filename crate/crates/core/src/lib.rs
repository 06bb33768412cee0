//! Local-complementation classes of connected qubit graph states on up to
//! eight vertices, with their entanglement invariants.
//!
//! The pipeline runs bottom-up: [`graph`] enumerates connected graphs up to
//! isomorphism, [`lc`] groups them into LC orbits, [`invariants`] computes
//! Schmidt ranks, vertex covers and Pauli persistency, [`bounds`] turns those
//! into Schmidt-measure bounds per orbit, and [`classify`] orders and numbers
//! the classes. [`oracle`] checks the graph-level rules against dense state
//! vectors.

pub mod bounds;
pub mod cache;
pub mod classify;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lc;
pub mod oracle;

pub use bounds::{orbit_measure_bounds, propagate_bounds, MeasureBounds};
pub use classify::{
    classify, emit_rows, emit_table, lookup, read_json_table, Atlas, ClassRecord, ClassifyOptions,
    TableFormat, TableRow,
};
pub use error::{Error, Result};
pub use graph::{
    canonical_form, enumerate_connected, from_graph6, to_graph6, CanonicalForm, Graph,
};
pub use lc::{enumerate_orbits, lc_orbit, local_complement, OrbitRecord};
