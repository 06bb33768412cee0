//! Independent checks of the graph-level rules against dense state vectors.
//!
//! Nothing here is used by the classification pipeline; it only confirms
//! that the combinatorial shortcuts agree with the quantum states they
//! describe.

mod pauli;
mod state;
mod suite;

pub use pauli::{generator, generators, Letter, PauliString};
pub use state::{build_state, StateVector, MAX_ORACLE, SVD_THRESHOLD};
pub use suite::{verify, SuiteResult, VerifyOptions, VerifyReport};

use num_complex::Complex64;

use crate::error::{check_size, Error, Result};
use crate::graph::{bits, Graph};
use crate::invariants::{pauli_measure, Bipartition, PauliBasis};
use crate::lc::local_complement;

/// Largest amplitude deviation accepted by the stabilizer checks.
pub const STABILIZER_TOLERANCE: f64 = 1e-10;

/// Branches with squared norm below this are treated as impossible.
const ZERO_PROBABILITY: f64 = 1e-12;

/// Largest vertex count for [`check_measurement_rule`].
pub const MAX_MEASUREMENT_CHECK: usize = 8;

/// Whether every operator fixes `state` within [`STABILIZER_TOLERANCE`].
pub fn stabilizes(state: &StateVector, ops: &[PauliString]) -> bool {
    ops.iter()
        .all(|p| state.apply(p).distance(state) <= STABILIZER_TOLERANCE)
}

/// `g_i |G> = |G>` for every vertex.
pub fn check_stabilizer(g: &Graph) -> Result<bool> {
    check_generators(g, &generators(g))
}

/// Like [`check_stabilizer`] with caller-supplied generators.
pub fn check_generators(g: &Graph, gens: &[PauliString]) -> Result<bool> {
    Ok(stabilizes(&build_state(g)?, gens))
}

/// Schmidt rank of `|G>` across `bp` from the singular values of its
/// amplitude matrix.
pub fn oracle_schmidt_rank(g: &Graph, bp: Bipartition) -> Result<u32> {
    build_state(g)?.schmidt_rank(bp)
}

/// Conjugation action of the local unitary behind a local complementation,
/// letter by letter: `(phase exponent of i, image)` indexed by `I, X, Y, Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcMap {
    pub on_vertex: [(u8, Letter); 4],
    pub on_neighbors: [(u8, Letter); 4],
}

impl LcMap {
    /// `Y -> Z`, `Z -> -Y` on the vertex; `X -> -Y`, `Y -> X` on its
    /// neighbors.
    pub const STANDARD: LcMap = LcMap {
        on_vertex: [
            (0, Letter::I),
            (0, Letter::X),
            (0, Letter::Z),
            (2, Letter::Y),
        ],
        on_neighbors: [
            (0, Letter::I),
            (2, Letter::Y),
            (0, Letter::X),
            (0, Letter::Z),
        ],
    };

    /// [`LcMap::STANDARD`] with the sign of `Z -> -Y` dropped.
    pub const SIGN_FLIPPED: LcMap = LcMap {
        on_vertex: [
            (0, Letter::I),
            (0, Letter::X),
            (0, Letter::Z),
            (0, Letter::Y),
        ],
        on_neighbors: LcMap::STANDARD.on_neighbors,
    };

    pub fn image(&self, p: &PauliString, g: &Graph, v: usize) -> PauliString {
        let nbhd = g.neighbors(v);
        let mut out = PauliString::identity(p.n()).times_i(p.phase());
        for (k, &l) in p.letters().iter().enumerate() {
            let table = if k == v {
                &self.on_vertex
            } else if nbhd >> k & 1 == 1 {
                &self.on_neighbors
            } else {
                out = out.with_letter(k, l);
                continue;
            };
            let (phase, image) = table[l as usize];
            out = out.with_letter(k, image).times_i(phase);
        }
        out
    }
}

/// Maps each generator of `g` through the local complementation at `v` and
/// checks that the images stabilize the state of the complemented graph.
pub fn check_lc_stabilizer_map(g: &Graph, v: usize) -> Result<bool> {
    check_lc_stabilizer_map_with(g, v, &LcMap::STANDARD)
}

pub fn check_lc_stabilizer_map_with(g: &Graph, v: usize, map: &LcMap) -> Result<bool> {
    let h = local_complement(g, v)?;
    let images: Vec<PauliString> = generators(g).iter().map(|p| map.image(p, g, v)).collect();
    Ok(stabilizes(&build_state(&h)?, &images))
}

fn eigenbra(basis: PauliBasis, outcome_plus: bool) -> [Complex64; 2] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let s = if outcome_plus { 1.0 } else { -1.0 };
    match (basis, outcome_plus) {
        (PauliBasis::X, _) => [r.into(), (s * r).into()],
        (PauliBasis::Y, _) => [r.into(), Complex64::new(0.0, -s * r)],
        (PauliBasis::Z, true) => [1.0.into(), 0.0.into()],
        (PauliBasis::Z, false) => [0.0.into(), 1.0.into()],
    }
}

/// Normalized state of the other qubits after measuring `v` in `basis`,
/// keeping the `+1` outcome unless it has zero probability.
pub fn post_measurement_state(
    state: &StateVector,
    v: usize,
    basis: PauliBasis,
) -> Result<StateVector> {
    if v >= state.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: state.n(),
        });
    }
    for plus in [true, false] {
        let post = state.contract(v, eigenbra(basis, plus));
        if post.norm().powi(2) > ZERO_PROBABILITY {
            return Ok(post.normalized());
        }
    }
    Err(Error::Oracle(format!(
        "both {basis} outcomes on qubit {v} have zero probability"
    )))
}

/// Graphs a measurement rule may produce for `(g, v, basis)`; the check
/// passes if any of them matches.
pub type MeasurementRule = dyn Fn(&Graph, usize, PauliBasis) -> Result<Vec<Graph>> + Sync;

/// The rules of [`pauli_measure`], one candidate per admissible `b0`.
pub fn standard_rule(g: &Graph, v: usize, basis: PauliBasis) -> Result<Vec<Graph>> {
    if basis != PauliBasis::X || g.neighbors(v) == 0 {
        return Ok(vec![pauli_measure(g, v, basis, None)?]);
    }
    bits(g.neighbors(v))
        .map(|b0| pauli_measure(g, v, basis, Some(b0)))
        .collect()
}

/// Compares the bipartite Schmidt-rank profile of the measured state with
/// that of the graph state the rule predicts.
pub fn check_measurement_rule(g: &Graph, v: usize, basis: PauliBasis) -> Result<bool> {
    check_measurement_rule_with(g, v, basis, &standard_rule)
}

pub fn check_measurement_rule_with(
    g: &Graph,
    v: usize,
    basis: PauliBasis,
    rule: &MeasurementRule,
) -> Result<bool> {
    check_size(g.n(), 1, MAX_MEASUREMENT_CHECK)?;
    g.check_vertex(v)?;
    let post = post_measurement_state(&build_state(g)?, v, basis)?;
    let profile = post.rank_profile()?;
    for h in rule(g, v, basis)? {
        if build_state(&h)?.rank_profile()? == profile {
            return Ok(true);
        }
    }
    Ok(false)
}
