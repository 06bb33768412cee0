//! Pauli persistency: the fewest single-qubit Pauli measurements that leave
//! an edgeless graph, found by exhaustive memoized search.

use std::sync::LazyLock;

use dashmap::DashMap;

use super::measure::{measure_x_unchecked, PauliBasis};
use crate::graph::{bits, canonical_form, CanonicalForm, Graph};
use crate::lc::local_complement_unchecked;

/// Memoized persistency search, keyed by canonical form of connected graphs.
///
/// Measurements on different components act independently, so the value of
/// a disconnected graph is the sum over its components. The table can be
/// shared between threads; concurrent inserts store identical values.
pub struct PersistencySolver {
    bases: Vec<PauliBasis>,
    memo: DashMap<CanonicalForm, u8>,
}

impl Default for PersistencySolver {
    fn default() -> Self {
        Self::new()
    }
}

impl PersistencySolver {
    pub fn new() -> Self {
        Self::with_bases(&PauliBasis::ALL)
    }

    /// Restricts the search to the given measurement bases.
    pub fn with_bases(bases: &[PauliBasis]) -> Self {
        PersistencySolver {
            bases: bases.to_vec(),
            memo: DashMap::new(),
        }
    }

    /// Number of memoized connected graphs.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn persistency(&self, g: &Graph) -> u32 {
        g.components()
            .into_iter()
            .filter(|c| c.count_ones() > 1)
            .map(|c| self.connected(&g.induced(c)) as u32)
            .sum()
    }

    fn connected(&self, g: &Graph) -> u8 {
        let key = canonical_form(g);
        if let Some(v) = self.memo.get(&key) {
            return *v;
        }
        let g = key.to_graph();
        let mut best = u8::MAX;
        let mut consider = |h: Graph| {
            let pp = self.persistency(&h) as u8;
            best = best.min(pp);
        };
        for v in 0..g.n() {
            for &basis in &self.bases {
                match basis {
                    PauliBasis::Z => consider(g.remove_vertex(v).unwrap()),
                    PauliBasis::Y => {
                        consider(local_complement_unchecked(&g, v).remove_vertex(v).unwrap())
                    }
                    PauliBasis::X => {
                        for b0 in bits(g.neighbors(v)) {
                            consider(measure_x_unchecked(&g, v, b0));
                        }
                    }
                }
            }
        }
        let value = best.saturating_add(1);
        self.memo.insert(key, value);
        value
    }
}

static SHARED: LazyLock<PersistencySolver> = LazyLock::new(PersistencySolver::new);

/// Pauli persistency using a process-wide memo table.
pub fn pauli_persistency(g: &Graph) -> u32 {
    SHARED.persistency(g)
}

pub fn shared_solver() -> &'static PersistencySolver {
    &SHARED
}
