//! Local complementation and LC orbits modulo isomorphism.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::{check_size, Error, Result};
use crate::graph::{bits, canonical_form, enumerate_connected, CanonicalForm, Graph};

/// Toggles every edge inside the neighborhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    Ok(local_complement_unchecked(g, v))
}

#[inline]
pub(crate) fn local_complement_unchecked(g: &Graph, v: usize) -> Graph {
    let nbhd = g.neighbors(v);
    let mut rows = [0u32; crate::graph::MAX_VERTICES];
    rows[..g.n()].copy_from_slice(g.rows());
    for u in bits(nbhd) {
        rows[u] ^= nbhd & !(1 << u);
    }
    Graph::from_rows_unchecked(&rows[..g.n()])
}

/// One LC equivalence class, as a set of isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Sorted canonical forms of the non-isomorphic members.
    pub members: Vec<CanonicalForm>,
    /// Member with the fewest edges, then the smallest maximum degree, then
    /// the smallest canonical form; canonically labeled.
    pub representative: Graph,
}

impl OrbitRecord {
    pub fn lc_size(&self) -> usize {
        self.members.len()
    }

    pub fn min_edges(&self) -> usize {
        self.representative.edge_count()
    }

    pub fn n(&self) -> usize {
        self.representative.n()
    }

    pub fn representative_form(&self) -> CanonicalForm {
        CanonicalForm::of_labeled(&self.representative)
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.binary_search(form).is_ok()
    }

    pub fn member_graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.members.iter().map(|c| c.to_graph())
    }

    /// Builds a record from a member list, choosing the representative.
    pub fn from_members(members: impl IntoIterator<Item = CanonicalForm>) -> Self {
        let mut members: Vec<CanonicalForm> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let best = members
            .iter()
            .min_by_key(|c| {
                let g = c.to_graph();
                (g.edge_count(), g.max_degree(), **c)
            })
            .expect("orbit has at least one member");
        OrbitRecord {
            representative: best.to_graph(),
            members,
        }
    }
}

/// Closure of `g` under local complementation at every vertex, modulo
/// isomorphism.
pub fn lc_orbit(g: &Graph) -> Result<OrbitRecord> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = canonical_form(g);
    let mut seen: HashSet<CanonicalForm> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(form) = queue.pop_front() {
        let member = form.to_graph();
        for v in 0..member.n() {
            let next = canonical_form(&local_complement_unchecked(&member, v));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(OrbitRecord::from_members(seen))
}

/// Partitions the connected graphs on `n` vertices into LC orbits, sorted by
/// representative canonical form.
pub fn enumerate_orbits(n: usize) -> Result<Vec<OrbitRecord>> {
    check_size(n, 2, 8)?;
    let graphs = enumerate_connected(n)?;
    let mut assigned: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut seeds = Vec::new();
    // Seeds are picked in canonical order; each orbit is closed once.
    for g in &graphs {
        let form = CanonicalForm::of_labeled(g);
        if assigned.contains(&form) {
            continue;
        }
        let orbit = lc_orbit(g)?;
        assigned.extend(orbit.members.iter().copied());
        seeds.push(orbit);
    }
    seeds.par_sort_by_key(|o| o.representative_form());
    Ok(seeds)
}
