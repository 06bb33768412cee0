//! Bounds on the Schmidt measure of whole LC orbits.
//!
//! Every member of an orbit has the same Schmidt measure, so each per-graph
//! bound applies class-wide: the lower bound comes from the maximal Schmidt
//! rank, the upper bound from the best Pauli persistency over all members.
//! Known exact values (GHZ, trees, invertible 2-colorable graphs) then pin
//! the value, and [`propagate_bounds`] tightens intervals through the
//! edge/vertex rules.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::invariants::{
    is_two_colorable, min_vertex_cover, odd_cycle_transversal_bound, sr_max, two_colorable_bounds,
    PersistencySolver,
};
use crate::lc::OrbitRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRule {
    Trivial,
    MaxSchmidtRank,
    PauliPersistency,
    Ghz,
    Tree,
    TwoColorableRank,
    TwoColorableHalf,
    InvertibleTwoColorable,
    OddCycleTransversal,
    /// `E_S(G + e) <= E_S(G) + 1` and `E_S(G - e) >= E_S(G) - 1`.
    EdgeRule,
    /// `E_S(G) - 1 <= E_S(G - v) <= E_S(G)`.
    VertexRule,
    /// Value of a disconnected graph taken as the sum over its components.
    ComponentSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// One tightening step: which rule moved which side to what value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub rule: BoundRule,
    pub side: Side,
    pub value: u32,
}

/// Integer bounds on the Schmidt measure `E_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureBounds {
    pub lower: u32,
    pub upper: u32,
    pub provenance: Vec<Provenance>,
}

impl MeasureBounds {
    /// `0 <= E_S <= n`.
    pub fn unbounded(n: u32) -> Self {
        MeasureBounds {
            lower: 0,
            upper: n,
            provenance: vec![Provenance {
                rule: BoundRule::Trivial,
                side: Side::Upper,
                value: n,
            }],
        }
    }

    pub fn exact(value: u32, rule: BoundRule) -> Self {
        MeasureBounds {
            lower: value,
            upper: value,
            provenance: vec![
                Provenance {
                    rule,
                    side: Side::Lower,
                    value,
                },
                Provenance {
                    rule,
                    side: Side::Upper,
                    value,
                },
            ],
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Raises the lower bound; returns whether it moved.
    pub fn raise_lower(&mut self, value: u32, rule: BoundRule) -> bool {
        if value <= self.lower {
            return false;
        }
        self.lower = value;
        self.provenance.push(Provenance {
            rule,
            side: Side::Lower,
            value,
        });
        true
    }

    /// Lowers the upper bound; returns whether it moved.
    pub fn lower_upper(&mut self, value: u32, rule: BoundRule) -> bool {
        if value >= self.upper {
            return false;
        }
        self.upper = value;
        self.provenance.push(Provenance {
            rule,
            side: Side::Upper,
            value,
        });
        true
    }

    /// Pins an exactly known value, which must lie inside the interval.
    pub fn pin(&mut self, value: u32, rule: BoundRule) -> Result<()> {
        if value < self.lower || value > self.upper {
            return Err(Error::InconsistentBounds(format!(
                "{rule:?} gives {value}, outside [{}, {}]",
                self.lower, self.upper
            )));
        }
        self.raise_lower(value, rule);
        self.lower_upper(value, rule);
        Ok(())
    }

    pub fn check(&self) -> Result<()> {
        if self.lower > self.upper {
            return Err(Error::InconsistentBounds(format!(
                "lower bound {} exceeds upper bound {}",
                self.lower, self.upper
            )));
        }
        Ok(())
    }

    pub fn contains(&self, other: &MeasureBounds) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

/// `k` when exact, `a<b` otherwise.
impl fmt::Display for MeasureBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "{}<{}", self.lower, self.upper)
        }
    }
}

/// Bounds for one orbit from its own members only.
pub fn orbit_measure_bounds(o: &OrbitRecord, solver: &PersistencySolver) -> Result<MeasureBounds> {
    let n = o.n();
    let members: Vec<Graph> = o.member_graphs().collect();
    let mut b = MeasureBounds::unbounded(n as u32);
    b.raise_lower(sr_max(&o.representative), BoundRule::MaxSchmidtRank);
    let best_pp = members
        .iter()
        .map(|m| solver.persistency(m))
        .min()
        .expect("nonempty orbit");
    b.lower_upper(best_pp, BoundRule::PauliPersistency);
    for m in &members {
        if is_two_colorable(m) {
            let tc = two_colorable_bounds(m)?;
            b.raise_lower(tc.lower, BoundRule::TwoColorableRank);
            b.lower_upper(tc.upper, BoundRule::TwoColorableHalf);
        } else {
            let oct = odd_cycle_transversal_bound(m)?;
            b.lower_upper(oct.bound, BoundRule::OddCycleTransversal);
        }
    }
    b.check()?;

    if n >= 2 {
        let star = canonical_form(&Graph::star(n)?);
        if o.contains(&star) {
            b.pin(1, BoundRule::Ghz)?;
        }
    }
    for m in &members {
        if m.edge_count() + 1 == n {
            // Connected with n - 1 edges: a tree.
            b.pin(min_vertex_cover(m), BoundRule::Tree)?;
        }
        if is_two_colorable(m) {
            let tc = two_colorable_bounds(m)?;
            if tc.is_exact() {
                b.pin(tc.lower, BoundRule::InvertibleTwoColorable)?;
            }
        }
    }
    Ok(b)
}

/// Orbits and bounds of one vertex count.
#[derive(Clone, Debug)]
pub struct LevelBounds {
    pub n: usize,
    pub orbits: Vec<OrbitRecord>,
    pub bounds: Vec<MeasureBounds>,
}

struct Index<'a> {
    levels: &'a [LevelBounds],
    by_form: HashMap<CanonicalForm, (usize, usize)>,
}

impl<'a> Index<'a> {
    fn new(levels: &'a [LevelBounds]) -> Self {
        let mut by_form = HashMap::new();
        for (li, level) in levels.iter().enumerate() {
            for (oi, o) in level.orbits.iter().enumerate() {
                for &m in &o.members {
                    by_form.insert(m, (li, oi));
                }
            }
        }
        Index { levels, by_form }
    }

    fn locate(&self, g: &Graph) -> Result<(usize, usize)> {
        self.by_form
            .get(&canonical_form(g))
            .copied()
            .ok_or(Error::NotInAtlas { n: g.n() })
    }

    /// Summed `(lower, upper)` over the components of a graph made only of
    /// smaller, already final levels.
    fn component_sum(&self, g: &Graph) -> Result<(u32, u32)> {
        let mut lo = 0;
        let mut hi = 0;
        for comp in g.components() {
            if comp.count_ones() < 2 {
                continue;
            }
            let (li, oi) = self.locate(&g.induced(comp))?;
            let b = &self.levels[li].bounds[oi];
            lo += b.lower;
            hi += b.upper;
        }
        Ok((lo, hi))
    }
}

/// Relations between the orbits of the level being propagated.
struct Relations {
    /// `(big, small)`: some member of `small` is a member of `big` minus an edge.
    edge_pairs: Vec<(usize, usize)>,
    /// Per orbit: upper bounds from disconnected edge deletions and from
    /// vertex deletions, already `+1`.
    fixed_upper: Vec<Option<(u32, BoundRule)>>,
    /// Per orbit: lower bound from vertex deletions.
    fixed_lower: Vec<u32>,
}

fn relations(index: &Index, level: usize) -> Result<Relations> {
    let orbits = &index.levels[level].orbits;
    let mut edge_pairs = Vec::new();
    let mut fixed_upper = vec![None; orbits.len()];
    let mut fixed_lower = vec![0; orbits.len()];
    for (i, o) in orbits.iter().enumerate() {
        let mut cap: Option<(u32, BoundRule)> = None;
        let mut offer = |value: u32, rule: BoundRule| {
            if cap.is_none_or(|(c, _)| value < c) {
                cap = Some((value, rule));
            }
        };
        for m in o.member_graphs() {
            for (u, v) in m.edges() {
                let mut h = m;
                h.remove_edge(u, v);
                if h.is_connected() {
                    let (li, j) = index.locate(&h)?;
                    debug_assert_eq!(li, level);
                    edge_pairs.push((i, j));
                } else {
                    let (_, hi) = index.component_sum(&h)?;
                    offer(hi + 1, BoundRule::ComponentSum);
                }
            }
            for v in 0..m.n() {
                let h = m.remove_vertex(v)?;
                let (lo, hi) = index.component_sum(&h)?;
                offer(hi + 1, BoundRule::VertexRule);
                fixed_lower[i] = fixed_lower[i].max(lo);
            }
        }
        fixed_upper[i] = cap;
    }
    edge_pairs.sort_unstable();
    edge_pairs.dedup();
    Ok(Relations {
        edge_pairs,
        fixed_upper,
        fixed_lower,
    })
}

/// Tightens the bounds of `levels[target]` to a fixed point of the
/// edge/vertex rules. Levels before `target` must hold final bounds for all
/// smaller vertex counts. Returns the number of tightening steps.
pub fn propagate_bounds(levels: &mut [LevelBounds], target: usize) -> Result<usize> {
    let rel = {
        let index = Index::new(&levels[..=target]);
        relations(&index, target)?
    };
    let bounds = &mut levels[target].bounds;
    let mut steps = 0;
    for (i, b) in bounds.iter_mut().enumerate() {
        if let Some((cap, rule)) = rel.fixed_upper[i] {
            steps += b.lower_upper(cap, rule) as usize;
        }
        steps += b.raise_lower(rel.fixed_lower[i], BoundRule::VertexRule) as usize;
    }
    loop {
        let mut changed = false;
        for &(big, small) in &rel.edge_pairs {
            let cap = bounds[small].upper + 1;
            if bounds[big].lower_upper(cap, BoundRule::EdgeRule) {
                changed = true;
                steps += 1;
            }
            let floor = bounds[big].lower.saturating_sub(1);
            if bounds[small].raise_lower(floor, BoundRule::EdgeRule) {
                changed = true;
                steps += 1;
            }
        }
        if !changed {
            break;
        }
    }
    for b in bounds.iter() {
        b.check()?;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lc::lc_orbit;

    #[test]
    fn rendering() {
        assert_eq!(MeasureBounds::exact(3, BoundRule::Tree).to_string(), "3");
        let mut b = MeasureBounds::unbounded(8);
        b.raise_lower(3, BoundRule::MaxSchmidtRank);
        b.lower_upper(4, BoundRule::PauliPersistency);
        assert_eq!(b.to_string(), "3<4");
        assert!(!b.is_exact());
    }

    #[test]
    fn pin_outside_interval_is_an_error() {
        let mut b = MeasureBounds::unbounded(8);
        b.raise_lower(2, BoundRule::MaxSchmidtRank);
        b.lower_upper(3, BoundRule::PauliPersistency);
        assert!(b.pin(4, BoundRule::Tree).is_err());
        assert!(b.pin(3, BoundRule::Tree).is_ok());
        assert!(b.is_exact());
    }

    #[test]
    fn star_orbit_is_exactly_one() {
        let o = lc_orbit(&Graph::star(8).unwrap()).unwrap();
        let b = orbit_measure_bounds(&o, &PersistencySolver::new()).unwrap();
        assert_eq!((b.lower, b.upper), (1, 1));
    }

    #[test]
    fn five_ring_stays_open() {
        let o = lc_orbit(&Graph::cycle(5).unwrap()).unwrap();
        let b = orbit_measure_bounds(&o, &PersistencySolver::new()).unwrap();
        assert_eq!((b.lower, b.upper), (2, 3));
    }
}
