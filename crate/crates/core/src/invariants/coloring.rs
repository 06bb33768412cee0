//! 2-colorable graphs and the Schmidt-measure bounds specific to them.

use super::{gf2, min_vertex_cover};
use crate::bounds::{BoundRule, MeasureBounds};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::lc::OrbitRecord;

/// One color class of a proper 2-coloring, or `None` for graphs with an odd
/// cycle.
pub fn two_coloring(g: &Graph) -> Option<u32> {
    let mut color0 = 0u32;
    let mut seen = 0u32;
    for root in 0..g.n() {
        if seen & (1 << root) != 0 {
            continue;
        }
        seen |= 1 << root;
        color0 |= 1 << root;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let same = color0 & (1 << u) != 0;
            for w in bits(g.neighbors(u)) {
                if seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    if !same {
                        color0 |= 1 << w;
                    }
                    stack.push(w);
                } else if (color0 & (1 << w) != 0) == same {
                    return None;
                }
            }
        }
    }
    Some(color0)
}

pub fn is_two_colorable(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Whether some member of the orbit is 2-colorable.
pub fn orbit_two_colorable(o: &OrbitRecord) -> bool {
    o.member_graphs().any(|g| is_two_colorable(&g))
}

/// `ceil(rank(Γ)/2) <= E_S <= floor(n/2)` for a 2-colorable graph, collapsing
/// to `floor(n/2)` when the adjacency matrix is invertible over GF(2).
pub fn two_colorable_bounds(g: &Graph) -> Result<MeasureBounds> {
    if !is_two_colorable(g) {
        return Err(Error::NotBipartite);
    }
    let n = g.n() as u32;
    let rank = gf2::rank(g.rows().iter().copied());
    if rank == n {
        return Ok(MeasureBounds::exact(
            n / 2,
            BoundRule::InvertibleTwoColorable,
        ));
    }
    let mut b = MeasureBounds::unbounded(n);
    b.raise_lower(rank.div_ceil(2), BoundRule::TwoColorableRank);
    b.lower_upper(n / 2, BoundRule::TwoColorableHalf);
    Ok(b)
}

/// Upper bound from deleting a smallest vertex set that leaves a
/// 2-colorable graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddCycleBound {
    /// Number of deleted vertices.
    pub removed: u32,
    /// `min over such sets S of (upper(G - S) + |S|)`, where `upper(G - S)`
    /// is the smaller of `floor((n - |S|)/2)` and its vertex cover.
    pub bound: u32,
}

pub fn odd_cycle_transversal_bound(g: &Graph) -> Result<OddCycleBound> {
    if is_two_colorable(g) {
        return Err(Error::Bipartite);
    }
    let n = g.n();
    let full = g.vertex_mask();
    for m in 1..=n as u32 {
        let best = (0u32..1 << n)
            .filter(|s| s.count_ones() == m)
            .filter_map(|s| {
                let rest = g.induced(full & !s);
                is_two_colorable(&rest)
                    .then(|| (rest.n() as u32 / 2).min(min_vertex_cover(&rest)) + m)
            })
            .min();
        if let Some(bound) = best {
            return Ok(OddCycleBound { removed: m, bound });
        }
    }
    unreachable!("deleting every vertex leaves a 2-colorable graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_examples() {
        assert!(is_two_colorable(&Graph::path(8).unwrap()));
        assert!(is_two_colorable(&Graph::star(6).unwrap()));
        assert!(!is_two_colorable(&Graph::cycle(5).unwrap()));
        assert!(is_two_colorable(&Graph::cycle(8).unwrap()));
        assert!(!is_two_colorable(&Graph::complete(3).unwrap()));
        assert!(is_two_colorable(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn path_is_invertible() {
        let b = two_colorable_bounds(&Graph::path(8).unwrap()).unwrap();
        assert_eq!((b.lower, b.upper), (4, 4));
    }

    #[test]
    fn cycle_and_complete_bipartite() {
        let c8 = Graph::cycle(8).unwrap();
        assert_eq!(gf2::rank(c8.rows().iter().copied()), 6);
        let b = two_colorable_bounds(&c8).unwrap();
        assert_eq!((b.lower, b.upper), (3, 4));
        let k44 = Graph::complete_bipartite(4, 4).unwrap();
        assert_eq!(gf2::rank(k44.rows().iter().copied()), 2);
        let b = two_colorable_bounds(&k44).unwrap();
        assert_eq!((b.lower, b.upper), (1, 4));
    }

    #[test]
    fn non_bipartite_rejected() {
        assert!(matches!(
            two_colorable_bounds(&Graph::cycle(5).unwrap()),
            Err(Error::NotBipartite)
        ));
    }

    #[test]
    fn odd_cycle_examples() {
        let c5 = odd_cycle_transversal_bound(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(
            c5,
            OddCycleBound {
                removed: 1,
                bound: 3
            }
        );
        let k3 = odd_cycle_transversal_bound(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(
            k3,
            OddCycleBound {
                removed: 1,
                bound: 2
            }
        );
        assert!(matches!(
            odd_cycle_transversal_bound(&Graph::path(4).unwrap()),
            Err(Error::Bipartite)
        ));
    }
}
