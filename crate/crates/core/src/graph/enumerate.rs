use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{check_size, Result};

pub const MAX_ENUMERATE: usize = 10;

/// Connected graphs on `n` vertices up to isomorphism, `n = 0..=10`.
pub const CONNECTED_GRAPH_COUNTS: [usize; 11] =
    [1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

/// One canonically labeled graph per isomorphism class of connected graphs
/// on `n` vertices, sorted by canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// growing the connected graphs on `n - 1` vertices by one vertex with every
/// nonempty attachment set reaches all of them.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    check_size(n, 1, MAX_ENUMERATE)?;
    Ok(connected_forms(n)
        .into_iter()
        .map(|c| c.to_graph())
        .collect())
}

fn connected_forms(n: usize) -> BTreeSet<CanonicalForm> {
    if n == 1 {
        return BTreeSet::from([canonical_form(&Graph::empty(1).unwrap())]);
    }
    let previous: Vec<CanonicalForm> = connected_forms(n - 1).into_iter().collect();
    previous
        .par_iter()
        .fold(BTreeSet::new, |mut acc, parent| {
            let base = parent.to_graph();
            let mut g = Graph::empty(n).unwrap();
            for (u, v) in base.edges() {
                g.add_edge(u, v);
            }
            let new = n - 1;
            for attach in 1u32..(1 << (n - 1)) {
                let mut h = g;
                for u in super::bits(attach) {
                    h.add_edge(u, new);
                }
                acc.insert(canonical_form(&h));
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(11).is_err());
    }
}
