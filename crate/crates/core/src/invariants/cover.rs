use crate::graph::{bits, Graph};

/// Size of a minimum vertex cover, by exact branching: the highest-degree
/// vertex `v` is either in the cover or all of `N(v)` is.
pub fn min_vertex_cover(g: &Graph) -> u32 {
    cover(g, g.vertex_mask())
}

fn cover(g: &Graph, active: u32) -> u32 {
    let Some((v, deg)) = bits(active)
        .map(|v| (v, (g.neighbors(v) & active).count_ones()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
    else {
        return 0;
    };
    if deg == 0 {
        return 0;
    }
    let rest = active & !(1 << v);
    let nbhd = g.neighbors(v) & active;
    let with_v = 1 + cover(g, rest);
    with_v.min(deg + cover(g, rest & !nbhd))
}

/// Exhaustive check by subset size, used to cross-check the branching.
#[cfg(test)]
pub(crate) fn min_vertex_cover_brute(g: &Graph) -> u32 {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    (0..=n as u32)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|s| s.count_ones() == k)
                .any(|s| edges.iter().all(|&(u, v)| s & (1 << u | 1 << v) != 0))
        })
        .unwrap()
}
