//! Simple undirected graphs on at most 31 vertices.
//!
//! A [`Graph`] stores one neighborhood bitmask per vertex, so row `i` of the
//! adjacency matrix is `adj[i]`. Everything downstream (local
//! complementation, GF(2) ranks, canonical labeling) works on these masks
//! directly.

mod canon;
mod enumerate;
mod graph6;

use std::fmt;

use rand::Rng;

pub use canon::{canonical_form, CanonicalForm, CANON_VERSION};
pub use enumerate::{enumerate_connected, CONNECTED_GRAPH_COUNTS, MAX_ENUMERATE};
pub use graph6::{from_graph6, read_graph6, to_graph6, write_graph6, Graph6Error};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighborhood masks, checking symmetry and the
    /// absence of self-loops.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = full_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row & (1 << i) != 0 {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            for j in bits(row) {
                if rows[j] & (1 << i) == 0 {
                    return Err(Error::VertexOutOfRange { vertex: j, n });
                }
            }
            g.adj[i] = row;
        }
        Ok(g)
    }

    /// Same as [`Graph::from_rows`] without the validity checks.
    pub(crate) fn from_rows_unchecked(rows: &[u32]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..rows.len()].copy_from_slice(rows);
        Graph {
            n: rows.len() as u8,
            adj,
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.adj[i] = full_mask(n) & !(1 << i);
        }
        Ok(g)
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in a..a + b {
                edges.push((i, j));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Uniformly random labeled graph with edge probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Random connected graph: a random spanning tree plus extra edges with
    /// probability `p`.
    pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let mut g = Graph::random(n, p, rng)?;
        for v in 1..n {
            let u = rng.random_range(0..v);
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n()]
    }

    /// Mask with one bit set per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn max_degree(&self) -> u32 {
        self.rows()
            .iter()
            .map(|r| r.count_ones())
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Vertex pairs `(u, v)` with `u < v` that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let full = self.vertex_mask();
        (0..self.n())
            .flat_map(move |u| bits(!self.adj[u] & full & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows().iter().all(|&r| r == 0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, &pu) in perm.iter().enumerate() {
            let mut row = 0u32;
            for v in bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            g.adj[pu] = row;
        }
        g
    }

    /// Subgraph induced by the vertices in `keep`, relabeled in increasing
    /// order.
    pub fn induced(&self, keep: u32) -> Graph {
        let keep = keep & self.vertex_mask();
        let mut g = Graph {
            n: keep.count_ones() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (new_u, u) in bits(keep).enumerate() {
            g.adj[new_u] = compress(self.adj[u] & keep, keep);
        }
        g
    }

    /// Deletes `v` with its incident edges; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !(1 << v)))
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        let keep = (0..self.n())
            .filter(|&v| self.adj[v] != 0)
            .fold(0u32, |m, v| m | (1 << v));
        if keep == self.vertex_mask() {
            *self
        } else {
            self.induced(keep)
        }
    }

    /// Vertex masks of the connected components, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach(&self, start: u32) -> u32 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff a single component covers every vertex. The graph on zero
    /// vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(1) == self.vertex_mask()
    }

    /// Adjacency matrix as 0/1 rows, for display and tests.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.has_edge(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates over the set bit positions of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Packs the bits of `mask` selected by `keep` into the low positions.
#[inline]
fn compress(mask: u32, keep: u32) -> u32 {
    let mut out = 0;
    for (k, v) in bits(keep).enumerate() {
        if mask & (1 << v) != 0 {
            out |= 1 << k;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity() {
        assert!(Graph::complete(2).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::path(8).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn remove_vertex_shifts_labels() {
        let g = Graph::path(4).unwrap();
        let h = g.remove_vertex(1).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn components_and_isolated() {
        let g = Graph::from_edges(6, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b11, 0b100, 0b11000, 0b100000]);
        let h = g.without_isolated();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(Graph::empty(32), Err(Error::TooManyVertices(32))));
    }
}
