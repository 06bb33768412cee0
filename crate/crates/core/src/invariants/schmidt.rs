//! Schmidt ranks of graph states across bipartitions.
//!
//! For a split `(A, B)` the Schmidt rank of `|G>` (as a log2 term count) is
//! the GF(2) rank of the off-diagonal adjacency block between `A` and `B`.

use serde::{Deserialize, Serialize};

use super::gf2;
use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph};

/// A bipartition identified by its smaller side `A`. When both sides have the
/// same size, `A` is the side containing vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: u8,
    a_mask: u32,
}

impl Bipartition {
    /// Normalizes either side of the split to the canonical smaller side.
    pub fn new(n: usize, mask: u32) -> Result<Self> {
        let full = full_mask(n);
        if mask == 0 || mask & !full != 0 || mask == full {
            return Err(Error::InvalidBipartition { mask, n });
        }
        let other = full & !mask;
        let (a, b) = (mask.count_ones(), other.count_ones());
        let a_mask = if a < b || (a == b && mask & 1 == 1) {
            mask
        } else {
            other
        };
        Ok(Bipartition { n: n as u8, a_mask })
    }

    pub fn a_mask(&self) -> u32 {
        self.a_mask
    }

    pub fn b_mask(&self) -> u32 {
        full_mask(self.n as usize) & !self.a_mask
    }

    /// `|A|`.
    pub fn size(&self) -> usize {
        self.a_mask.count_ones() as usize
    }

    /// All `2^(n-1) - 1` nontrivial bipartitions of `n` vertices.
    pub fn all(n: usize) -> impl Iterator<Item = Bipartition> {
        let full = full_mask(n);
        // Masks containing vertex 0 enumerate each split once.
        (0..if n >= 2 { 1u32 << (n - 1) } else { 0 })
            .map(move |m| (m << 1) | 1)
            .filter(move |&m| m != full)
            .map(move |m| Bipartition::new(n, m).expect("nontrivial mask"))
    }
}

pub fn schmidt_rank(g: &Graph, bp: Bipartition) -> u32 {
    let b = bp.b_mask();
    gf2::rank(bits(bp.a_mask).map(|a| g.neighbors(a) & b))
}

/// Counts of Schmidt ranks grouped by the size of the smaller side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankIndexSet {
    n: usize,
    /// `counts[p - 1][r]` = number of splits with `|A| = p` and rank `r`.
    counts: Vec<Vec<u32>>,
}

impl RankIndexSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest `p` with splits of that size, `floor(n / 2)`.
    pub fn max_p(&self) -> usize {
        self.counts.len()
    }

    /// The rank index for `|A| = p`: counts for ranks `p, p-1, ..., 1`.
    pub fn ri(&self, p: usize) -> Vec<u32> {
        self.counts[p - 1][1..].iter().rev().copied().collect()
    }

    /// Splits of size `p` with rank 0; zero for connected graphs.
    pub fn rank_zero(&self, p: usize) -> u32 {
        self.counts[p - 1][0]
    }

    pub fn total(&self, p: usize) -> u32 {
        self.counts[p - 1].iter().sum()
    }

    pub fn sr_max(&self) -> u32 {
        self.counts
            .iter()
            .flat_map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(r, _)| r as u32)
            })
            .max()
            .unwrap_or(0)
    }

    /// Every split has the largest possible rank `|A|`.
    pub fn is_maximal(&self) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(i, c)| c[..=i].iter().all(|&k| k == 0))
    }
}

pub fn rank_indexes(g: &Graph) -> RankIndexSet {
    let n = g.n();
    let mut counts: Vec<Vec<u32>> = (1..=n / 2).map(|p| vec![0; p + 1]).collect();
    for bp in Bipartition::all(n) {
        let r = schmidt_rank(g, bp) as usize;
        counts[bp.size() - 1][r] += 1;
    }
    RankIndexSet { n, counts }
}

/// Maximum Schmidt rank over all bipartitions.
pub fn sr_max(g: &Graph) -> u32 {
    Bipartition::all(g.n())
        .map(|bp| schmidt_rank(g, bp))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartition_normalization() {
        let bp = Bipartition::new(8, 0b1111_0000).unwrap();
        assert_eq!(bp.a_mask(), 0b0000_1111);
        let bp = Bipartition::new(5, 0b11100).unwrap();
        assert_eq!(bp.a_mask(), 0b00011);
        assert!(Bipartition::new(4, 0).is_err());
        assert!(Bipartition::new(4, 0b1111).is_err());
        assert!(Bipartition::new(4, 0b10000).is_err());
        assert_eq!(Bipartition::all(8).count(), 127);
        assert_eq!(Bipartition::all(2).count(), 1);
    }

    #[test]
    fn star_has_rank_one_everywhere() {
        let star = Graph::star(8).unwrap();
        assert!(Bipartition::all(8).all(|bp| schmidt_rank(&star, bp) == 1));
        assert_eq!(sr_max(&star), 1);
    }

    #[test]
    fn path_endpoints() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(schmidt_rank(&p3, Bipartition::new(3, 0b101).unwrap()), 1);
    }

    #[test]
    fn cycle_alternating_split() {
        let c8 = Graph::cycle(8).unwrap();
        // Odd/even split: every row has two ones and they sum to zero.
        assert_eq!(
            schmidt_rank(&c8, Bipartition::new(8, 0b0101_0101).unwrap()),
            3
        );
        assert_eq!(
            schmidt_rank(&c8, Bipartition::new(8, 0b0011_0011).unwrap()),
            4
        );
        assert_eq!(sr_max(&c8), 4);
        let ri = rank_indexes(&c8);
        assert!(ri.ri(4)[0] > 0);
    }

    #[test]
    fn star_rank_indexes() {
        let ri = rank_indexes(&Graph::star(8).unwrap());
        assert_eq!(ri.ri(4), vec![0, 0, 0, 35]);
        assert_eq!(ri.ri(3), vec![0, 0, 56]);
        assert_eq!(ri.ri(2), vec![0, 28]);
        assert_eq!(ri.ri(1), vec![8]);
        assert!(!ri.is_maximal());
    }

    #[test]
    fn symmetric_in_sides() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)]).unwrap();
        for m in 1u32..63 {
            let rows_a = gf2::rank(bits(m).map(|a| g.neighbors(a) & !m & 63));
            let rows_b = gf2::rank(bits(!m & 63).map(|b| g.neighbors(b) & m));
            assert_eq!(rows_a, rows_b);
            assert_eq!(schmidt_rank(&g, Bipartition::new(6, m).unwrap()), rows_a);
        }
    }
}
