//! Canonical labeling by individualization and refinement.
//!
//! Vertices are split into an ordered partition by iterated neighbor-count
//! refinement (starting from the degree sequence). When refinement stalls,
//! every vertex of the first non-singleton cell is individualized in turn
//! and the search recurses. Each discrete leaf is a relabeling; the
//! canonical form is the lexicographically smallest upper-triangle bit
//! string among the leaves. The leaf set only depends on the isomorphism
//! class, so two graphs share a form exactly when they are isomorphic.

use std::cmp::Ordering;
use std::fmt;

use super::{bits, Graph, MAX_VERTICES};

/// Bumped whenever the labeling procedure changes; cached forms carry it.
pub const CANON_VERSION: u32 = 1;

const WORDS: usize = (MAX_VERTICES * (MAX_VERTICES - 1) / 2).div_ceil(64);

/// Upper triangle of the canonically relabeled adjacency matrix, row-major
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`, packed most significant bit
/// first. Ordering is by vertex count, then lexicographic on the bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    words: [u64; WORDS],
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bit_len(&self) -> usize {
        self.n() * self.n().saturating_sub(1) / 2
    }

    #[inline]
    pub fn bit(&self, k: usize) -> bool {
        self.words[k / 64] >> (63 - k % 64) & 1 == 1
    }

    /// The canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n).expect("canonical forms hold valid sizes");
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bit(k) {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    /// Reads off the form of a graph that is already canonically labeled,
    /// e.g. one produced by [`CanonicalForm::to_graph`].
    pub fn of_labeled(g: &Graph) -> CanonicalForm {
        let order: Vec<usize> = (0..g.n()).collect();
        CanonicalForm {
            n: g.n() as u8,
            words: code(g, &order),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({}:", self.n)?;
        for k in 0..self.bit_len() {
            f.write_str(if self.bit(k) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut best: Option<[u64; WORDS]> = None;
    let mut part = Partition::unit(n);
    let mut order = [0usize; MAX_VERTICES];
    search(g, &mut part, &mut best, &mut order);
    CanonicalForm {
        n: n as u8,
        words: best.unwrap_or([0; WORDS]),
    }
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u32; MAX_VERTICES],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_VERTICES];
        let len = if n == 0 {
            0
        } else {
            cells[0] = super::full_mask(n);
            1
        };
        Partition { cells, len }
    }

    fn cells(&self) -> &[u32] {
        &self.cells[..self.len]
    }
}

/// Splits cells by the number of neighbors each vertex has in every cell
/// until the partition is equitable.
fn refine(g: &Graph, part: &mut Partition) {
    loop {
        let mut next = Partition {
            cells: [0; MAX_VERTICES],
            len: 0,
        };
        let mut split = false;
        for &cell in part.cells() {
            if cell.count_ones() == 1 {
                next.cells[next.len] = cell;
                next.len += 1;
                continue;
            }
            let mut keyed: Vec<([u8; MAX_VERTICES], usize)> = bits(cell)
                .map(|v| {
                    let row = g.neighbors(v);
                    let mut sig = [0u8; MAX_VERTICES];
                    for (k, &c) in part.cells().iter().enumerate() {
                        sig[k] = (row & c).count_ones() as u8;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            while start < keyed.len() {
                let mut end = start + 1;
                while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                    end += 1;
                }
                next.cells[next.len] = keyed[start..end].iter().fold(0, |m, &(_, v)| m | (1 << v));
                next.len += 1;
                start = end;
            }
            if keyed.len() > 1 && keyed[0].0 != keyed[keyed.len() - 1].0 {
                split = true;
            }
        }
        *part = next;
        if !split {
            return;
        }
    }
}

fn search(
    g: &Graph,
    part: &mut Partition,
    best: &mut Option<[u64; WORDS]>,
    order: &mut [usize; MAX_VERTICES],
) {
    refine(g, part);
    let n = g.n();
    if part.len == n {
        for (pos, &cell) in part.cells().iter().enumerate() {
            order[pos] = cell.trailing_zeros() as usize;
        }
        let c = code(g, &order[..n]);
        if best.is_none_or(|b| c.cmp(&b) == Ordering::Less) {
            *best = Some(c);
        }
        return;
    }
    let target = part
        .cells()
        .iter()
        .position(|c| c.count_ones() > 1)
        .expect("non-discrete partition has a non-singleton cell");
    let cell = part.cells[target];
    for v in bits(cell) {
        let mut child = Partition {
            cells: [0; MAX_VERTICES],
            len: part.len + 1,
        };
        child.cells[..target].copy_from_slice(&part.cells[..target]);
        child.cells[target] = 1 << v;
        child.cells[target + 1] = cell & !(1 << v);
        child.cells[target + 2..part.len + 1].copy_from_slice(&part.cells[target + 1..part.len]);
        search(g, &mut child, best, order);
    }
}

/// Upper-triangle bits of `g` relabeled so that `order[pos]` sits at `pos`.
fn code(g: &Graph, order: &[usize]) -> [u64; WORDS] {
    let n = order.len();
    let mut words = [0u64; WORDS];
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(order[i]);
        for &vj in &order[i + 1..n] {
            if row & (1 << vj) != 0 {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}
