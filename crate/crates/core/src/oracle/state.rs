//! Dense state vectors. Qubit `k` is bit `k` of the basis index.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::pauli::{Letter, PauliString};
use crate::error::{check_size, Error, Result};
use crate::graph::{bits, Graph};
use crate::invariants::Bipartition;

pub const MAX_ORACLE: usize = 12;

/// Singular values above this count toward the Schmidt rank.
pub const SVD_THRESHOLD: f64 = 1e-9;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amp: Vec<Complex64>,
}

impl StateVector {
    pub fn from_amplitudes(n: usize, amp: Vec<Complex64>) -> Result<Self> {
        check_size(n, 0, MAX_ORACLE)?;
        if amp.len() != 1 << n {
            return Err(Error::Oracle(format!(
                "{} amplitudes for {n} qubits",
                amp.len()
            )));
        }
        Ok(StateVector { n, amp })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(mut self) -> Self {
        let s = self.norm();
        self.amp.iter_mut().for_each(|a| *a /= s);
        self
    }

    /// Largest amplitude difference.
    pub fn distance(&self, other: &StateVector) -> f64 {
        assert_eq!(self.n, other.n);
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn apply(&self, p: &PauliString) -> StateVector {
        assert_eq!(p.n(), self.n, "Pauli string on the wrong qubit count");
        let mut flip = 0usize;
        let (mut zs, mut ys) = (0usize, 0usize);
        for (k, l) in p.letters().iter().enumerate() {
            match l {
                Letter::I => {}
                Letter::X => flip |= 1 << k,
                Letter::Y => {
                    flip |= 1 << k;
                    ys |= 1 << k;
                }
                Letter::Z => zs |= 1 << k,
            }
        }
        // Y|0> = i|1>, Y|1> = -i|0>: a factor i per Y, and -1 per Y on a 1.
        let base = I.powu(p.phase() as u32 + ys.count_ones());
        let mut out = vec![Complex64::new(0.0, 0.0); self.amp.len()];
        for (x, &a) in self.amp.iter().enumerate() {
            let sign = if ((x & (zs | ys)).count_ones() & 1) == 1 {
                -1.0
            } else {
                1.0
            };
            out[x ^ flip] = base * a * sign;
        }
        StateVector {
            n: self.n,
            amp: out,
        }
    }

    /// Projects qubit `v` onto `<bra|` and drops it; not renormalized.
    pub fn contract(&self, v: usize, bra: [Complex64; 2]) -> StateVector {
        let low = (1usize << v) - 1;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amp.len() / 2];
        for (x, &a) in self.amp.iter().enumerate() {
            let y = (x & low) | ((x >> (v + 1)) << v);
            out[y] += bra[(x >> v) & 1] * a;
        }
        StateVector {
            n: self.n - 1,
            amp: out,
        }
    }

    /// `2^|A| x 2^|B|` matrix of amplitudes.
    pub fn split_matrix(&self, bp: Bipartition) -> DMatrix<Complex64> {
        let a: Vec<usize> = bits(bp.a_mask()).collect();
        let b: Vec<usize> = bits(bp.b_mask()).collect();
        let gather = |x: usize, qs: &[usize]| {
            qs.iter()
                .enumerate()
                .fold(0, |acc, (k, &q)| acc | (((x >> q) & 1) << k))
        };
        let mut m = DMatrix::zeros(1 << a.len(), 1 << b.len());
        for (x, &amp) in self.amp.iter().enumerate() {
            m[(gather(x, &a), gather(x, &b))] = amp;
        }
        m
    }

    /// Number of Schmidt coefficients across `bp`.
    pub fn schmidt_count(&self, bp: Bipartition) -> usize {
        self.split_matrix(bp)
            .singular_values()
            .iter()
            .filter(|&&s| s > SVD_THRESHOLD)
            .count()
    }

    /// `log2` of the Schmidt coefficient count; errors if the count is not a
    /// power of two.
    pub fn schmidt_rank(&self, bp: Bipartition) -> Result<u32> {
        let count = self.schmidt_count(bp);
        if !count.is_power_of_two() {
            return Err(Error::Oracle(format!(
                "{count} Schmidt coefficients across {:#b}",
                bp.a_mask()
            )));
        }
        Ok(count.trailing_zeros())
    }

    /// Schmidt ranks over [`Bipartition::all`], in that order.
    pub fn rank_profile(&self) -> Result<Vec<u32>> {
        Bipartition::all(self.n)
            .map(|bp| self.schmidt_rank(bp))
            .collect()
    }
}

/// `|G>`: controlled-Z along every edge applied to `|+>^n`.
pub fn build_state(g: &Graph) -> Result<StateVector> {
    let n = g.n();
    check_size(n, 0, MAX_ORACLE)?;
    let scale = (0.5f64).powf(n as f64 / 2.0);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let amp = (0..1usize << n)
        .map(|x| {
            let odd = edges
                .iter()
                .filter(|&&(u, v)| (x >> u) & (x >> v) & 1 == 1)
                .count()
                & 1;
            Complex64::new(if odd == 1 { -scale } else { scale }, 0.0)
        })
        .collect();
    Ok(StateVector { n, amp })
}
