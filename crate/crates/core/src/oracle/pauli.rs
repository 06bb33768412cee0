//! Pauli strings with exact phase bookkeeping.

use std::fmt;
use std::ops::Mul;

use crate::graph::{bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// `self * other` as `(i^k, letter)`.
    pub fn product(self, other: Letter) -> (u8, Letter) {
        use Letter::*;
        match (self, other) {
            (I, p) | (p, I) => (0, p),
            (X, X) | (Y, Y) | (Z, Z) => (0, I),
            (X, Y) => (1, Z),
            (Y, Z) => (1, X),
            (Z, X) => (1, Y),
            (Y, X) => (3, Z),
            (Z, Y) => (3, X),
            (X, Z) => (3, Y),
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// `i^phase` times a tensor product of single-qubit Paulis; qubit `k` is
/// `letters[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    letters: Vec<Letter>,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString {
            letters: vec![Letter::I; n],
            phase: 0,
        }
    }

    pub fn new(letters: Vec<Letter>, phase: u8) -> Self {
        PauliString {
            letters,
            phase: phase % 4,
        }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, k: usize) -> Letter {
        self.letters[k]
    }

    /// Exponent `k` of the global phase `i^k`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn with_letter(mut self, k: usize, p: Letter) -> Self {
        self.letters[k] = p;
        self
    }

    /// Multiplies the global phase by `i^k`.
    pub fn times_i(mut self, k: u8) -> Self {
        self.phase = (self.phase + k) % 4;
        self
    }

    pub fn negated(self) -> Self {
        self.times_i(2)
    }
}

impl Mul for &PauliString {
    type Output = PauliString;

    fn mul(self, rhs: &PauliString) -> PauliString {
        assert_eq!(self.n(), rhs.n(), "Pauli strings on different qubit counts");
        let mut phase = self.phase + rhs.phase;
        let letters = self
            .letters
            .iter()
            .zip(&rhs.letters)
            .map(|(&a, &b)| {
                let (k, p) = a.product(b);
                phase += k;
                p
            })
            .collect();
        PauliString::new(letters, phase)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["+", "+i", "-", "-i"][self.phase as usize])?;
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

/// Stabilizer generator of vertex `i`: `X` on `i`, `Z` on each neighbor.
pub fn generator(g: &Graph, i: usize) -> PauliString {
    let mut s = PauliString::identity(g.n()).with_letter(i, Letter::X);
    for j in bits(g.neighbors(i)) {
        s = s.with_letter(j, Letter::Z);
    }
    s
}

pub fn generators(g: &Graph) -> Vec<PauliString> {
    (0..g.n()).map(|i| generator(g, i)).collect()
}
