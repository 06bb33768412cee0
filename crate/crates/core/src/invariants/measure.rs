//! Graph rules for single-qubit Pauli measurements on graph states.
//!
//! Measuring vertex `v` leaves a graph state on the remaining vertices (up to
//! local unitaries):
//! - `Z`: delete `v`;
//! - `Y`: complement locally at `v`, then delete `v`;
//! - `X`: with a neighbor `b0`, complement at `b0`, apply the `Y` rule at
//!   `v`, then complement at `b0` again.
//!
//! An isolated `v` is simply deleted in every basis.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lc::local_complement_unchecked;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliBasis {
    X,
    Y,
    Z,
}

impl PauliBasis {
    pub const ALL: [PauliBasis; 3] = [PauliBasis::X, PauliBasis::Y, PauliBasis::Z];
}

impl fmt::Display for PauliBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PauliBasis::X => "X",
            PauliBasis::Y => "Y",
            PauliBasis::Z => "Z",
        })
    }
}

impl FromStr for PauliBasis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "X" | "x" => Ok(PauliBasis::X),
            "Y" | "y" => Ok(PauliBasis::Y),
            "Z" | "z" => Ok(PauliBasis::Z),
            _ => Err(format!("unknown Pauli basis {s:?}")),
        }
    }
}

/// Post-measurement graph on `V \ {v}`; vertices above `v` shift down by one.
///
/// `b0` selects the neighbor used by the `X` rule and defaults to the
/// lowest-numbered neighbor. It is ignored for `Y` and `Z`.
pub fn pauli_measure(g: &Graph, v: usize, basis: PauliBasis, b0: Option<usize>) -> Result<Graph> {
    g.check_vertex(v)?;
    if g.neighbors(v) == 0 {
        return g.remove_vertex(v);
    }
    match basis {
        PauliBasis::Z => g.remove_vertex(v),
        PauliBasis::Y => local_complement_unchecked(g, v).remove_vertex(v),
        PauliBasis::X => {
            let b0 = match b0 {
                Some(b) => {
                    g.check_vertex(b)?;
                    if !g.has_edge(v, b) {
                        return Err(Error::NotANeighbor { vertex: v, b0: b });
                    }
                    b
                }
                None => g.neighbors(v).trailing_zeros() as usize,
            };
            Ok(measure_x_unchecked(g, v, b0))
        }
    }
}

#[inline]
pub(crate) fn measure_x_unchecked(g: &Graph, v: usize, b0: usize) -> Graph {
    let h = local_complement_unchecked(g, b0);
    let h = local_complement_unchecked(&h, v);
    let h = h.remove_vertex(v).expect("vertex in range");
    let b0 = if b0 > v { b0 - 1 } else { b0 };
    local_complement_unchecked(&h, b0)
}
