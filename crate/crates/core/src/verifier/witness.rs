use std::collections::HashSet;
use thiserror::Error;

use super::PathWitness;
use crate::colorings::ColoredGraph;

/// Why a claimed witness is not a repetitive path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidWitness {
    #[error("witness has {len} vertices, expected 2k = {expected}")]
    WrongLength { len: usize, expected: usize },
    #[error("witness is empty")]
    Empty,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("vertex {0} appears twice")]
    RepeatedVertex(usize),
    #[error("positions {0} and {} are not adjacent", .0 + 1)]
    NotAdjacent(usize),
    #[error("colors differ at positions {0} and {}", .0 + .1)]
    ColorMismatch(usize, usize),
}

/// Re-checks a witness from scratch: length `2k`, distinct vertices,
/// consecutive adjacency, and equal color halves.
pub fn validate_witness(cg: &ColoredGraph, w: &PathWitness) -> Result<(), InvalidWitness> {
    let vs = &w.vertices;
    if w.k == 0 {
        return Err(InvalidWitness::Empty);
    }
    if vs.len() != 2 * w.k {
        return Err(InvalidWitness::WrongLength {
            len: vs.len(),
            expected: 2 * w.k,
        });
    }
    let n = cg.graph().vertex_count();
    let mut seen = HashSet::new();
    for &v in vs {
        if v >= n {
            return Err(InvalidWitness::UnknownVertex(v));
        }
        if !seen.insert(v) {
            return Err(InvalidWitness::RepeatedVertex(v));
        }
    }
    for (i, pair) in vs.windows(2).enumerate() {
        if !cg
            .graph()
            .neighbors(pair[0])
            .is_ok_and(|l| l.contains(&pair[1]))
        {
            return Err(InvalidWitness::NotAdjacent(i));
        }
    }
    for i in 0..w.k {
        if cg.color(vs[i]) != cg.color(vs[w.k + i]) {
            return Err(InvalidWitness::ColorMismatch(i, w.k));
        }
    }
    Ok(())
}
