//! Exact Thue numbers of tiny graphs by backtracking.
//!
//! Vertices are colored in id order. A vertex may take any color already
//! in use or the next unused one, so each coloring is visited once up to a
//! renaming of colors. After each assignment only the paths through the
//! newest vertex are tested, since every other path was tested earlier.

use serde::{Deserialize, Serialize};

use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum PiOutcome {
    /// The Thue number, with a non-repetitive coloring attaining it.
    Exact { value: usize, coloring: Vec<u32> },
    /// No non-repetitive coloring with at most `max_colors` colors.
    Exceeds { max_colors: usize },
}

pub fn exact_pi(graph: &Graph, max_colors: usize) -> PiOutcome {
    let n = graph.vertex_count();
    if n == 0 {
        return PiOutcome::Exact {
            value: 0,
            coloring: Vec::new(),
        };
    }
    for c in 1..=max_colors {
        let mut s = Solver {
            graph,
            colors: vec![u32::MAX; n],
            palette: c as u32,
        };
        if s.assign(0, 0) {
            return PiOutcome::Exact {
                value: c,
                coloring: s.colors,
            };
        }
    }
    PiOutcome::Exceeds { max_colors }
}

struct Solver<'a> {
    graph: &'a Graph,
    colors: Vec<u32>,
    palette: u32,
}

impl Solver<'_> {
    fn assign(&mut self, v: usize, used: u32) -> bool {
        if v == self.colors.len() {
            return true;
        }
        let top = (used + 1).min(self.palette);
        for c in 0..top {
            self.colors[v] = c;
            if !self.repetitive_through(v) && self.assign(v + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = u32::MAX;
        false
    }

    fn colored(&self, u: usize) -> bool {
        self.colors[u] != u32::MAX
    }

    /// Whether some path through `v` inside the colored part is a square.
    fn repetitive_through(&self, v: usize) -> bool {
        let mut on = vec![false; self.colors.len()];
        on[v] = true;
        let mut arm = vec![v];
        self.grow_arm(&mut arm, &mut on)
    }

    // For every arm leaving v, try every second arm leaving v disjoint from it.
    fn grow_arm(&self, arm: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let mut other = vec![arm[0]];
        if self.grow_other(arm, &mut other, on) {
            return true;
        }
        let last = *arm.last().unwrap();
        for &u in self.graph.neighbor_slice(last) {
            let u = u as usize;
            if on[u] || !self.colored(u) {
                continue;
            }
            on[u] = true;
            arm.push(u);
            let hit = self.grow_arm(arm, on);
            arm.pop();
            on[u] = false;
            if hit {
                return true;
            }
        }
        false
    }

    fn grow_other(&self, arm: &[usize], other: &mut Vec<usize>, on: &mut [bool]) -> bool {
        // path = reverse(other) followed by arm without its first vertex
        let len = arm.len() + other.len() - 1;
        if len.is_multiple_of(2) {
            let at = |i: usize| {
                if i < other.len() {
                    other[other.len() - 1 - i]
                } else {
                    arm[i - other.len() + 1]
                }
            };
            let k = len / 2;
            if (0..k).all(|i| self.colors[at(i)] == self.colors[at(i + k)]) {
                return true;
            }
        }
        let last = *other.last().unwrap();
        for &u in self.graph.neighbor_slice(last) {
            let u = u as usize;
            if on[u] || !self.colored(u) {
                continue;
            }
            on[u] = true;
            other.push(u);
            let hit = self.grow_other(arm, other, on);
            other.pop();
            on[u] = false;
            if hit {
                return true;
            }
        }
        false
    }
}
