//! Depth-first enumeration of simple paths with square detection.
//!
//! Work is split into one task per directed edge `(start, second)`. Each
//! task owns its stack, visited set and rolling hash; only the node counter
//! and the abort flag are shared.
//!
//! A path with `d` vertices can still grow into a repetitive path on `2k`
//! vertices only if `d <= 2k` and its last `d - k` colors repeat its first
//! `d - k`. The search tracks the set of half lengths `k` still possible as
//! a bit mask and drops a prefix once the mask is empty. Every path that is
//! itself repetitive keeps its own `k` alive along the way, so pruning never
//! hides a witness.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{PathWitness, SearchBudget, Status, VerifyReport};
use crate::colorings::ColoredGraph;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::hash::StackHash;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Drop prefixes that cannot extend to a square within the budget.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

const FLUSH_EVERY: u64 = 4096;

struct Shared {
    nodes: AtomicU64,
    abort: AtomicBool,
    max_nodes: u64,
    stop_on_witness: bool,
}

impl Shared {
    fn add(&self, n: u64) {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.max_nodes {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

struct TaskResult {
    witness: Option<Vec<u32>>,
}

struct Walker<'a> {
    graph: &'a Graph,
    colors: &'a [u32],
    k_max: usize,
    prune: bool,
    shared: &'a Shared,
    path: Vec<u32>,
    word: Vec<u32>,
    hash: StackHash,
    visited: Vec<bool>,
    pending: u64,
    limit: usize,
    best: Option<Vec<u32>>,
}

impl<'a> Walker<'a> {
    fn new(cg: &'a ColoredGraph, k_max: usize, prune: bool, shared: &'a Shared) -> Self {
        let n = cg.graph().vertex_count();
        Walker {
            graph: cg.graph(),
            colors: cg.colors(),
            k_max,
            prune,
            shared,
            path: Vec::with_capacity(2 * k_max),
            word: Vec::with_capacity(2 * k_max),
            hash: StackHash::with_capacity(2 * k_max),
            visited: vec![false; n],
            pending: 0,
            limit: 2 * k_max,
            best: None,
        }
    }

    /// Half lengths align at bits `1..=k_max`.
    fn full_mask(&self) -> u64 {
        ((1u64 << (self.k_max + 1)) - 1) & !1
    }

    /// Mask after appending `color` to a word of length `d`.
    #[inline(always)]
    fn child_mask(&self, mask: u64, d: usize, color: u32) -> u64 {
        if !self.prune {
            return mask;
        }
        let len = d + 1;
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            if 2 * k >= len && (len <= k || self.word[d - k] == color) {
                out |= 1 << k;
            }
        }
        out
    }

    fn push(&mut self, v: u32) {
        self.path.push(v);
        let c = self.colors[v as usize];
        self.word.push(c);
        self.hash.push(c);
        self.visited[v as usize] = true;
    }

    fn pop(&mut self) {
        let v = self.path.pop().unwrap();
        self.word.pop();
        self.hash.pop();
        self.visited[v as usize] = false;
    }

    fn flush(&mut self) {
        if self.pending > 0 {
            self.shared.add(self.pending);
            self.pending = 0;
        }
    }

    fn run(&mut self, start: u32, second: u32) -> TaskResult {
        self.limit = 2 * self.k_max;
        self.best = None;
        let m1 = self.full_mask();
        self.push(start);
        let m2 = self.child_mask(m1, 1, self.colors[second as usize]);
        if m2 != 0 || !self.prune {
            self.push(second);
            self.descend(m2);
            self.pop();
        }
        self.pop();
        self.flush();
        TaskResult {
            witness: self.best.take(),
        }
    }

    fn is_square(&self) -> bool {
        let d = self.word.len();
        let k = d / 2;
        self.hash.range(0, k) == self.hash.range(k, d) && self.word[..k] == self.word[k..]
    }

    fn descend(&mut self, mask: u64) {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        if self.shared.abort.load(Ordering::Relaxed) {
            return;
        }
        let d = self.path.len();
        if d.is_multiple_of(2) && self.is_square() {
            self.best = Some(self.path.clone());
            // later finds in this task are longer or lexicographically larger
            self.limit = d - 1;
            if self.shared.stop_on_witness {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
            return;
        }
        if d >= self.limit {
            return;
        }
        let last = *self.path.last().unwrap() as usize;
        let graph = self.graph;
        for &u in graph.neighbor_slice(last) {
            if self.visited[u as usize] {
                continue;
            }
            let m = self.child_mask(mask, d, self.colors[u as usize]);
            if m == 0 && self.prune {
                continue;
            }
            self.push(u);
            self.descend(m);
            self.pop();
            if d >= self.limit || self.shared.abort.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Searches `cg` for a repetitive path on at most `2 * budget.k_max`
/// vertices.
pub fn find_repetitive_path(cg: &ColoredGraph, budget: SearchBudget) -> Result<VerifyReport> {
    find_repetitive_path_with(cg, budget, SearchOptions::default())
}

pub fn find_repetitive_path_with(
    cg: &ColoredGraph,
    budget: SearchBudget,
    options: SearchOptions,
) -> Result<VerifyReport> {
    budget.validate()?;
    let started = Instant::now();
    let graph = cg.graph();
    let n = graph.vertex_count();
    let shared = Shared {
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        max_nodes: budget.max_nodes,
        stop_on_witness: !budget.deterministic,
    };
    shared.add(n as u64);
    let tasks: Vec<(u32, u32)> = (0..n)
        .flat_map(|s| graph.neighbor_slice(s).iter().map(move |&t| (s as u32, t)))
        .collect();

    let run_all = || -> Vec<TaskResult> {
        if shared.abort.load(Ordering::Relaxed) {
            return Vec::new();
        }
        if budget.parallelism == 1 {
            let mut w = Walker::new(cg, budget.k_max, options.prune, &shared);
            tasks.iter().map(|&(s, t)| w.run(s, t)).collect()
        } else {
            tasks
                .par_iter()
                .map_init(
                    || Walker::new(cg, budget.k_max, options.prune, &shared),
                    |w, &(s, t)| w.run(s, t),
                )
                .collect()
        }
    };
    let results = if budget.parallelism == 1 {
        run_all()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(budget.parallelism)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run_all)
    };

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let exhausted = nodes > budget.max_nodes;
    // tasks come in lexicographic (start, second) order
    let best = results
        .into_iter()
        .filter_map(|r| r.witness)
        .fold(None::<Vec<u32>>, |acc, w| match acc {
            Some(a) if a.len() <= w.len() => Some(a),
            _ => Some(w),
        });

    let (status, witness) = match (exhausted, best) {
        (false, Some(w)) => (Status::Witness, Some(w)),
        (true, Some(w)) if !budget.deterministic => (Status::Witness, Some(w)),
        (true, _) => (Status::BudgetExhausted, None),
        (false, None) => (Status::Pass, None),
    };
    let witness = witness.map(|w| PathWitness {
        k: w.len() / 2,
        vertices: w.into_iter().map(|v| v as usize).collect(),
    });
    let (witness_payloads, witness_colors) = match &witness {
        Some(w) => (
            w.vertices
                .iter()
                .map(|&v| graph.payload(v).to_vec())
                .collect(),
            w.vertices
                .iter()
                .map(|&v| cg.label(v).to_string())
                .collect(),
        ),
        None => (Vec::new(), Vec::new()),
    };
    let nodes_visited = if exhausted && budget.deterministic {
        budget.max_nodes
    } else {
        nodes
    };
    Ok(VerifyReport {
        status,
        construction: VerifyReport::describe(cg),
        budget,
        nodes_visited,
        elapsed_ms: started.elapsed().as_millis() as u64,
        witness,
        witness_payloads,
        witness_colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::validate_witness;

    fn path_colored(colors: &[u32]) -> ColoredGraph {
        ColoredGraph::from_ids(Graph::path(colors.len()).unwrap(), colors.to_vec()).unwrap()
    }

    #[test]
    fn abab_path_is_its_own_witness() {
        let cg = path_colored(&[0, 1, 0, 1]);
        let r = find_repetitive_path(&cg, SearchBudget::new(2)).unwrap();
        assert_eq!(r.status, Status::Witness);
        let w = r.witness.unwrap();
        assert_eq!(w.k, 2);
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert_eq!(validate_witness(&cg, &w), Ok(()));
    }

    #[test]
    fn square_free_path_passes() {
        let cg = path_colored(&[0, 1, 2, 0, 2, 1, 0, 1, 2, 1, 0, 2]);
        let r = find_repetitive_path(&cg, SearchBudget::new(6)).unwrap();
        assert_eq!(r.status, Status::Pass);
        let unpruned =
            find_repetitive_path_with(&cg, SearchBudget::new(6), SearchOptions { prune: false })
                .unwrap();
        assert_eq!(unpruned.status, Status::Pass);
        assert!(unpruned.nodes_visited >= r.nodes_visited);
    }

    #[test]
    fn budget_limits_half_length() {
        // abcabc needs k = 3
        let cg = path_colored(&[0, 1, 2, 0, 1, 2]);
        assert_eq!(
            find_repetitive_path(&cg, SearchBudget::new(2))
                .unwrap()
                .status,
            Status::Pass
        );
        assert_eq!(
            find_repetitive_path(&cg, SearchBudget::new(3))
                .unwrap()
                .status,
            Status::Witness
        );
    }

    #[test]
    fn smallest_witness_wins() {
        // squares: "aa" at 4-5 (length 2) beats the length-4 square at the start
        let cg = path_colored(&[0, 1, 0, 1, 2, 2]);
        let r = find_repetitive_path(&cg, SearchBudget::new(3)).unwrap();
        assert_eq!(r.witness.unwrap().vertices, vec![4, 5]);
    }

    #[test]
    fn tiny_budget_is_exhausted_not_pass() {
        let cg = path_colored(&[0, 1, 2, 0, 2, 1, 0, 1, 2, 1, 0, 2]);
        let r = find_repetitive_path(&cg, SearchBudget::new(6).with_max_nodes(20)).unwrap();
        assert_eq!(r.status, Status::BudgetExhausted);
        assert_eq!(r.nodes_visited, 20);
        assert!(r.to_json().get("witness").is_none());
    }

    #[test]
    fn rejects_bad_budget() {
        let cg = path_colored(&[0, 1]);
        assert!(find_repetitive_path(&cg, SearchBudget::new(0)).is_err());
        assert!(find_repetitive_path(&cg, SearchBudget::new(1).with_parallelism(0)).is_err());
    }
}
