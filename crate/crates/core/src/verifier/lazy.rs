//! Lazy-walk rigidity: every repetitive lazy walk should consist of two
//! identical halves. A lazy walk may stay in place at any step.

use serde::{Deserialize, Serialize};

use crate::colorings::ColoredGraph;
use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexId};
use crate::words::Word;

/// A colored word (walked along its index line) or a colored graph.
#[derive(Debug, Clone, Copy)]
pub enum LazySubject<'a> {
    Word(&'a Word),
    Graph(&'a ColoredGraph),
}

impl<'a> From<&'a Word> for LazySubject<'a> {
    fn from(w: &'a Word) -> Self {
        LazySubject::Word(w)
    }
}

impl<'a> From<&'a ColoredGraph> for LazySubject<'a> {
    fn from(cg: &'a ColoredGraph) -> Self {
        LazySubject::Graph(cg)
    }
}

/// A repetitive lazy walk whose two halves visit different positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LazyWalk {
    pub positions: Vec<VertexId>,
    pub k: usize,
}

/// All counterexamples on walks of at most `2 * k_max` positions.
pub fn check_lazy_walk_rigidity<'a>(
    subject: impl Into<LazySubject<'a>>,
    k_max: usize,
) -> Result<Vec<LazyWalk>> {
    check_lazy_walk_rigidity_limited(subject, k_max, usize::MAX)
}

/// As [`check_lazy_walk_rigidity`], stopping after `limit` counterexamples.
pub fn check_lazy_walk_rigidity_limited<'a>(
    subject: impl Into<LazySubject<'a>>,
    k_max: usize,
    limit: usize,
) -> Result<Vec<LazyWalk>> {
    if !(1..=60).contains(&k_max) {
        return Err(Error::InvalidParameter("k_max must be in 1..=60".into()));
    }
    match subject.into() {
        LazySubject::Word(word) => {
            let needed = 2 * k_max + 1;
            if word.len() < needed {
                return Err(Error::WindowTooSmall {
                    len: word.len(),
                    needed,
                });
            }
            let graph = Graph::path(word.len())?;
            let colors: Vec<u32> = word.symbols().iter().map(|&s| s as u32).collect();
            Ok(Enumerator::new(&graph, &colors, k_max, limit).run())
        }
        LazySubject::Graph(cg) => Ok(Enumerator::new(cg.graph(), cg.colors(), k_max, limit).run()),
    }
}

struct Enumerator<'a> {
    graph: &'a Graph,
    colors: &'a [u32],
    k_max: usize,
    limit: usize,
    walk: Vec<VertexId>,
    word: Vec<u32>,
    found: Vec<LazyWalk>,
}

impl<'a> Enumerator<'a> {
    fn new(graph: &'a Graph, colors: &'a [u32], k_max: usize, limit: usize) -> Self {
        Enumerator {
            graph,
            colors,
            k_max,
            limit,
            walk: Vec::with_capacity(2 * k_max),
            word: Vec::with_capacity(2 * k_max),
            found: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<LazyWalk> {
        let full = ((1u64 << (self.k_max + 1)) - 1) & !1;
        for v in 0..self.graph.vertex_count() {
            self.walk.push(v);
            self.word.push(self.colors[v]);
            self.descend(full);
            self.walk.pop();
            self.word.pop();
            if self.found.len() >= self.limit {
                break;
            }
        }
        self.found
    }

    // bit k of `mask` is set while the walk can still close into a
    // repetitive walk on 2k positions
    fn descend(&mut self, mask: u64) {
        let d = self.walk.len();
        if d.is_multiple_of(2) && mask >> (d / 2) & 1 == 1 {
            let k = d / 2;
            if self.walk[..k] != self.walk[k..] {
                if self.found.len() >= self.limit {
                    return;
                }
                self.found.push(LazyWalk {
                    positions: self.walk.clone(),
                    k,
                });
            }
        }
        if d == 2 * self.k_max || self.found.len() >= self.limit {
            return;
        }
        let last = *self.walk.last().unwrap();
        let graph = self.graph;
        let stay = std::iter::once(last as u32);
        for u in stay.chain(graph.neighbor_slice(last).iter().copied()) {
            let c = self.colors[u as usize];
            let len = d + 1;
            let mut next = 0u64;
            let mut m = mask;
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                m &= m - 1;
                if 2 * k >= len && (len <= k || self.word[d - k] == c) {
                    next |= 1 << k;
                }
            }
            if next == 0 {
                continue;
            }
            self.walk.push(u as usize);
            self.word.push(c);
            self.descend(next);
            self.walk.pop();
            self.word.pop();
        }
    }
}
