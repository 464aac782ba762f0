//! Finite graphs: lattice boxes under Cartesian, tensor or strong adjacency,
//! tensor components, rook graphs and biclique products.
//!
//! Every vertex carries an integer coordinate payload (a lattice point, or a
//! board cell `(i, j)`). Vertices are stored in lexicographic payload order
//! and adjacency lists are sorted, so iteration is reproducible.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Adjacency {
    /// Exactly one coordinate moves by one.
    Cartesian,
    /// Every coordinate moves by one.
    Tensor,
    /// Either of the above.
    Strong,
}

impl fmt::Display for Adjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Adjacency::Cartesian => "cartesian",
            Adjacency::Tensor => "tensor",
            Adjacency::Strong => "strong",
        })
    }
}

impl FromStr for Adjacency {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" => Ok(Adjacency::Cartesian),
            "tensor" => Ok(Adjacency::Tensor),
            "strong" => Ok(Adjacency::Strong),
            _ => Err(Error::InvalidParameter(format!("unknown adjacency {s:?}"))),
        }
    }
}

/// An axis-aligned box of the integer lattice with inclusive bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeRegion {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl LatticeRegion {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.is_empty() {
            return Err(Error::InvalidRegion("dimension must be at least 1".into()));
        }
        if lo.len() != hi.len() {
            return Err(Error::InvalidRegion("lo and hi differ in dimension".into()));
        }
        if let Some(i) = (0..lo.len()).find(|&i| lo[i] > hi[i]) {
            return Err(Error::InvalidRegion(format!(
                "axis {i} is empty ({} > {})",
                lo[i], hi[i]
            )));
        }
        Ok(LatticeRegion { lo, hi })
    }

    /// `[lo, hi]` on every one of `dim` axes.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        LatticeRegion::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn side(&self, axis: usize) -> usize {
        (self.hi[axis] - self.lo[axis] + 1) as usize
    }

    pub fn vertex_count(&self) -> usize {
        (0..self.dim()).map(|i| self.side(i)).product()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .enumerate()
                .all(|(i, &x)| self.lo[i] <= x && x <= self.hi[i])
    }

    /// All lattice points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let total = self.vertex_count();
        (0..total).map(move |mut idx| {
            let mut p = vec![0; self.dim()];
            for axis in (0..self.dim()).rev() {
                let side = self.side(axis);
                p[axis] = self.lo[axis] + (idx % side) as i64;
                idx /= side;
            }
            p
        })
    }
}

impl fmt::Display for LatticeRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", self.lo[i], self.hi[i])?;
        }
        Ok(())
    }
}

/// Parses `lo:hi[,lo:hi...]`.
impl FromStr for LatticeRegion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for part in s.split(',') {
            let (a, b) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidRegion(format!("expected lo:hi, got {part:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidRegion(format!("bad bound {t:?}")))
            };
            lo.push(parse(a)?);
            hi.push(parse(b)?);
        }
        LatticeRegion::new(lo, hi)
    }
}

/// What a graph was built from; echoed in summaries and reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "lowercase")]
pub enum Family {
    Box {
        region: LatticeRegion,
        adjacency: Adjacency,
    },
    Component {
        region: LatticeRegion,
        base: Vec<i64>,
    },
    Rook {
        n: usize,
    },
    Biclique {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Custom {
        n: usize,
    },
}

/// Immutable simple graph with coordinate payloads and sorted adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    family: Family,
    dim: usize,
    coords: Vec<i64>,
    start: Vec<usize>,
    adj: Vec<u32>,
    index: HashMap<Vec<i64>, VertexId>,
}

fn adjacent_points(a: &[i64], b: &[i64], rule: Adjacency) -> bool {
    let mut moved = 0;
    for (x, y) in a.iter().zip(b) {
        match (x - y).abs() {
            0 => {}
            1 => moved += 1,
            _ => return false,
        }
    }
    match rule {
        Adjacency::Cartesian => moved == 1,
        Adjacency::Tensor => moved == a.len(),
        // union of the two rules; equals the king move only up to dimension 2
        Adjacency::Strong => moved == 1 || moved == a.len(),
    }
}

/// Offsets in `{-1, 0, 1}^dim` that realize one step under `rule`.
fn steps(dim: usize, rule: Adjacency) -> Vec<Vec<i64>> {
    let mut all = vec![vec![]];
    for _ in 0..dim {
        all = all
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                [-1, 0, 1].into_iter().map(move |d| {
                    let mut q = p.clone();
                    q.push(d);
                    q
                })
            })
            .collect();
    }
    let origin = vec![0; dim];
    all.into_iter()
        .filter(|d| adjacent_points(d, &origin, rule))
        .collect()
}

impl Graph {
    fn from_parts(
        family: Family,
        dim: usize,
        points: Vec<Vec<i64>>,
        lists: Vec<Vec<u32>>,
    ) -> Graph {
        let mut coords = Vec::with_capacity(points.len() * dim);
        let mut index = HashMap::with_capacity(points.len());
        for (v, p) in points.into_iter().enumerate() {
            coords.extend_from_slice(&p);
            index.insert(p, v);
        }
        let mut start = Vec::with_capacity(lists.len() + 1);
        let mut adj = Vec::new();
        start.push(0);
        for mut l in lists {
            l.sort_unstable();
            l.dedup();
            adj.extend_from_slice(&l);
            start.push(adj.len());
        }
        Graph {
            family,
            dim,
            coords,
            start,
            adj,
            index,
        }
    }

    fn lattice(family: Family, points: Vec<Vec<i64>>, rule: Adjacency) -> Graph {
        let dim = points.first().map_or(0, |p| p.len());
        let index: HashMap<&[i64], u32> = points
            .iter()
            .enumerate()
            .map(|(v, p)| (p.as_slice(), v as u32))
            .collect();
        let deltas = steps(dim, rule);
        let lists = points
            .iter()
            .map(|p| {
                deltas
                    .iter()
                    .filter_map(|d| {
                        let q: Vec<i64> = p.iter().zip(d).map(|(x, dx)| x + dx).collect();
                        index.get(q.as_slice()).copied()
                    })
                    .collect()
            })
            .collect();
        Graph::from_parts(family, dim, points, lists)
    }

    /// Builds a graph from an explicit edge list. Payloads are `(i)`. Intended
    /// for oracle tests and tiny `pi` instances.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edges_with_family(Family::Custom { n }, n, edges)
    }

    fn from_edges_with_family(family: Family, n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        let points = (0..n as i64).map(|i| vec![i]).collect();
        Ok(Graph::from_parts(family, 1, points, lists))
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "path needs at least one vertex".into(),
            ));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges_with_family(Family::Path { n }, n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(
                "cycle needs at least 3 vertices".into(),
            ));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges_with_family(Family::Cycle { n }, n, &edges)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Coordinate dimension of the payloads.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.start.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn payload(&self, v: VertexId) -> &[i64] {
        &self.coords[v * self.dim..(v + 1) * self.dim]
    }

    pub fn vertex_of(&self, p: &[i64]) -> Option<VertexId> {
        self.index.get(p).copied()
    }

    /// Sorted neighbor ids of `v`, as stored.
    #[inline]
    pub fn neighbor_slice(&self, v: VertexId) -> &[u32] {
        &self.adj[self.start[v]..self.start[v + 1]]
    }

    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.neighbor_slice(v).iter().map(|&u| u as usize).collect())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.start[v + 1] - self.start[v]
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.neighbor_slice(u).binary_search(&(v as u32)).is_ok()
    }

    /// Undirected edges `(u, v)` with `u < v`, in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbor_slice(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `keep` (ids into this graph), renumbered in the
    /// given order. Payloads are carried over.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Graph> {
        let mut renumber = HashMap::new();
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.vertex_count() {
                return Err(Error::UnknownVertex(old));
            }
            renumber.insert(old, new as u32);
        }
        let points = keep.iter().map(|&v| self.payload(v).to_vec()).collect();
        let lists = keep
            .iter()
            .map(|&v| {
                self.neighbor_slice(v)
                    .iter()
                    .filter_map(|&u| renumber.get(&(u as usize)).copied())
                    .collect()
            })
            .collect();
        Ok(Graph::from_parts(
            Family::Custom { n: keep.len() },
            self.dim,
            points,
            lists,
        ))
    }

    /// JSON summary `{"family":...,"params":...,"vertices":N,"edges":M}`.
    pub fn summary_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(&self.family).expect("family serializes");
        let obj = v.as_object_mut().expect("family is an object");
        obj.insert("vertices".into(), self.vertex_count().into());
        obj.insert("edges".into(), self.edge_count().into());
        v
    }

    /// Debug edge dump, one `u,v` pair per line.
    pub fn edges_csv(&self) -> String {
        let mut out = String::from("u,v\n");
        for (u, v) in self.edges() {
            out.push_str(&format!("{u},{v}\n"));
        }
        out
    }
}

/// All lattice points of `region` under the given adjacency rule.
pub fn build_box(region: &LatticeRegion, adjacency: Adjacency) -> Graph {
    let points: Vec<_> = region.points().collect();
    Graph::lattice(
        Family::Box {
            region: region.clone(),
            adjacency,
        },
        points,
        adjacency,
    )
}

/// The connected component of a tensor box containing `base`: all points
/// whose coordinate differences from `base` share one parity.
pub fn tensor_component(graph: &Graph, base: &[i64]) -> Result<Graph> {
    let region = match graph.family() {
        Family::Box {
            region,
            adjacency: Adjacency::Tensor,
        } => region,
        _ => {
            return Err(Error::InvalidParameter(
                "tensor_component needs a tensor box".into(),
            ))
        }
    };
    if !region.contains(base) {
        return Err(Error::UnknownPoint(base.to_vec()));
    }
    let points = region
        .points()
        .filter(|p| in_tensor_class(p, base))
        .collect();
    Ok(Graph::lattice(
        Family::Component {
            region: region.clone(),
            base: base.to_vec(),
        },
        points,
        Adjacency::Tensor,
    ))
}

pub(crate) fn in_tensor_class(p: &[i64], base: &[i64]) -> bool {
    let d0 = (p[0] - base[0]).rem_euclid(2);
    p.iter().zip(base).all(|(x, b)| (x - b).rem_euclid(2) == d0)
}

/// `K_n □ K_n` on cells `(i, j)`: two cells are adjacent when they share a
/// row or a column.
pub fn build_rook(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "rook graph needs n >= 2, got {n}"
        )));
    }
    let cell = |i: usize, j: usize| (i * n + j) as u32;
    let mut points = Vec::with_capacity(n * n);
    let mut lists = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            points.push(vec![i as i64, j as i64]);
            let mut l = Vec::with_capacity(2 * (n - 1));
            l.extend((0..n).filter(|&j2| j2 != j).map(|j2| cell(i, j2)));
            l.extend((0..n).filter(|&i2| i2 != i).map(|i2| cell(i2, j)));
            lists.push(l);
        }
    }
    Ok(Graph::from_parts(Family::Rook { n }, 2, points, lists))
}

/// `K_{n,n} □ K_{n,n}` on cells `(i, j)` with `0 <= i, j < 2n`. Within each
/// factor the sides are the index halves `{0..n}` and `{n..2n}`.
pub fn build_biclique_product(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "biclique product needs n >= 1".into(),
        ));
    }
    let m = 2 * n;
    let cell = |i: usize, j: usize| (i * m + j) as u32;
    let mut points = Vec::with_capacity(m * m);
    let mut lists = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            points.push(vec![i as i64, j as i64]);
            let mut l = Vec::with_capacity(m);
            l.extend(
                (0..m)
                    .filter(|&j2| (j < n) != (j2 < n))
                    .map(|j2| cell(i, j2)),
            );
            l.extend(
                (0..m)
                    .filter(|&i2| (i < n) != (i2 < n))
                    .map(|i2| cell(i2, j)),
            );
            lists.push(l);
        }
    }
    Ok(Graph::from_parts(Family::Biclique { n }, 2, points, lists))
}
