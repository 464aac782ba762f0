//! The colorings: pure color functions over vertex payloads, plus the rook
//! and biclique board layouts.
//!
//! Lattice constructions read one or more windows of the ternary word `T`
//! or the palindrome-free word `T*`. Each window is a *slot* with its own
//! integer offset and alphabet; offsets shift every index a construction
//! evaluates so that finite regions anywhere in the lattice stay inside the
//! nonnegative windows.
//!
//! A construction returns a *canonical* color id in a fixed per-kind
//! palette. [`ColoredGraph`] compresses these to the colors actually used,
//! in canonical order.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::{
    build_biclique_product, build_box, build_rook, in_tensor_class, tensor_component, Adjacency,
    Family, Graph, LatticeRegion, VertexId,
};
use crate::words::{generate_thue, labels, thue_star_symbols};

/// Which construction to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstructionKind {
    /// `T*(X - Y)` on the plane.
    Diagonal,
    /// Even and odd diagonal families before the parity split.
    Grid12Base,
    /// The 12-coloring of the grid.
    Grid12,
    /// Product of two `T*` windows on the strong grid.
    Strong16,
    /// `T` times `T*`; contains repetitive paths.
    BadProduct,
    /// Layered coloring of an `n`-fold tensor power component.
    Tensor { n: usize },
    /// Layered 28-coloring of the 3D Cartesian grid.
    Cart3d28,
    /// The `n^2/2` layout on `K_n □ K_n`.
    Rook { n: usize },
    /// The zero/pattern/distinct layout on `K_{n,n} □ K_{n,n}`.
    Biclique { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotWord {
    Thue,
    ThueStar,
}

impl SlotWord {
    fn size(self) -> usize {
        match self {
            SlotWord::Thue => 3,
            SlotWord::ThueStar => 4,
        }
    }
}

fn suffixed(suffix: &str) -> Vec<String> {
    ["a", "b", "c", "d"]
        .iter()
        .map(|l| format!("{l}{suffix}"))
        .collect()
}

impl ConstructionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionKind::Diagonal => "diagonal",
            ConstructionKind::Grid12Base => "grid12-base",
            ConstructionKind::Grid12 => "grid12",
            ConstructionKind::Strong16 => "strong16",
            ConstructionKind::BadProduct => "bad-product",
            ConstructionKind::Tensor { .. } => "tensor",
            ConstructionKind::Cart3d28 => "cart3d28",
            ConstructionKind::Rook { .. } => "rook",
            ConstructionKind::Biclique { .. } => "biclique",
        }
    }

    /// Parses a kind name; `n` is required for `tensor`, `rook` and `biclique`.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Self> {
        let need_n =
            || n.ok_or_else(|| Error::InvalidParameter(format!("construction {name} needs n")));
        Ok(match name {
            "diagonal" => ConstructionKind::Diagonal,
            "grid12-base" => ConstructionKind::Grid12Base,
            "grid12" => ConstructionKind::Grid12,
            "strong16" => ConstructionKind::Strong16,
            "bad-product" => ConstructionKind::BadProduct,
            "tensor" => ConstructionKind::Tensor { n: need_n()? },
            "cart3d28" => ConstructionKind::Cart3d28,
            "rook" => ConstructionKind::Rook { n: need_n()? },
            "biclique" => ConstructionKind::Biclique { n: need_n()? },
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown construction {name:?}"
                )))
            }
        })
    }

    pub fn is_lattice(&self) -> bool {
        !matches!(
            self,
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. }
        )
    }

    /// Lattice dimension the construction colors.
    pub fn lattice_dim(&self) -> Option<usize> {
        match *self {
            ConstructionKind::Tensor { n } => Some(n),
            ConstructionKind::Cart3d28 => Some(3),
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => None,
            _ => Some(2),
        }
    }

    pub fn default_adjacency(&self) -> Option<Adjacency> {
        match self {
            ConstructionKind::Diagonal
            | ConstructionKind::Grid12Base
            | ConstructionKind::Grid12
            | ConstructionKind::Cart3d28 => Some(Adjacency::Cartesian),
            ConstructionKind::Strong16 | ConstructionKind::BadProduct => Some(Adjacency::Strong),
            ConstructionKind::Tensor { .. } => Some(Adjacency::Tensor),
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => None,
        }
    }

    fn slots(&self) -> Vec<SlotWord> {
        use SlotWord::*;
        match *self {
            ConstructionKind::Diagonal => vec![ThueStar],
            ConstructionKind::Grid12Base
            | ConstructionKind::Grid12
            | ConstructionKind::Strong16 => {
                vec![ThueStar, ThueStar]
            }
            ConstructionKind::BadProduct => vec![Thue, ThueStar],
            ConstructionKind::Tensor { n } => vec![ThueStar; n],
            ConstructionKind::Cart3d28 => vec![ThueStar; 3],
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => vec![],
        }
    }

    pub fn default_alphabets(&self) -> Vec<Vec<String>> {
        let abcd = || labels(&["a", "b", "c", "d"]);
        let xyzw = || labels(&["x", "y", "z", "w"]);
        match *self {
            ConstructionKind::Diagonal => vec![abcd()],
            ConstructionKind::Grid12Base
            | ConstructionKind::Grid12
            | ConstructionKind::Strong16 => {
                vec![abcd(), xyzw()]
            }
            ConstructionKind::BadProduct => vec![labels(&["a", "b", "c"]), abcd()],
            ConstructionKind::Tensor { n } => std::iter::once(abcd())
                .chain((1..n).map(|i| suffixed(&i.to_string())))
                .collect(),
            ConstructionKind::Cart3d28 => vec![abcd(), suffixed("3"), suffixed("4")],
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => vec![],
        }
    }

    /// Size of the full canonical palette; also the claimed upper bound.
    pub fn palette_bound(&self) -> usize {
        match *self {
            ConstructionKind::Diagonal => 4,
            ConstructionKind::Grid12Base => 8,
            ConstructionKind::Grid12 => 12,
            ConstructionKind::Strong16 => 16,
            ConstructionKind::BadProduct => 12,
            ConstructionKind::Tensor { n } => 4usize.pow(n as u32 - 1) + 4 * (1 << (n - 1)),
            ConstructionKind::Cart3d28 => 28,
            ConstructionKind::Rook { n } => n * n / 2,
            ConstructionKind::Biclique { n } => 1 + n * n + rook_pattern_size(n),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            ConstructionKind::Tensor { n } if !(2..=8).contains(&n) => Err(
                Error::InvalidParameter(format!("tensor construction needs 2 <= n <= 8, got {n}")),
            ),
            ConstructionKind::Rook { n } if n < 4 || n % 2 == 1 => Err(Error::InvalidParameter(
                format!("rook construction needs even n >= 4, got {n}"),
            )),
            ConstructionKind::Biclique { n } if n < 1 => Err(Error::InvalidParameter(
                "biclique construction needs n >= 1".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// Colors used by the upper-right quadrant of the biclique layout.
fn rook_pattern_size(n: usize) -> usize {
    if n >= 4 && n.is_multiple_of(2) {
        n * n / 2
    } else {
        n * n
    }
}

/// A construction with its region and word offsets. Reports echo this value
/// verbatim so runs can be reproduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstructionSpec {
    #[serde(flatten)]
    pub kind: ConstructionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<LatticeRegion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Adjacency>,
    /// Base point selecting the tensor component; defaults to `region.lo`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<i64>>,
    /// One shift per word slot; empty means "compute the smallest valid".
    #[serde(default)]
    pub offsets: Vec<i64>,
    /// One alphabet per word slot; empty means the defaults.
    #[serde(default)]
    pub alphabets: Vec<Vec<String>>,
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind) -> Self {
        ConstructionSpec {
            kind,
            region: None,
            adjacency: None,
            base: None,
            offsets: Vec::new(),
            alphabets: Vec::new(),
        }
    }

    pub fn lattice(kind: ConstructionKind, region: LatticeRegion) -> Self {
        ConstructionSpec {
            region: Some(region),
            ..ConstructionSpec::new(kind)
        }
    }

    pub fn with_offsets(mut self, offsets: Vec<i64>) -> Self {
        self.offsets = offsets;
        self
    }

    pub fn adjacency(&self) -> Option<Adjacency> {
        self.adjacency.or_else(|| self.kind.default_adjacency())
    }

    /// Builds the graph this spec colors.
    pub fn build_graph(&self) -> Result<Graph> {
        self.kind.validate()?;
        match self.kind {
            ConstructionKind::Rook { n } => build_rook(n),
            ConstructionKind::Biclique { n } => build_biclique_product(n),
            _ => {
                let region = self.region.as_ref().ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "construction {} needs a region",
                        self.kind.name()
                    ))
                })?;
                let want = self.kind.lattice_dim().expect("lattice kind");
                if region.dim() != want {
                    return Err(Error::InvalidRegion(format!(
                        "construction {} needs a {want}-dimensional region, got {}",
                        self.kind.name(),
                        region.dim()
                    )));
                }
                let adjacency = self.adjacency().expect("lattice kind");
                let boxed = build_box(region, adjacency);
                if let ConstructionKind::Tensor { .. } = self.kind {
                    if adjacency != Adjacency::Tensor {
                        return Err(Error::InvalidParameter(
                            "tensor construction colors tensor adjacency only".into(),
                        ));
                    }
                    let base = self.base.clone().unwrap_or_else(|| region.lo.clone());
                    tensor_component(&boxed, &base)
                } else {
                    Ok(boxed)
                }
            }
        }
    }
}

/// A lattice construction bound to concrete word windows.
#[derive(Debug, Clone)]
pub struct Construction {
    kind: ConstructionKind,
    offsets: Vec<i64>,
    alphabets: Vec<Vec<String>>,
    base: Option<Vec<i64>>,
    thue: Vec<u8>,
    star: Vec<u8>,
}

type SlotIndices = Vec<(usize, i64)>;

impl Construction {
    /// Binds `spec` to word windows of `window` symbols. Missing offsets
    /// default to zero and missing alphabets to the kind's defaults.
    pub fn new(spec: &ConstructionSpec, window: usize) -> Result<Self> {
        let kind = spec.kind;
        kind.validate()?;
        if !kind.is_lattice() {
            return Err(Error::InvalidParameter(format!(
                "{} is a board layout, not a point coloring",
                kind.name()
            )));
        }
        let slots = kind.slots();
        let offsets = if spec.offsets.is_empty() {
            vec![0; slots.len()]
        } else {
            spec.offsets.clone()
        };
        if offsets.len() != slots.len() {
            return Err(Error::InvalidParameter(format!(
                "construction {} takes {} offsets, got {}",
                kind.name(),
                slots.len(),
                offsets.len()
            )));
        }
        let alphabets = if spec.alphabets.is_empty() {
            kind.default_alphabets()
        } else {
            spec.alphabets.clone()
        };
        if alphabets.len() != slots.len() {
            return Err(Error::InvalidParameter(format!(
                "construction {} takes {} alphabets, got {}",
                kind.name(),
                slots.len(),
                alphabets.len()
            )));
        }
        let mut all = BTreeSet::new();
        for (a, slot) in alphabets.iter().zip(&slots) {
            if a.len() != slot.size() {
                return Err(Error::AlphabetSize {
                    expected: slot.size(),
                    found: a.len(),
                });
            }
            // product labels would collide if a slot reused a label
            let mut seen = BTreeSet::new();
            for l in a {
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l.clone()));
                }
                all.insert(l);
            }
        }
        if let Some(d) = kind.lattice_dim() {
            if let Some(b) = &spec.base {
                if b.len() != d {
                    return Err(Error::InvalidParameter(
                        "base has the wrong dimension".into(),
                    ));
                }
            }
        }
        let base = match kind {
            ConstructionKind::Tensor { .. } => spec
                .base
                .clone()
                .or_else(|| spec.region.as_ref().map(|r| r.lo.clone())),
            _ => None,
        };
        Ok(Construction {
            kind,
            offsets,
            alphabets,
            base,
            thue: generate_thue(window).symbols().to_vec(),
            star: thue_star_symbols(window),
        })
    }

    /// Binds `spec` to the smallest windows covering every vertex of
    /// `graph`, computing offsets first when the spec leaves them empty.
    pub fn for_graph(spec: &ConstructionSpec, graph: &Graph) -> Result<Self> {
        let probe = Construction::new(spec, 0)?;
        let slots = probe.kind.slots().len();
        let mut lo = vec![i64::MAX; slots];
        let mut hi = vec![i64::MIN; slots];
        for v in 0..graph.vertex_count() {
            for (slot, idx) in probe.raw_indices(graph.payload(v))? {
                lo[slot] = lo[slot].min(idx);
                hi[slot] = hi[slot].max(idx);
            }
        }
        let offsets: Vec<i64> = if spec.offsets.is_empty() {
            lo.iter()
                .map(|&m| if m == i64::MAX { 0 } else { (-m).max(0) })
                .collect()
        } else {
            probe.offsets.clone()
        };
        let mut window = 0usize;
        for s in 0..slots {
            if hi[s] == i64::MIN {
                continue;
            }
            let first = lo[s] + offsets[s];
            if first < 0 {
                return Err(Error::NegativeIndex {
                    slot: s,
                    index: first,
                });
            }
            window = window.max((hi[s] + offsets[s] + 1) as usize);
        }
        let resolved = ConstructionSpec {
            offsets,
            ..spec.clone()
        };
        Construction::new(&resolved, window)
    }

    pub fn kind(&self) -> ConstructionKind {
        self.kind
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn alphabets(&self) -> &[Vec<String>] {
        &self.alphabets
    }

    fn check_dim(&self, p: &[i64]) -> Result<()> {
        let d = self.kind.lattice_dim().expect("lattice kind");
        if p.len() != d {
            return Err(Error::InvalidParameter(format!(
                "{} colors {d}-dimensional points, got {p:?}",
                self.kind.name()
            )));
        }
        Ok(())
    }

    /// Word indices a point reads, before offsets.
    fn raw_indices(&self, p: &[i64]) -> Result<SlotIndices> {
        self.check_dim(p)?;
        let mut out = SlotIndices::with_capacity(self.offsets.len());
        match self.kind {
            ConstructionKind::Diagonal => out.push((0, p[0] - p[1])),
            ConstructionKind::Grid12Base | ConstructionKind::Grid12 => {
                let (x, y) = (p[0], p[1]);
                if (x + y).rem_euclid(2) == 0 {
                    out.push((0, (x - y).div_euclid(2)));
                } else {
                    out.push((1, (x + y - 1).div_euclid(2)));
                }
            }
            ConstructionKind::Strong16 | ConstructionKind::BadProduct => {
                out.push((0, p[0]));
                out.push((1, p[1]));
            }
            ConstructionKind::Tensor { n } => {
                if let Some(base) = &self.base {
                    if !in_tensor_class(p, base) {
                        return Err(Error::OutsideComponent(p.to_vec()));
                    }
                }
                let layer = p[n - 1];
                if layer.rem_euclid(2) == 1 {
                    out.push((0, (layer - 1).div_euclid(2)));
                } else {
                    for (i, &x) in p[..n - 1].iter().enumerate() {
                        out.push((i + 1, x));
                    }
                }
            }
            ConstructionKind::Cart3d28 => {
                let lambda = p[0] + p[1] + p[2];
                if lambda.rem_euclid(2) == 1 {
                    out.push((0, (lambda - 1).div_euclid(2)));
                } else {
                    out.push((1, p[0] - lambda / 2));
                    out.push((2, -p[2]));
                }
            }
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => unreachable!(),
        }
        Ok(out)
    }

    fn symbol(&self, slot: usize, raw: i64) -> Result<usize> {
        let index = raw + self.offsets[slot];
        if index < 0 {
            return Err(Error::NegativeIndex { slot, index });
        }
        let word = match self.kind.slots()[slot] {
            SlotWord::Thue => &self.thue,
            SlotWord::ThueStar => &self.star,
        };
        word.get(index as usize)
            .map(|&s| s as usize)
            .ok_or(Error::IndexBeyondWindow {
                slot,
                index,
                window: word.len(),
            })
    }

    /// Canonical color id of a lattice point.
    pub fn color_point(&self, p: &[i64]) -> Result<u32> {
        let idx = self.raw_indices(p)?;
        let mut syms = [0usize; 8];
        for (k, &(slot, raw)) in idx.iter().enumerate() {
            syms[k] = self.symbol(slot, raw)?;
        }
        let id = match self.kind {
            ConstructionKind::Diagonal => syms[0],
            ConstructionKind::Grid12Base => {
                if (p[0] + p[1]).rem_euclid(2) == 0 {
                    syms[0]
                } else {
                    4 + syms[0]
                }
            }
            ConstructionKind::Grid12 => {
                if (p[0] + p[1]).rem_euclid(2) == 0 {
                    syms[0]
                } else {
                    // x1 for odd X, x2 for even X
                    4 + 2 * syms[0] + 1 - p[0].rem_euclid(2) as usize
                }
            }
            ConstructionKind::Strong16 => 4 * syms[0] + syms[1],
            ConstructionKind::BadProduct => 4 * syms[0] + syms[1],
            ConstructionKind::Tensor { n } => {
                let even_colors = 4usize.pow(n as u32 - 1);
                if p[n - 1].rem_euclid(2) == 1 {
                    let bits = p[..n - 1].iter().fold(0, |acc, &x| {
                        (acc << 1) | x.div_euclid(2).rem_euclid(2) as usize
                    });
                    even_colors + (syms[0] << (n - 1)) + bits
                } else {
                    syms[..n - 1].iter().fold(0, |acc, &s| acc * 4 + s)
                }
            }
            ConstructionKind::Cart3d28 => {
                let lambda = p[0] + p[1] + p[2];
                if lambda.rem_euclid(2) == 1 {
                    3 * syms[0] + (p[0] - p[1]).rem_euclid(3) as usize
                } else {
                    12 + 4 * syms[0] + syms[1]
                }
            }
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => unreachable!(),
        };
        Ok(id as u32)
    }

    /// Display label of a canonical color id.
    pub fn label(&self, id: u32) -> String {
        let id = id as usize;
        let a = &self.alphabets;
        match self.kind {
            ConstructionKind::Diagonal => a[0][id].clone(),
            ConstructionKind::Grid12Base => {
                if id < 4 {
                    a[0][id].clone()
                } else {
                    a[1][id - 4].clone()
                }
            }
            ConstructionKind::Grid12 => {
                if id < 4 {
                    a[0][id].clone()
                } else {
                    let k = id - 4;
                    format!("{}{}", a[1][k / 2], k % 2 + 1)
                }
            }
            ConstructionKind::Strong16 | ConstructionKind::BadProduct => {
                format!("({},{})", a[0][id / 4], a[1][id % 4])
            }
            ConstructionKind::Tensor { n } => {
                let even_colors = 4usize.pow(n as u32 - 1);
                if id < even_colors {
                    let parts: Vec<String> = (0..n - 1)
                        .map(|i| a[i + 1][(id / 4usize.pow((n - 2 - i) as u32)) % 4].clone())
                        .collect();
                    if parts.len() == 1 {
                        parts[0].clone()
                    } else {
                        format!("({})", parts.join(","))
                    }
                } else {
                    let k = id - even_colors;
                    let bits = k & ((1 << (n - 1)) - 1);
                    let bit_str: String = (0..n - 1)
                        .rev()
                        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
                        .collect();
                    format!("({},{})", a[0][k >> (n - 1)], bit_str)
                }
            }
            ConstructionKind::Cart3d28 => {
                if id < 12 {
                    format!("({},{})", a[0][id / 3], id % 3)
                } else {
                    let k = id - 12;
                    format!("({},{})", a[1][k / 4], a[2][k % 4])
                }
            }
            ConstructionKind::Rook { .. } | ConstructionKind::Biclique { .. } => id.to_string(),
        }
    }

    /// The resolved spec, with explicit offsets and alphabets.
    pub fn spec(
        &self,
        region: Option<LatticeRegion>,
        adjacency: Option<Adjacency>,
    ) -> ConstructionSpec {
        ConstructionSpec {
            kind: self.kind,
            region,
            adjacency,
            base: self.base.clone(),
            offsets: self.offsets.clone(),
            alphabets: self.alphabets.clone(),
        }
    }
}

/// Vertex classes of the rook layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexType {
    Yellow,
    Blue,
}

/// A graph with a total coloring. Color ids index `palette`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<u32>,
    palette: Vec<String>,
    types: Option<Vec<VertexType>>,
    construction: Option<ConstructionSpec>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<u32>, palette: Vec<String>) -> Result<Self> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} vertices",
                colors.len(),
                graph.vertex_count()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= palette.len()) {
            return Err(Error::ColoringMismatch(format!(
                "color {c} outside a palette of {}",
                palette.len()
            )));
        }
        Ok(ColoredGraph {
            graph,
            colors,
            palette,
            types: None,
            construction: None,
        })
    }

    /// Colors with default labels `"0"`, `"1"`, ... up to the largest id.
    pub fn from_ids(graph: Graph, colors: Vec<u32>) -> Result<Self> {
        let top = colors.iter().max().map_or(0, |&c| c as usize + 1);
        ColoredGraph::new(graph, colors, (0..top).map(|c| c.to_string()).collect())
    }

    pub fn with_types(mut self, types: Vec<VertexType>) -> Result<Self> {
        if types.len() != self.graph.vertex_count() {
            return Err(Error::ColoringMismatch("type list length".into()));
        }
        self.types = Some(types);
        Ok(self)
    }

    pub fn with_construction(mut self, spec: ConstructionSpec) -> Self {
        self.construction = Some(spec);
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> u32 {
        self.colors[v]
    }

    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.palette[self.colors[v] as usize]
    }

    pub fn types(&self) -> Option<&[VertexType]> {
        self.types.as_deref()
    }

    pub fn construction(&self) -> Option<&ConstructionSpec> {
        self.construction.as_ref()
    }

    /// Replaces one vertex color, keeping the palette. Used to build
    /// corrupted controls.
    pub fn recolored(&self, v: VertexId, color: u32) -> Result<Self> {
        if v >= self.colors.len() {
            return Err(Error::UnknownVertex(v));
        }
        if color as usize >= self.palette.len() {
            return Err(Error::ColoringMismatch(format!(
                "color {color} outside palette"
            )));
        }
        let mut out = self.clone();
        out.colors[v] = color;
        Ok(out)
    }
}

/// Colors every vertex of `graph` with a lattice construction, compressing
/// canonical ids to the used palette.
fn color_lattice(spec: &ConstructionSpec, graph: Graph) -> Result<ColoredGraph> {
    let c = Construction::for_graph(spec, &graph)?;
    let canonical = (0..graph.vertex_count())
        .map(|v| c.color_point(graph.payload(v)))
        .collect::<Result<Vec<u32>>>()?;
    let used: BTreeSet<u32> = canonical.iter().copied().collect();
    let rank: std::collections::HashMap<u32, u32> = used
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u32))
        .collect();
    let palette = used.iter().map(|&id| c.label(id)).collect();
    let colors = canonical.iter().map(|id| rank[id]).collect();
    let (region, adjacency) = match graph.family() {
        Family::Box { region, adjacency } => (Some(region.clone()), Some(*adjacency)),
        Family::Component { region, .. } => (Some(region.clone()), Some(Adjacency::Tensor)),
        _ => (spec.region.clone(), spec.adjacency()),
    };
    let resolved = c.spec(region, adjacency);
    Ok(ColoredGraph::new(graph, colors, palette)?.with_construction(resolved))
}

/// Rook layout colors and types for cell `(i, j)` with `m = n / 2`.
fn rook_cell(n: usize, i: usize, j: usize) -> (u32, VertexType) {
    let m = n / 2;
    let left = |i: usize, j: usize| (i * m + j) as u32;
    if j < m {
        let t = if i.is_multiple_of(2) {
            VertexType::Yellow
        } else {
            VertexType::Blue
        };
        (left(i, j), t)
    } else {
        let jr = j - m;
        if i % 2 == 1 {
            (left(i - 1, jr), VertexType::Yellow)
        } else {
            (left((i + n - 1) % n, (jr + m - 1) % m), VertexType::Blue)
        }
    }
}

/// The `n^2/2`-coloring of `K_n □ K_n` for even `n >= 4`.
pub fn color_rook(n: usize) -> Result<ColoredGraph> {
    let kind = ConstructionKind::Rook { n };
    kind.validate()?;
    let graph = build_rook(n)?;
    let (colors, types): (Vec<u32>, Vec<VertexType>) = (0..graph.vertex_count())
        .map(|v| {
            let p = graph.payload(v);
            rook_cell(n, p[0] as usize, p[1] as usize)
        })
        .unzip();
    let palette = (0..n * n / 2).map(|c| c.to_string()).collect();
    Ok(ColoredGraph::new(graph, colors, palette)?
        .with_types(types)?
        .with_construction(ConstructionSpec::new(kind)))
}

/// Quadrant of a biclique-product cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
}

pub fn quadrant(n: usize, i: usize, j: usize) -> Quadrant {
    match (i < n, j < n) {
        (true, true) => Quadrant::UpperLeft,
        (true, false) => Quadrant::UpperRight,
        (false, true) => Quadrant::LowerLeft,
        (false, false) => Quadrant::LowerRight,
    }
}

/// Coloring of `K_{n,n} □ K_{n,n}`: color 0 on the upper-left and
/// lower-right quadrants, the rook layout (or all-distinct colors when `n`
/// is odd or below 4) on the upper right, and distinct colors on the lower
/// left.
pub fn color_biclique(n: usize) -> Result<ColoredGraph> {
    let kind = ConstructionKind::Biclique { n };
    kind.validate()?;
    let graph = build_biclique_product(n)?;
    let pattern = rook_pattern_size(n);
    let patterned = pattern < n * n;
    let colors = (0..graph.vertex_count())
        .map(|v| {
            let p = graph.payload(v);
            let (i, j) = (p[0] as usize, p[1] as usize);
            match quadrant(n, i, j) {
                Quadrant::UpperLeft | Quadrant::LowerRight => 0,
                Quadrant::UpperRight => {
                    let c = if patterned {
                        rook_cell(n, i, j - n).0
                    } else {
                        (i * n + j - n) as u32
                    };
                    1 + c
                }
                Quadrant::LowerLeft => (1 + pattern + (i - n) * n + j) as u32,
            }
        })
        .collect();
    let palette = (0..1 + pattern + n * n).map(|c| c.to_string()).collect();
    Ok(ColoredGraph::new(graph, colors, palette)?.with_construction(ConstructionSpec::new(kind)))
}

/// Materializes any construction on its graph.
pub fn color(spec: &ConstructionSpec) -> Result<ColoredGraph> {
    match spec.kind {
        ConstructionKind::Rook { n } => color_rook(n),
        ConstructionKind::Biclique { n } => color_biclique(n),
        _ => color_lattice(spec, spec.build_graph()?),
    }
}
