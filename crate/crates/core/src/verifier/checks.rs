use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::colorings::{ColoredGraph, VertexType};
use crate::error::{Error, Result};
use crate::graphs::VertexId;

/// Two ordered edge occurrences with the same color pair but different
/// endpoint type pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePairViolation {
    pub colors: (u32, u32),
    pub first: (VertexId, VertexId),
    pub second: (VertexId, VertexId),
}

type TypePair = (VertexType, VertexType);

/// Groups every ordered edge `(u, v)` by `(color(u), color(v))` and reports
/// occurrences whose `(type(u), type(v))` differs from the first one seen.
pub fn check_edge_pair_types(cg: &ColoredGraph) -> Result<Vec<EdgePairViolation>> {
    let types = cg.types().ok_or(Error::MissingTypes)?;
    let g = cg.graph();
    let mut seen: HashMap<(u32, u32), (TypePair, (VertexId, VertexId))> = HashMap::new();
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.neighbor_slice(u) {
            let v = v as usize;
            let key = (cg.color(u), cg.color(v));
            let ty = (types[u], types[v]);
            match seen.get(&key) {
                None => {
                    seen.insert(key, (ty, (u, v)));
                }
                Some(&(first_ty, first)) if first_ty != ty => out.push(EdgePairViolation {
                    colors: key,
                    first,
                    second: (u, v),
                }),
                Some(_) => {}
            }
        }
    }
    Ok(out)
}

/// True iff every edge has exactly one endpoint with color id 0.
pub fn check_zero_alternation(cg: &ColoredGraph) -> bool {
    cg.graph()
        .edges()
        .all(|(u, v)| (cg.color(u) == 0) != (cg.color(v) == 0))
}
