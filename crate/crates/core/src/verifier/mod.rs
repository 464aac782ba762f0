//! Repetitive-path search and the structural checks around it.
//!
//! [`find_repetitive_path`] enumerates simple paths of up to `2 * k_max`
//! vertices and reports one whose color word is a square. Everything it
//! emits can be re-checked with [`validate_witness`], which shares no code
//! with the search.

mod checks;
mod lazy;
mod pi;
mod search;
mod witness;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::colorings::{ColoredGraph, ConstructionSpec};
use crate::error::{Error, Result};
use crate::graphs::VertexId;

pub use checks::{check_edge_pair_types, check_zero_alternation, EdgePairViolation};
pub use lazy::{check_lazy_walk_rigidity, check_lazy_walk_rigidity_limited, LazySubject, LazyWalk};
pub use pi::{exact_pi, PiOutcome};
pub use search::{find_repetitive_path, find_repetitive_path_with, SearchOptions};
pub use witness::{validate_witness, InvalidWitness};

/// Resource limits for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Longest half length searched; paths have at most `2 * k_max` vertices.
    pub k_max: usize,
    pub max_nodes: u64,
    pub parallelism: usize,
    /// Report the smallest witness by `(length, vertex sequence)` and make
    /// the report independent of scheduling.
    pub deterministic: bool,
}

impl SearchBudget {
    pub fn new(k_max: usize) -> Self {
        SearchBudget {
            k_max,
            max_nodes: 1_000_000_000,
            parallelism: 1,
            deterministic: true,
        }
    }

    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_parallelism(mut self, parallelism: usize) -> Self {
        self.parallelism = parallelism;
        self
    }

    pub fn deterministic(mut self, on: bool) -> Self {
        self.deterministic = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max < 1 {
            return Err(Error::InvalidParameter("k_max must be at least 1".into()));
        }
        if self.k_max > 60 {
            return Err(Error::InvalidParameter(
                "k_max above 60 is not supported".into(),
            ));
        }
        if self.max_nodes < 1 {
            return Err(Error::InvalidParameter(
                "max_nodes must be at least 1".into(),
            ));
        }
        if self.parallelism < 1 {
            return Err(Error::InvalidParameter(
                "parallelism must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// A path of `2k` vertices claimed to be repetitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<VertexId>,
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Witness,
    BudgetExhausted,
}

impl Status {
    /// CLI exit code: 0 pass, 1 witness, 3 budget exhausted.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Witness => 1,
            Status::BudgetExhausted => 3,
        }
    }
}

/// Outcome of one search, with an echo of what was searched.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub status: Status,
    pub construction: Value,
    pub budget: SearchBudget,
    pub nodes_visited: u64,
    pub elapsed_ms: u64,
    pub witness: Option<PathWitness>,
    /// Payloads and color labels of the witness vertices.
    pub witness_payloads: Vec<Vec<i64>>,
    pub witness_colors: Vec<String>,
}

impl VerifyReport {
    pub(crate) fn describe(cg: &ColoredGraph) -> Value {
        match cg.construction() {
            Some(spec) => serde_json::to_value(spec).expect("spec serializes"),
            None => cg.graph().summary_json(),
        }
    }

    pub fn construction_spec(&self) -> Option<ConstructionSpec> {
        serde_json::from_value(self.construction.clone()).ok()
    }

    /// The report as JSON. Deterministic searches write `elapsedMs` and
    /// `parallelism` as 0 so that reports compare byte for byte.
    pub fn to_json(&self) -> Value {
        let det = self.budget.deterministic;
        let mut out = json!({
            "status": self.status,
            "construction": self.construction,
            "budget": {
                "maxLen": 2 * self.budget.k_max,
                "maxNodes": self.budget.max_nodes,
                "parallelism": if det { 0 } else { self.budget.parallelism },
                "deterministic": det,
            },
            "nodesVisited": self.nodes_visited,
            "elapsedMs": if det { 0 } else { self.elapsed_ms },
        });
        if let (Status::Witness, Some(w)) = (self.status, &self.witness) {
            out["witness"] = json!({
                "k": w.k,
                "vertices": self.witness_payloads,
                "colors": self.witness_colors,
            });
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }
}
