//! Non-repetitive colorings of lattice products, rook graphs and biclique
//! products, with an exhaustive repetitive-path verifier.
//!
//! A coloring of a graph is non-repetitive when no path on `2k` vertices
//! carries a color word of the form `XX`. The crate builds the colorings,
//! searches finite regions for such paths, checks lazy-walk rigidity of the
//! underlying words, and computes exact Thue numbers of tiny graphs.

pub mod colorings;
pub mod error;
mod files;
pub mod graphs;
mod hash;
pub mod verifier;
pub mod words;

pub use colorings::{
    color, color_biclique, color_rook, ColoredGraph, Construction, ConstructionKind,
    ConstructionSpec, VertexType,
};
pub use error::{Error, Result};
pub use graphs::{Adjacency, Family, Graph, LatticeRegion, VertexId};
pub use verifier::{SearchBudget, Status, VerifyReport};
pub use words::{FactorKind, FactorLocation, Word};
