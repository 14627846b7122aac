//! Clique factors in graphs with small independence number.
//!
//! The crate bundles exact desk-scale oracles (independence numbers, maximum
//! tilings, factor decision, fractional tilings by exact simplex), the graph
//! families that witness tightness, the constructive tiling pipeline
//! (greedy tilings, `K_r → K_{r+1}` augmentation, blow-ups and the fractional
//! iteration), the reduced-multigraph machinery (multi-embeddings, `K_r`
//! neighbourhoods, greedy embedding, diamond paths) and absorbers.

pub mod absorbers;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lp;
pub mod oracles;
pub mod rational;
pub mod reduced;
pub mod tiling;

pub use error::{Error, Result};
pub use graph::{BitSet, Density, Graph, GraphBuilder, VertexSet};
pub use absorbers::AbsorberParams;
pub use constructions::Seed;
pub use oracles::{FactorDecision, FractionalTiling, Guards, Tiling};
pub use reduced::{MultiEmbedding, Partition, ReducedMultigraph};
pub use tiling::AugmentParams;
