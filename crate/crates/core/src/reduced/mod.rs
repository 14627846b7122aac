//! Partition-level machinery: reduced multigraphs, regularity checks,
//! multi-embeddings, `K_r` neighbourhoods, greedy embedding and diamond
//! paths.

mod diamond;
mod embedding;
mod greedy;
mod multigraph;
mod partition;
mod regularity;
mod start;
mod upsilon;

pub use diamond::{find_diamond_path, DiamondPath, DiamondSearch, GEMS_PER_STEP};
pub use embedding::{find_kr_multi_embedding, validate_multi_embedding, EmbeddingReport, MultiEmbedding, Violation};
pub use greedy::{greedy_embed, EmbedOutcome};
pub use multigraph::{build_reduced, reduced_min_degree, ReducedMultigraph, ReducedSource, RegularityParams};
pub use partition::Partition;
pub use regularity::{check_regular_pair, RegularityMode, RegularityVerdict, EXHAUSTIVE_CAP};
pub use start::{lemma_start_embedding, q_v, StartOutcome, StartRoute};
pub use upsilon::{upsilon, upsilon2, UpsilonTable};
