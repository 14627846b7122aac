//! Deterministic and seeded generators for the graph families used as
//! examples, counterexamples and building blocks.

mod blowup;
mod extremal;
mod gamma;
mod random;
mod sphere;

pub use blowup::{blow_up, BlowUp};
pub use extremal::{bottleneck_extremal, hs_extremal, two_cliques};
pub use gamma::{gamma_graph, GammaGraph};
pub use random::{gnp, triangle_free_process, Seed};
pub use sphere::{bollobas_erdos, SphereParams, SplitGraph};
