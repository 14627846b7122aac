use super::random::Seed;
use super::sphere::{bollobas_erdos, SphereParams};
use crate::error::Result;
use crate::graph::{Graph, GraphBuilder};
use crate::rational::Rational;
use crate::reduced::ReducedMultigraph;

/// Sphere dimension of the cluster graphs.
pub const GAMMA_DIM: usize = 4;

/// The auxiliary graph over a reduced multigraph together with its clusters.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    pub graph: Graph,
    /// `cluster_of[x]` is the cluster `W_i` holding vertex `x`.
    pub cluster_of: Vec<usize>,
    pub cluster_size: usize,
}

/// Builds `Γ` on clusters `W_1, …, W_k` of size `y1`.
///
/// One sphere graph on `y1` points per side is drawn. Every `W_i` carries a
/// copy of its triangle-free half. Double edges of `R` become complete
/// joins, single edges copy the sphere graph's cross join between the two
/// halves, and missing edges stay empty. Vertex `i*y1 + a` is point `a` of
/// cluster `i`.
pub fn gamma_graph(rm: &ReducedMultigraph, y1: usize, zeta: Rational, seed: Seed) -> Result<GammaGraph> {
    let sphere = bollobas_erdos(&SphereParams::with_defaults(GAMMA_DIM, y1, zeta), seed)?;
    let be = &sphere.graph;
    let k = rm.k();
    let mut b = GraphBuilder::new(k * y1);
    for i in 0..k {
        for (a, c) in be.edges().into_iter().filter(|&(a, c)| c < y1 && a < y1) {
            b.add_edge(i * y1 + a, i * y1 + c)?;
        }
    }
    for (i, j, m) in rm.edges() {
        for a in 0..y1 {
            for c in 0..y1 {
                if m == 2 || be.has_edge(a, y1 + c) {
                    b.add_edge(i * y1 + a, j * y1 + c)?;
                }
            }
        }
    }
    Ok(GammaGraph { graph: b.build(), cluster_of: (0..k * y1).map(|x| x / y1).collect(), cluster_size: y1 })
}
