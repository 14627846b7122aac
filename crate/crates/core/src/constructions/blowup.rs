use crate::error::{input, Result};
use crate::graph::{Graph, GraphBuilder};

/// An `s`-fold blow-up together with its cluster map.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub graph: Graph,
    /// `cluster_of[x]` is the original vertex that blown-up vertex `x` replaces.
    pub cluster_of: Vec<usize>,
    pub factor: usize,
}

impl BlowUp {
    /// Blown-up vertex number `copy` of original vertex `v`.
    pub fn vertex(&self, v: usize, copy: usize) -> usize {
        debug_assert!(copy < self.factor);
        v * self.factor + copy
    }
}

/// Replaces every vertex by an independent set of `s` vertices and every edge
/// by a complete bipartite graph. Copy `i` of vertex `v` gets index `v*s + i`.
pub fn blow_up(g: &Graph, s: usize) -> Result<BlowUp> {
    if s == 0 {
        return input("blow-up factor must be at least 1");
    }
    let n = g.n();
    let mut b = GraphBuilder::new(n * s);
    for (u, v) in g.edges() {
        for i in 0..s {
            for j in 0..s {
                b.add_edge(u * s + i, v * s + j)?;
            }
        }
    }
    Ok(BlowUp {
        graph: b.build(),
        cluster_of: (0..n * s).map(|x| x / s).collect(),
        factor: s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{has_kr_factor, Guards};

    #[test]
    fn blow_up_examples() {
        let c4 = blow_up(&Graph::complete(2), 2).unwrap();
        assert_eq!(c4.graph.n(), 4);
        assert_eq!(c4.graph.edge_count(), 4);
        assert!(c4.graph.degree(0) == 2 && !c4.graph.has_edge(0, 1));
        let g = Graph::cycle(5).unwrap();
        assert_eq!(blow_up(&g, 1).unwrap().graph, g);
        let k4 = blow_up(&Graph::complete(4), 3).unwrap();
        assert!(has_kr_factor(&k4.graph, 3, &Guards::default()).unwrap().exists());
        assert!(blow_up(&g, 0).is_err());
    }

    #[test]
    fn cluster_map_is_homomorphism_with_independent_fibres() {
        let g = Graph::cycle(5).unwrap();
        let b = blow_up(&g, 3).unwrap();
        for (x, y) in b.graph.edges() {
            assert!(g.has_edge(b.cluster_of[x], b.cluster_of[y]));
        }
        for x in 0..b.graph.n() {
            for y in 0..b.graph.n() {
                if b.cluster_of[x] == b.cluster_of[y] {
                    assert!(!b.graph.has_edge(x, y));
                }
            }
        }
        assert_eq!(b.vertex(2, 1), 7);
    }
}
