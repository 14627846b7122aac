use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::{first_clique_in, Tiling};

/// Maximal `K_r`-tiling: repeatedly takes the lexicographically first
/// `r`-clique among the uncovered vertices.
pub fn greedy_tiling(g: &Graph, r: usize) -> Tiling {
    let mut t = Tiling::empty(r);
    if r == 0 {
        return t;
    }
    let mut free = g.all_vertices();
    fill_greedy(g, &mut t, &mut free);
    t
}

/// Adds lexicographically first `r`-cliques inside `free` until none is
/// left; returns the number of cliques added.
pub(crate) fn fill_greedy(g: &Graph, t: &mut Tiling, free: &mut BitSet) -> usize {
    let r = t.r();
    let mut added = 0;
    while let Some(c) = first_clique_in(g, free, r) {
        for &v in &c {
            free.remove(v);
        }
        t.push(VertexSet::from_sorted(c));
        added += 1;
    }
    added
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(greedy_tiling(&Graph::complete(4), 4).len(), 1);
        assert!(greedy_tiling(&Graph::cycle(5).unwrap(), 3).is_empty());
        let t = greedy_tiling(&Graph::complete(7), 3);
        assert_eq!(t.cliques(), &[VertexSet::range(0, 3), VertexSet::range(3, 6)]);
    }

    #[test]
    fn greedy_is_maximal() {
        let g = crate::constructions::gnp(20, crate::rational::ratio(1, 2), crate::constructions::Seed(3)).unwrap();
        let t = greedy_tiling(&g, 3);
        t.validate(&g).unwrap();
        let rest = t.uncovered(g.n()).to_bits(g.n());
        assert!(first_clique_in(&g, &rest, 3).is_none());
    }
}
