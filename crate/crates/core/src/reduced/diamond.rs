use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::{first_clique_in, for_each_clique_in};
use std::ops::ControlFlow;

/// Spine `v_1, …, v_ℓ` with a clique ("gem") in the joint neighbourhood of
/// every consecutive spine pair; all vertices distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondPath {
    pub spine: Vec<usize>,
    pub gems: Vec<VertexSet>,
}

impl DiamondPath {
    /// Number of spine vertices.
    pub fn len(&self) -> usize {
        self.spine.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spine.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        let all = self.spine.iter().copied().chain(self.gems.iter().flat_map(|g| g.iter()));
        VertexSet::from_iter_dedup(all).unwrap_or_default()
    }

    /// Independent check of the definition with gems of size `gem`.
    pub fn validate(&self, g: &Graph, gem: usize) -> Result<()> {
        if self.spine.len() < 2 || self.gems.len() + 1 != self.spine.len() {
            return Err(Error::Invariant("a diamond path needs ℓ ≥ 2 spine vertices and ℓ − 1 gems".into()));
        }
        let mut seen = BitSet::new(g.n());
        let all = self.spine.iter().copied().chain(self.gems.iter().flat_map(|c| c.iter()));
        for v in all {
            g.check_vertex(v)?;
            if seen.contains(v) {
                return Err(Error::Invariant(format!("vertex {v} repeats in the diamond path")));
            }
            seen.insert(v);
        }
        for (i, c) in self.gems.iter().enumerate() {
            if c.len() != gem {
                return Err(Error::Invariant(format!("gem {i} has size {} instead of {gem}", c.len())));
            }
            if !g.is_clique(c.as_slice()) {
                return Err(Error::Invariant(format!("gem {i} is not a clique")));
            }
            let (a, b) = (self.spine[i], self.spine[i + 1]);
            if !c.iter().all(|x| g.has_edge(a, x) && g.has_edge(b, x)) {
                return Err(Error::Invariant(format!("gem {i} is not in the joint neighbourhood of {a} and {b}")));
            }
        }
        Ok(())
    }
}

pub const GEMS_PER_STEP: usize = 8;

/// Search controls for [`find_diamond_path`].
#[derive(Clone, Debug)]
pub struct DiamondSearch {
    /// Longest spine tried.
    pub max_len: usize,
    /// Gem size; `r − 1` gives a `K_r`-diamond path.
    pub gem: usize,
    /// Vertices the path must avoid.
    pub excluded: BitSet,
    /// Search-node budget.
    pub max_nodes: u64,
}

impl DiamondSearch {
    pub fn new(g: &Graph, r: usize, max_len: usize) -> Self {
        DiamondSearch { max_len, gem: r.saturating_sub(1), excluded: BitSet::new(g.n()), max_nodes: 1_000_000 }
    }
}

/// Shortest diamond path from `s` to `t` of spine length at most
/// `max_len`, by iterative deepening. Spine vertices are tried in increasing
/// order; for each, up to [`GEMS_PER_STEP`] gems are tried in lexicographic
/// order before backtracking.
pub fn find_diamond_path(g: &Graph, s: usize, t: usize, opts: &DiamondSearch) -> Result<Option<DiamondPath>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return input("diamond path endpoints must differ");
    }
    if opts.max_len < 2 {
        return input("diamond path length bound must be at least 2");
    }
    if opts.excluded.contains(s) || opts.excluded.contains(t) {
        return Ok(None);
    }
    let mut free = BitSet::full(g.n());
    free.difference_with(&opts.excluded);
    free.remove(s);
    free.remove(t);
    let mut budget = opts.max_nodes;
    for len in 2..=opts.max_len {
        let mut st = Search { g, t, gem: opts.gem, free: free.clone(), spine: vec![s], gems: Vec::new(), budget: &mut budget };
        if st.extend(len)? {
            let path = DiamondPath { spine: st.spine, gems: st.gems };
            path.validate(g, opts.gem)?;
            return Ok(Some(path));
        }
    }
    Ok(None)
}

struct Search<'a> {
    g: &'a Graph,
    t: usize,
    gem: usize,
    free: BitSet,
    spine: Vec<usize>,
    gems: Vec<VertexSet>,
    budget: &'a mut u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        if *self.budget == 0 {
            return Err(Error::Resource("diamond path search exceeded its node budget".into()));
        }
        *self.budget -= 1;
        Ok(())
    }

    /// Extends the spine to exactly `len` vertices ending in `t`.
    fn extend(&mut self, len: usize) -> Result<bool> {
        self.tick()?;
        let last = *self.spine.last().expect("spine starts at s");
        if self.spine.len() + 1 == len {
            let mut joint = self.g.neighbors(last).intersection(self.g.neighbors(self.t));
            joint.intersect_with(&self.free);
            if let Some(c) = first_clique_in(self.g, &joint, self.gem) {
                self.spine.push(self.t);
                self.gems.push(VertexSet::from_sorted(c));
                return Ok(true);
            }
            return Ok(false);
        }
        let nexts: Vec<usize> = self.g.neighbors(last).intersection(&self.free).iter().collect();
        for x in nexts {
            let mut joint = self.g.neighbors(last).intersection(self.g.neighbors(x));
            joint.intersect_with(&self.free);
            joint.remove(x);
            if joint.count() < self.gem {
                continue;
            }
            let mut gems: Vec<Vec<usize>> = Vec::new();
            let _ = for_each_clique_in(self.g, &joint, self.gem, &mut |c: &[usize]| {
                gems.push(c.to_vec());
                if gems.len() >= GEMS_PER_STEP {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            for c in gems {
                self.tick()?;
                self.free.remove(x);
                for &y in &c {
                    self.free.remove(y);
                }
                self.spine.push(x);
                self.gems.push(VertexSet::from_sorted(c.clone()));
                if self.extend(len)? {
                    return Ok(true);
                }
                self.spine.pop();
                self.gems.pop();
                self.free.insert(x);
                for &y in &c {
                    self.free.insert(y);
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_gives_length_two() {
        let r = 4;
        let g = Graph::complete(r + 1);
        let p = find_diamond_path(&g, 0, 3, &DiamondSearch::new(&g, r, 7)).unwrap().unwrap();
        assert_eq!(p.spine, vec![0, 3]);
        assert_eq!(p.gems, vec![VertexSet::from_sorted(vec![1, 2, 4])]);
    }

    #[test]
    fn two_cliques_sharing_a_vertex() {
        // K_5 on 0..5 and K_5 on 4..9 share vertex 4.
        let r = 4;
        let mut edges = Vec::new();
        for block in [[0, 1, 2, 3, 4], [4, 5, 6, 7, 8]] {
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((block[i], block[j]));
                }
            }
        }
        let g = Graph::from_edges(9, &edges).unwrap();
        let p = find_diamond_path(&g, 0, 8, &DiamondSearch::new(&g, r, 7)).unwrap().unwrap();
        assert_eq!(p.spine, vec![0, 4, 8]);
        p.validate(&g, r - 1).unwrap();
    }

    #[test]
    fn different_components_have_no_path() {
        let g = Graph::complete(5).disjoint_union(&Graph::complete(5));
        assert_eq!(find_diamond_path(&g, 0, 7, &DiamondSearch::new(&g, 4, 7)).unwrap(), None);
    }

    #[test]
    fn excluded_vertices_are_avoided() {
        let g = Graph::complete(8);
        let mut opts = DiamondSearch::new(&g, 4, 7);
        opts.excluded.insert(1);
        opts.excluded.insert(2);
        let p = find_diamond_path(&g, 0, 3, &opts).unwrap().unwrap();
        assert!(p.vertices().is_disjoint(&VertexSet::from_sorted(vec![1, 2])));
        opts.excluded.insert(3);
        assert_eq!(find_diamond_path(&g, 0, 3, &opts).unwrap(), None);
    }

    #[test]
    fn checker_rejects_broken_paths() {
        let g = Graph::complete(6);
        let bad = DiamondPath { spine: vec![0, 1], gems: vec![VertexSet::from_sorted(vec![1, 2, 3])] };
        assert!(bad.validate(&g, 3).is_err());
        let short = DiamondPath { spine: vec![0, 1], gems: vec![VertexSet::from_sorted(vec![2, 3])] };
        assert!(short.validate(&g, 3).is_err());
        assert!(short.validate(&g, 2).is_ok());
    }
}
