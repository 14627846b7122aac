use std::fmt;
use std::ops::ControlFlow;

use super::ReducedMultigraph;
use crate::error::{input, Result};
use crate::graph::{BitSet, Graph};

/// Map from the vertices of a pattern graph `H` to clusters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiEmbedding {
    pattern: Graph,
    assignment: Vec<usize>,
}

impl MultiEmbedding {
    pub fn new(pattern: Graph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != pattern.n() {
            return input(format!(
                "assignment has {} entries for a pattern on {} vertices",
                assignment.len(),
                pattern.n()
            ));
        }
        Ok(MultiEmbedding { pattern, assignment })
    }

    /// `K_r` with two vertices on every cluster of `doubles` followed by one
    /// vertex on every cluster of `singles`.
    pub fn clique(doubles: &[usize], singles: &[usize]) -> Self {
        let assignment: Vec<usize> = doubles.iter().flat_map(|&c| [c, c]).chain(singles.iter().copied()).collect();
        MultiEmbedding { pattern: Graph::complete(assignment.len()), assignment }
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn cluster_of(&self, h: usize) -> usize {
        self.assignment[h]
    }

    /// `f^{-1}(i)`, sorted.
    pub fn fiber(&self, i: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&h| self.assignment[h] == i).collect()
    }

    /// Clusters with a nonempty fiber, sorted.
    pub fn used_clusters(&self) -> Vec<usize> {
        let mut c = self.assignment.clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn uses(&self, i: usize) -> bool {
        self.assignment.contains(&i)
    }
}

/// One failed condition of the multi-embedding definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Condition number, 1 to 4.
    pub condition: u8,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {}: {}", self.condition, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub violations: Vec<Violation>,
}

impl EmbeddingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Distinct violated condition numbers, ascending.
    pub fn conditions(&self) -> Vec<u8> {
        let mut c: Vec<u8> = self.violations.iter().map(|v| v.condition).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// Checks the four conditions:
/// 1. every fiber induces a single vertex, an edge or a path on three vertices;
/// 2. pattern edges between different clusters need multiplicity at least 1;
/// 3. adjacent fibers that both have two or more vertices need multiplicity 2;
/// 4. the neighbourhood of a fiber meets any other fiber in at most two vertices.
pub fn validate_multi_embedding(me: &MultiEmbedding, r: &ReducedMultigraph) -> Result<EmbeddingReport> {
    if let Some(&bad) = me.assignment.iter().find(|&&c| c >= r.k()) {
        return input(format!("cluster {bad} out of range for k = {}", r.k()));
    }
    let h = &me.pattern;
    let mut out = EmbeddingReport::default();
    let used = me.used_clusters();
    let fibers: Vec<Vec<usize>> = used.iter().map(|&i| me.fiber(i)).collect();
    let fiber_bits: Vec<BitSet> = fibers.iter().map(|f| BitSet::from_iter(h.n(), f.iter().copied())).collect();

    for (idx, f) in fibers.iter().enumerate() {
        let inner: usize = f.iter().map(|&a| h.neighbors(a).intersection_count(&fiber_bits[idx])).sum::<usize>() / 2;
        let ok = match f.len() {
            1 => true,
            2 => inner == 1,
            3 => inner == 2,
            _ => false,
        };
        if !ok {
            out.violations.push(Violation {
                condition: 1,
                detail: format!("fiber of cluster {} ({} vertices, {} edges) is not a vertex, edge or 2-path", used[idx], f.len(), inner),
            });
        }
    }
    for (a, b) in h.edges() {
        let (i, j) = (me.assignment[a], me.assignment[b]);
        if i != j && r.mult(i, j) == 0 {
            out.violations.push(Violation {
                condition: 2,
                detail: format!("pattern edge {a}-{b} maps to clusters {i}, {j} with no edge"),
            });
        }
    }
    for x in 0..used.len() {
        for y in 0..used.len() {
            if x == y {
                continue;
            }
            let (i, j) = (used[x], used[y]);
            let mut nbhd = BitSet::new(h.n());
            for &a in &fibers[x] {
                nbhd.union_with(h.neighbors(a));
            }
            let joint = nbhd.intersection_count(&fiber_bits[y]);
            if x < y && fibers[x].len() >= 2 && fibers[y].len() >= 2 && joint > 0 && r.mult(i, j) != 2 {
                out.violations.push(Violation {
                    condition: 3,
                    detail: format!("adjacent fibers on clusters {i}, {j} need a double edge"),
                });
            }
            if joint > 2 {
                out.violations.push(Violation {
                    condition: 4,
                    detail: format!("neighbourhood of cluster {i}'s fiber meets cluster {j} in {joint} vertices"),
                });
            }
        }
    }
    Ok(out)
}

/// Walks every `K_r` multi-embedding shape: a clique `C` of the support
/// graph together with a double-edge clique `D ⊆ C`, `|C| + |D| = r`.
/// Shapes come in lexicographic order of `C`; for each `C` only the
/// lexicographically first `D` is reported. `C` must contain `required`.
pub(crate) fn for_each_kr_shape<F>(rm: &ReducedMultigraph, r: usize, required: &[usize], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let k = rm.k();
    if r == 0 || required.len() > r {
        return ControlFlow::Continue(());
    }
    let mut base: Vec<usize> = required.to_vec();
    base.sort_unstable();
    base.dedup();
    for (x, &a) in base.iter().enumerate() {
        if a >= k || base[..x].iter().any(|&b| rm.mult(a, b) == 0) {
            return ControlFlow::Continue(());
        }
    }
    let mut cand = BitSet::full(k);
    for &a in &base {
        cand.intersect_with(&rm.neighbors(a));
        cand.remove(a);
    }
    let req = BitSet::from_iter(k, base.iter().copied());
    let mut chosen = Vec::new();
    shapes_rec(rm, r, &base, &req, &mut chosen, cand, 0, visit)
}

#[allow(clippy::too_many_arguments)]
fn shapes_rec<F>(
    rm: &ReducedMultigraph,
    r: usize,
    base: &[usize],
    req: &BitSet,
    chosen: &mut Vec<usize>,
    cand: BitSet,
    from: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let size = base.len() + chosen.len();
    if size >= r.div_ceil(2) && size > 0 {
        let mut c: Vec<usize> = base.iter().chain(chosen.iter()).copied().collect();
        c.sort_unstable();
        if let Some(d) = double_clique_within(rm, &c, r - size) {
            visit(&c, &d)?;
        }
    }
    if size == r {
        return ControlFlow::Continue(());
    }
    for v in cand.iter().filter(|&v| v >= from && !req.contains(v)) {
        let mut next = cand.intersection(&rm.neighbors(v));
        next.remove(v);
        chosen.push(v);
        let flow = shapes_rec(rm, r, base, req, chosen, next, v + 1, visit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Lexicographically first clique of double edges of the given size inside
/// the sorted list `c`.
fn double_clique_within(rm: &ReducedMultigraph, c: &[usize], size: usize) -> Option<Vec<usize>> {
    fn rec(rm: &ReducedMultigraph, c: &[usize], size: usize, from: usize, acc: &mut Vec<usize>) -> bool {
        if acc.len() == size {
            return true;
        }
        for x in from..c.len() {
            if c.len() - x < size - acc.len() {
                break;
            }
            if acc.iter().all(|&a| rm.mult(a, c[x]) == 2) {
                acc.push(c[x]);
                if rec(rm, c, size, x + 1, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(size);
    rec(rm, c, size, 0, &mut acc).then_some(acc)
}

/// First `K_r` multi-embedding whose image contains every pinned cluster.
///
/// A fiber of a clique pattern has at most two vertices, since three would
/// induce a triangle, so a `K_r` multi-embedding is a clique `C` of clusters
/// with a double-edge sub-clique `D` carrying two vertices each.
pub fn find_kr_multi_embedding(rm: &ReducedMultigraph, r: usize, pins: &[usize]) -> Result<Option<MultiEmbedding>> {
    if r < 2 {
        return input("clique size must be at least 2");
    }
    let mut found = None;
    let _ = for_each_kr_shape(rm, r, pins, &mut |c, d| {
        let singles: Vec<usize> = c.iter().copied().filter(|x| !d.contains(x)).collect();
        found = Some(MultiEmbedding::clique(d, &singles));
        ControlFlow::Break(())
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> ReducedMultigraph {
        ReducedMultigraph::from_edges(2, &[(0, 1, 1)]).unwrap()
    }

    fn double_edge() -> ReducedMultigraph {
        ReducedMultigraph::from_edges(2, &[(0, 1, 2)]).unwrap()
    }

    #[test]
    fn validator_examples() {
        let one = ReducedMultigraph::new(1);
        let k2 = MultiEmbedding::new(Graph::complete(2), vec![0, 0]).unwrap();
        assert!(validate_multi_embedding(&k2, &one).unwrap().is_valid());
        let k3 = MultiEmbedding::new(Graph::complete(3), vec![0, 0, 0]).unwrap();
        assert_eq!(validate_multi_embedding(&k3, &one).unwrap().conditions(), vec![1]);
        let k4 = MultiEmbedding::new(Graph::complete(4), vec![0, 0, 1, 1]).unwrap();
        assert_eq!(validate_multi_embedding(&k4, &single_edge()).unwrap().conditions(), vec![3]);
        assert!(validate_multi_embedding(&k4, &double_edge()).unwrap().is_valid());
    }

    #[test]
    fn validator_conditions_two_and_four() {
        let empty = ReducedMultigraph::new(2);
        let k2 = MultiEmbedding::new(Graph::complete(2), vec![0, 1]).unwrap();
        assert_eq!(validate_multi_embedding(&k2, &empty).unwrap().conditions(), vec![2]);
        // A 2-path fiber whose three vertices all see one vertex elsewhere.
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let me = MultiEmbedding::new(h, vec![0, 0, 0, 1]).unwrap();
        let rep = validate_multi_embedding(&me, &double_edge()).unwrap();
        assert!(rep.conditions().contains(&4));
        // Two nonadjacent pattern vertices on one cluster are not an edge.
        let me = MultiEmbedding::new(Graph::empty(2), vec![0, 0]).unwrap();
        assert_eq!(validate_multi_embedding(&me, &ReducedMultigraph::new(1)).unwrap().conditions(), vec![1]);
        assert!(validate_multi_embedding(&me, &ReducedMultigraph::new(0)).is_err());
    }

    #[test]
    fn finder_examples() {
        let me = find_kr_multi_embedding(&double_edge(), 4, &[]).unwrap().unwrap();
        assert_eq!(me.assignment(), &[0, 0, 1, 1]);
        assert!(find_kr_multi_embedding(&single_edge(), 4, &[]).unwrap().is_none());
        let r = 5;
        let edges: Vec<(usize, usize, u8)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j, 1))).collect();
        let rm = ReducedMultigraph::from_edges(r, &edges).unwrap();
        let me = find_kr_multi_embedding(&rm, r, &[]).unwrap().unwrap();
        assert!(validate_multi_embedding(&me, &rm).unwrap().is_valid());
        let all: Vec<usize> = (0..r).collect();
        let me = find_kr_multi_embedding(&rm, r, &all).unwrap().unwrap();
        assert_eq!(me.assignment(), all.as_slice());
        assert!(validate_multi_embedding(&me, &rm).unwrap().is_valid());
        assert!(find_kr_multi_embedding(&rm, 1, &[]).is_err());
    }

    #[test]
    fn finder_honours_pins() {
        let rm = ReducedMultigraph::from_edges(4, &[(0, 1, 2), (2, 3, 2), (1, 2, 1)]).unwrap();
        let me = find_kr_multi_embedding(&rm, 4, &[3]).unwrap().unwrap();
        assert_eq!(me.used_clusters(), vec![2, 3]);
        let me = find_kr_multi_embedding(&rm, 3, &[1, 2]).unwrap().unwrap();
        assert!(me.uses(1) && me.uses(2));
        assert!(validate_multi_embedding(&me, &rm).unwrap().is_valid());
        assert!(find_kr_multi_embedding(&rm, 3, &[0, 3]).unwrap().is_none());
    }
}
