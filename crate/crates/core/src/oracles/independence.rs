use super::cliques::{first_clique_in, max_clique};
use super::{Budget, Guards};
use crate::error::{input, Result};
use crate::graph::{BitSet, Graph, VertexSet};

/// A maximum independent set, found as a maximum clique of the complement.
pub fn maximum_independent_set(g: &Graph, guards: &Guards) -> Result<VertexSet> {
    if g.n() == 0 {
        return input("independence number of the empty graph");
    }
    max_clique(&g.complement(), guards.max_nodes)
}

/// `α(G)`.
pub fn independence_number(g: &Graph, guards: &Guards) -> Result<usize> {
    maximum_independent_set(g, guards).map(|s| s.len())
}

/// `α_ℓ(G)`: size of the largest vertex set inducing no `K_ℓ`.
///
/// Branch and bound over vertices in index order. The bound covers the
/// undecided vertices greedily by cliques of `G`; a clique contributes at
/// most `ℓ - 1` vertices to a `K_ℓ`-free set.
pub fn alpha_ell(g: &Graph, ell: usize, guards: &Guards) -> Result<usize> {
    if ell < 2 {
        return input("alpha_ell needs ell >= 2");
    }
    let mut chosen = BitSet::new(g.n());
    let mut best = 0;
    let mut budget = Budget::new(guards.max_nodes, "alpha_ell search");
    let order: Vec<usize> = (0..g.n()).collect();
    alpha_search(g, ell, &order, 0, &mut chosen, 0, &mut best, &mut budget)?;
    Ok(best)
}

fn clique_cover_bound(g: &Graph, rest: &[usize], ell: usize) -> usize {
    let mut left = BitSet::from_iter(g.n(), rest.iter().copied());
    let mut bound = 0;
    while let Some(v) = left.first() {
        left.remove(v);
        let mut cand = left.intersection(g.neighbors(v));
        let mut size = 1;
        while let Some(u) = cand.first() {
            size += 1;
            left.remove(u);
            cand.remove(u);
            cand.intersect_with(g.neighbors(u));
        }
        bound += size.min(ell - 1);
    }
    bound
}

#[allow(clippy::too_many_arguments)]
fn alpha_search(
    g: &Graph,
    ell: usize,
    order: &[usize],
    pos: usize,
    chosen: &mut BitSet,
    size: usize,
    best: &mut usize,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if size > *best {
        *best = size;
    }
    if pos == order.len() {
        return Ok(());
    }
    if size + clique_cover_bound(g, &order[pos..], ell) <= *best {
        return Ok(());
    }
    let v = order[pos];
    let nbrs_in = chosen.intersection(g.neighbors(v));
    if first_clique_in(g, &nbrs_in, ell - 1).is_none() {
        chosen.insert(v);
        alpha_search(g, ell, order, pos + 1, chosen, size + 1, best, budget)?;
        chosen.remove(v);
    }
    alpha_search(g, ell, order, pos + 1, chosen, size, best, budget)
}
