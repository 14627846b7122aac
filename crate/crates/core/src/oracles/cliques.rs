use std::ops::ControlFlow;

use super::Budget;
use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};

/// Visits every `size`-clique inside `cand` in lexicographic order.
/// Each clique is passed sorted. Stops early when the visitor breaks.
pub fn for_each_clique_in<F>(g: &Graph, cand: &BitSet, size: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut stack = Vec::with_capacity(size);
    if size == 0 {
        return visit(&stack);
    }
    extend(g, cand, size, &mut stack, visit)
}

fn extend<F>(g: &Graph, cand: &BitSet, size: usize, stack: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let need = size - stack.len();
    if cand.count() < need {
        return ControlFlow::Continue(());
    }
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        stack.push(v);
        if need == 1 {
            visit(stack)?;
        } else {
            let next = rest.intersection(g.neighbors(v));
            extend(g, &next, size, stack, visit)?;
        }
        stack.pop();
        if rest.count() < need {
            break;
        }
    }
    ControlFlow::Continue(())
}

/// The lexicographically first `size`-clique inside `cand`.
pub fn first_clique_in(g: &Graph, cand: &BitSet, size: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_clique_in(g, cand, size, &mut |c: &[usize]| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// All `r`-cliques, each sorted, in lexicographic order.
pub fn enumerate_kr(g: &Graph, r: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let _ = for_each_clique_in(g, &g.all_vertices(), r, &mut |c: &[usize]| {
        out.push(VertexSet::from_sorted(c.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Like [`enumerate_kr`] but fails once more than `limit` cliques exist.
pub fn enumerate_kr_guarded(g: &Graph, r: usize, limit: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    if r == 0 {
        return Ok(out);
    }
    let flow = for_each_clique_in(g, &g.all_vertices(), r, &mut |c: &[usize]| {
        if out.len() >= limit {
            return ControlFlow::Break(());
        }
        out.push(VertexSet::from_sorted(c.to_vec()));
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Break(()) => Err(Error::Resource(format!("more than {limit} {r}-cliques"))),
        ControlFlow::Continue(()) => Ok(out),
    }
}

/// Maximum clique by branch and bound with a greedy colouring bound.
pub fn max_clique(g: &Graph, max_nodes: u64) -> Result<VertexSet> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut budget = Budget::new(max_nodes, "maximum clique search");
    expand(g, g.all_vertices(), &mut current, &mut best, &mut budget)?;
    best.sort_unstable();
    Ok(VertexSet::from_sorted(best))
}

/// Greedy sequential colouring of `cand`; returns vertices ordered by colour
/// together with the colour (1-based) of each.
fn colour_order(g: &Graph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count());
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v));
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand(g: &Graph, mut cand: BitSet, current: &mut Vec<usize>, best: &mut Vec<usize>, budget: &mut Budget) -> Result<()> {
    budget.tick()?;
    let (order, colours) = colour_order(g, &cand);
    for i in (0..order.len()).rev() {
        if current.len() + colours[i] <= best.len() {
            return Ok(());
        }
        let v = order[i];
        current.push(v);
        let next = cand.intersection(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, next, current, best, budget)?;
        }
        current.pop();
        cand.remove(v);
    }
    Ok(())
}
