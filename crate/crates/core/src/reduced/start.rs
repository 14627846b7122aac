use std::ops::ControlFlow;

use super::embedding::for_each_kr_shape;
use super::{MultiEmbedding, Partition, ReducedMultigraph};
use crate::error::{input, Result};
use crate::graph::{BitSet, Graph};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StartRoute {
    /// Double-edge clique of size `ell` in `Q_v`, completed greedily in its
    /// joint neighbourhood.
    Greedy { ell: usize },
    /// The greedy completion failed; found by exhaustive search.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StartOutcome {
    Found {
        embedding: MultiEmbedding,
        route: StartRoute,
        /// The cluster outside `Q_v` that carries one vertex, if any.
        outside: Option<usize>,
    },
    Absent,
}

/// Clusters `i` with `deg(v, V_i) ≥ β |V_i|`.
pub fn q_v(g: &Graph, p: &Partition, v: usize, beta: Rational) -> Result<BitSet> {
    g.check_vertex(v)?;
    let mut q = BitSet::new(p.k());
    for (i, c) in p.clusters().iter().enumerate() {
        let d = g.degree_into(v, c)? as i64;
        if Rational::from_integer(d) >= beta * Rational::from_integer(c.len() as i64) {
            q.insert(i);
        }
    }
    Ok(q)
}

/// A `K_r` multi-embedding with at most one of its `r` vertices on a
/// cluster outside `Q_v`.
pub fn lemma_start_embedding(
    g: &Graph,
    p: &Partition,
    rm: &ReducedMultigraph,
    v: usize,
    r: usize,
    beta: Rational,
) -> Result<StartOutcome> {
    if r < 2 {
        return input("clique size must be at least 2");
    }
    if rm.k() != p.k() {
        return input("reduced multigraph and partition disagree on the cluster count");
    }
    let q = q_v(g, p, v, beta)?;
    if q.is_empty() {
        return Ok(StartOutcome::Absent);
    }
    let k = rm.k();

    // Largest double-edge clique in Q_v, capped so that its doubles fit.
    let mut clique = largest_double_clique(rm, &q);
    clique.truncate(r / 2);
    let ell = clique.len();
    let mut joint = BitSet::full(k);
    for &c in &clique {
        joint.intersect_with(&rm.neighbors(c));
    }
    let s_side = joint.intersection(&q);
    let mut t_side = joint.clone();
    t_side.difference_with(&q);

    let need = r - 2 * ell;
    let mut picked: Vec<usize> = Vec::new();
    let compatible = |picked: &[usize], x: usize| picked.iter().all(|&y| rm.mult(x, y) >= 1);
    for x in s_side.iter() {
        if picked.len() + 1 >= need {
            break;
        }
        if compatible(&picked, x) {
            picked.push(x);
        }
    }
    let mut outside = None;
    if need > 0 && picked.len() + 1 == need {
        let last = s_side
            .iter()
            .find(|&x| !picked.contains(&x) && compatible(&picked, x))
            .or_else(|| t_side.iter().find(|&x| compatible(&picked, x)));
        if let Some(x) = last {
            if !q.contains(x) {
                outside = Some(x);
            }
            picked.push(x);
        }
    }
    if picked.len() == need {
        return Ok(StartOutcome::Found {
            embedding: MultiEmbedding::clique(&clique, &picked),
            route: StartRoute::Greedy { ell },
            outside,
        });
    }

    let mut found = None;
    let _ = for_each_kr_shape(rm, r, &[], &mut |c, d| {
        let out: Vec<usize> = c.iter().copied().filter(|&x| !q.contains(x)).collect();
        if out.len() <= 1 && out.iter().all(|x| !d.contains(x)) {
            found = Some((c.to_vec(), d.to_vec(), out.first().copied()));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    Ok(match found {
        Some((c, d, outside)) => {
            let singles: Vec<usize> = c.into_iter().filter(|x| !d.contains(x)).collect();
            StartOutcome::Found { embedding: MultiEmbedding::clique(&d, &singles), route: StartRoute::Exhaustive, outside }
        }
        None => StartOutcome::Absent,
    })
}

/// Lexicographically first maximum clique of double edges inside `within`.
fn largest_double_clique(rm: &ReducedMultigraph, within: &BitSet) -> Vec<usize> {
    fn rec(rm: &ReducedMultigraph, cand: &BitSet, acc: &mut Vec<usize>, best: &mut Vec<usize>) {
        if acc.len() > best.len() {
            *best = acc.clone();
        }
        for x in cand.iter() {
            if acc.len() + cand.iter().filter(|&y| y >= x).count() <= best.len() {
                break;
            }
            let mut next = cand.intersection(&rm.double_neighbors(x));
            for y in cand.iter().take_while(|&y| y < x) {
                next.remove(y);
            }
            acc.push(x);
            rec(rm, &next, acc, best);
            acc.pop();
        }
    }
    let mut best = Vec::new();
    rec(rm, within, &mut Vec::new(), &mut best);
    best
}
