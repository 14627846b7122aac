use super::{MultiEmbedding, Partition, ReducedMultigraph};
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    /// `map[h]` is the image of pattern vertex `h`.
    Embedded(Vec<usize>),
    /// No admissible vertex, edge or 2-path for the fiber on `cluster`.
    Stuck { cluster: usize, fiber: Vec<usize> },
}

/// Realises the pattern of `me` inside `g`, each vertex inside the target set
/// of its cluster, following the peeling recursion: singleton fibers first,
/// then the edges and 2-paths, always keeping only candidates whose degree
/// into every still-demanded target exceeds `(d − ε)·|target|`, where `d` is
/// the measured density of the cluster pair.
///
/// `pins` fixes up to two pattern vertices to given vertices of `g`; pinned
/// pattern vertices must be at distance at least 3 and their assignment is
/// ignored. Every success is re-verified before it is returned.
pub fn greedy_embed(
    g: &Graph,
    p: &Partition,
    rm: &ReducedMultigraph,
    me: &MultiEmbedding,
    targets: &[VertexSet],
    pins: &[(usize, usize)],
    eps: Rational,
) -> Result<EmbedOutcome> {
    let h = me.pattern();
    let hn = h.n();
    let k = p.k();
    if rm.k() != k || targets.len() != k {
        return input("partition, reduced multigraph and targets disagree on the cluster count");
    }
    if p.n() != g.n() {
        return input("partition does not match the graph");
    }
    if pins.len() > 2 {
        return input("at most two pinned vertices");
    }
    for (i, t) in targets.iter().enumerate() {
        if !t.iter().all(|x| p.cluster(i).contains(x)) {
            return input(format!("target set of cluster {i} leaves the cluster"));
        }
    }
    let pinned: Vec<usize> = pins.iter().map(|&(u, _)| u).collect();
    for &(u, ug) in pins {
        if u >= hn {
            return input(format!("pinned pattern vertex {u} out of range"));
        }
        g.check_vertex(ug)?;
    }
    if let [(u, ug), (v, vg)] = pins {
        if u == v || ug == vg {
            return input("pinned vertices must be distinct");
        }
        if h.has_edge(*u, *v) || h.neighbors(*u).intersection_count(h.neighbors(*v)) > 0 {
            return input("pinned pattern vertices must have distance at least 3");
        }
    }
    if let Some(src) = rm.source() {
        let beta = src.params.beta;
        for &(u, ug) in pins {
            for x in h.neighbors(u).iter().filter(|x| !pinned.contains(x)) {
                let c = p.cluster(me.cluster_of(x));
                let d = Rational::from_integer(g.degree_into(ug, c)? as i64);
                if d < beta * Rational::from_integer(c.len() as i64) {
                    return input(format!("pinned vertex {ug} has low degree into cluster {}", me.cluster_of(x)));
                }
            }
        }
    }

    let n = g.n();
    let mut cand: Vec<BitSet> = targets.iter().map(|t| t.to_bits(n)).collect();
    let mut map: Vec<Option<usize>> = vec![None; hn];
    let mut used = BitSet::new(n);
    for &(u, ug) in pins {
        map[u] = Some(ug);
        used.insert(ug);
    }
    for c in cand.iter_mut() {
        c.difference_with(&used);
    }
    for &(u, ug) in pins {
        for x in h.neighbors(u).iter().filter(|&x| map[x].is_none()) {
            cand[me.cluster_of(x)].intersect_with(g.neighbors(ug));
        }
    }
    let density = |i: usize, j: usize| -> Result<Rational> {
        Ok(g.pair_density(p.cluster(i), p.cluster(j))?.value())
    };

    // Fibers of the unpinned vertices, singletons first.
    let mut fibers: Vec<(usize, Vec<usize>)> = me
        .used_clusters()
        .into_iter()
        .map(|i| (i, me.fiber(i).into_iter().filter(|h| !pinned.contains(h)).collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty())
        .collect();
    fibers.sort_by_key(|(i, f)| (f.len() > 1, *i));

    for (i, fiber) in fibers {
        // Clusters still to be embedded that some fiber vertex must see.
        let mut demands: Vec<usize> = Vec::new();
        for &a in &fiber {
            for x in h.neighbors(a).iter() {
                let j = me.cluster_of(x);
                if map[x].is_none() && j != i && !fiber.contains(&x) && !demands.contains(&j) {
                    demands.push(j);
                }
            }
        }
        demands.sort_unstable();
        let mut floors = Vec::with_capacity(demands.len());
        for &j in &demands {
            floors.push((density(i, j)? - eps) * Rational::from_integer(cand[j].count() as i64));
        }
        let mut pool = cand[i].clone();
        pool.difference_with(&used);
        let survivors: Vec<usize> = pool
            .iter()
            .filter(|&x| {
                demands
                    .iter()
                    .zip(&floors)
                    .all(|(&j, floor)| Rational::from_integer(g.neighbors(x).intersection_count(&cand[j]) as i64) > *floor)
            })
            .collect();
        let choice = pick_fiber(g, h, &fiber, &survivors, &demands, &cand, me);
        let Some(images) = choice else {
            return Ok(EmbedOutcome::Stuck { cluster: i, fiber });
        };
        for (&a, &x) in fiber.iter().zip(&images) {
            map[a] = Some(x);
            used.insert(x);
        }
        for c in cand.iter_mut() {
            c.difference_with(&used);
        }
        for (&a, &x) in fiber.iter().zip(&images) {
            for y in h.neighbors(a).iter().filter(|&y| map[y].is_none()) {
                cand[me.cluster_of(y)].intersect_with(g.neighbors(x));
            }
        }
    }

    let map: Vec<usize> = map.into_iter().map(|m| m.expect("every pattern vertex is placed")).collect();
    verify(g, me, targets, pins, &map)?;
    Ok(EmbedOutcome::Embedded(map))
}

/// Images for one fiber among the surviving candidates, maximising the
/// smallest demanded candidate set that remains afterwards.
fn pick_fiber(
    g: &Graph,
    h: &Graph,
    fiber: &[usize],
    survivors: &[usize],
    demands: &[usize],
    cand: &[BitSet],
    me: &MultiEmbedding,
) -> Option<Vec<usize>> {
    let score = |images: &[usize]| -> usize {
        demands
            .iter()
            .map(|&j| {
                let mut s = cand[j].clone();
                for (&a, &x) in fiber.iter().zip(images) {
                    if h.neighbors(a).iter().any(|y| me.cluster_of(y) == j) {
                        s.intersect_with(g.neighbors(x));
                    }
                }
                for &x in images {
                    s.remove(x);
                }
                s.count()
            })
            .min()
            .unwrap_or(usize::MAX)
    };
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut consider = |images: Vec<usize>| {
        let s = score(&images);
        if s > 0 && best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, images));
        }
    };
    match fiber.len() {
        1 => survivors.iter().for_each(|&x| consider(vec![x])),
        2 => {
            for (ia, &a) in survivors.iter().enumerate() {
                for &b in &survivors[ia + 1..] {
                    if g.has_edge(a, b) {
                        consider(vec![a, b]);
                    }
                }
            }
        }
        3 => {
            // Pattern path centre: the fiber vertex adjacent to both others.
            let centre = (0..3).find(|&c| (0..3).all(|o| o == c || h.has_edge(fiber[c], fiber[o])))?;
            let ends: Vec<usize> = (0..3).filter(|&o| o != centre).collect();
            for &m in survivors {
                let nb: Vec<usize> = survivors.iter().copied().filter(|&x| g.has_edge(m, x)).collect();
                for (ia, &a) in nb.iter().enumerate() {
                    for &b in &nb[ia + 1..] {
                        let mut images = vec![0; 3];
                        images[centre] = m;
                        images[ends[0]] = a;
                        images[ends[1]] = b;
                        consider(images);
                    }
                }
            }
        }
        _ => return None,
    }
    best.map(|(_, images)| images)
}

fn verify(g: &Graph, me: &MultiEmbedding, targets: &[VertexSet], pins: &[(usize, usize)], map: &[usize]) -> Result<()> {
    let h = me.pattern();
    let mut seen = BitSet::new(g.n());
    for (a, &x) in map.iter().enumerate() {
        if seen.contains(x) {
            return Err(Error::Invariant(format!("vertex {x} used twice by the embedding")));
        }
        seen.insert(x);
        let pinned = pins.iter().find(|&&(u, _)| u == a);
        match pinned {
            Some(&(_, ug)) if ug != x => return Err(Error::Invariant(format!("pin of {a} not honoured"))),
            None if !targets[me.cluster_of(a)].contains(x) => {
                return Err(Error::Invariant(format!("image of {a} leaves its target set")));
            }
            _ => {}
        }
    }
    for (a, b) in h.edges() {
        if !g.has_edge(map[a], map[b]) {
            return Err(Error::Invariant(format!("pattern edge {a}-{b} not realised")));
        }
    }
    Ok(())
}
