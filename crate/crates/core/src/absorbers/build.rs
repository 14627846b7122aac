use std::ops::ControlFlow;

use super::check::{factors, is_s_t_absorber};
use super::AbsorberParams;
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::{first_clique_in, for_each_clique_in, Guards, Tiling};
use crate::reduced::{find_diamond_path, DiamondPath, DiamondSearch};

/// Longest spine used for one diamond path.
const MAX_SPINE: usize = 7;
/// Core cliques tried before giving up on the diamond route.
const CORE_TRIES: usize = 8;
/// Candidate bodies tried by the grouping route.
const GROUPING_TRIES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbsorberRoute {
    /// A core `K_r` with a diamond path from each core vertex to its partner
    /// in `S`.
    Diamond { core: VertexSet, paths: Vec<DiamondPath> },
    /// Disjoint `K_r`'s chosen directly and checked by the factor oracle.
    Grouping,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SAbsorber {
    pub s_set: VertexSet,
    pub body: VertexSet,
    pub route: AbsorberRoute,
    /// Filler `K_r`'s, part of the body.
    pub padding: Vec<VertexSet>,
}

/// Finds an `(S, t)`-absorber avoiding `forbidden`.
///
/// With `t ≥ r` a core `K_r` is matched to `S` and every pair is joined by a
/// `K_r`-diamond path of at most seven spine vertices, all vertex-disjoint;
/// the rest of the `r·t` body is filled with disjoint `K_r`'s. For `t < r`
/// the paths cannot fit and `t` disjoint `K_r`'s are tried directly. The
/// result always passes [`is_s_t_absorber`]; `None` means the search failed.
pub fn build_s_absorber(
    g: &Graph,
    s: &VertexSet,
    p: &AbsorberParams,
    forbidden: &VertexSet,
    guards: &Guards,
) -> Result<Option<SAbsorber>> {
    s.check_within(g.n())?;
    forbidden.check_within(g.n())?;
    if s.len() != p.r {
        return input(format!("|S| = {} but r = {}", s.len(), p.r));
    }
    let mut blocked = s.to_bits(g.n());
    blocked.union_with(&forbidden.to_bits(g.n()));
    let mut avail = BitSet::full(g.n());
    avail.difference_with(&blocked);
    if avail.count() < p.body_size() {
        return Ok(None);
    }
    let found = if p.t >= p.r { diamond_route(g, s, p, &avail)? } else { grouping_route(g, s, p, &avail, guards)? };
    let Some(a) = found else { return Ok(None) };
    if let AbsorberRoute::Diamond { core, paths } = &a.route {
        let (without, with) = diamond_witnesses(core, paths, &a.padding);
        let check = |parts: Vec<VertexSet>, want: &VertexSet| -> Result<()> {
            let t = Tiling::new(g, p.r, parts).map_err(|e| Error::Invariant(format!("absorber witness: {e}")))?;
            if !t.is_pure() || t.covered_bits(g.n()) != want.to_bits(g.n()) {
                return Err(Error::Invariant("absorber witness does not span its set".into()));
            }
            Ok(())
        };
        check(without, &a.body)?;
        check(with, &a.body.union(s))?;
    }
    if !is_s_t_absorber(g, s, &a.body, p, guards)? {
        return match a.route {
            AbsorberRoute::Grouping => Ok(None),
            AbsorberRoute::Diamond { .. } => Err(Error::Invariant("diamond absorber failed the factor oracle".into())),
        };
    }
    Ok(Some(a))
}

/// The two `K_r`-factors of a diamond absorber. Without `S` every gem takes
/// the spine vertex before it; with `S` it takes the one after it, and the
/// freed core vertices form the core `K_r`.
pub fn diamond_witnesses(core: &VertexSet, paths: &[DiamondPath], padding: &[VertexSet]) -> (Vec<VertexSet>, Vec<VertexSet>) {
    let mut without = padding.to_vec();
    let mut with = padding.to_vec();
    with.push(core.clone());
    for path in paths {
        for (j, gem) in path.gems.iter().enumerate() {
            without.push(VertexSet::from_sorted(sorted_with(gem, path.spine[j])));
            with.push(VertexSet::from_sorted(sorted_with(gem, path.spine[j + 1])));
        }
    }
    (without, with)
}

fn sorted_with(set: &VertexSet, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().chain([v]).collect();
    out.sort_unstable();
    out
}

fn diamond_route(g: &Graph, s: &VertexSet, p: &AbsorberParams, avail: &BitSet) -> Result<Option<SAbsorber>> {
    let r = p.r;
    let mut cores = Vec::new();
    let _ = for_each_clique_in(g, avail, r, &mut |c: &[usize]| {
        cores.push(c.to_vec());
        if cores.len() >= CORE_TRIES {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    for core in cores {
        for shift in 0..r {
            if let Some(a) = attach_paths(g, s, p, avail, &core, shift)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

/// Pairs core vertex `i` with `s[(i + shift) mod r]`.
fn attach_paths(
    g: &Graph,
    s: &VertexSet,
    p: &AbsorberParams,
    avail: &BitSet,
    core: &[usize],
    shift: usize,
) -> Result<Option<SAbsorber>> {
    let r = p.r;
    let mut used = BitSet::full(g.n());
    used.difference_with(avail);
    for &u in core {
        used.insert(u);
    }
    let mut gems_left = p.t;
    let mut paths = Vec::with_capacity(r);
    for (i, &u) in core.iter().enumerate() {
        let target = s.as_slice()[(i + shift) % r];
        let reserve = r - i - 1;
        let mut opts = DiamondSearch::new(g, r, MAX_SPINE.min(gems_left - reserve + 1));
        opts.excluded = used.clone();
        opts.excluded.remove(u);
        opts.excluded.remove(target);
        let path = match find_diamond_path(g, u, target, &opts) {
            Ok(Some(path)) => path,
            Ok(None) | Err(Error::Resource(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        for v in path.vertices().iter() {
            used.insert(v);
        }
        gems_left -= path.gems.len();
        paths.push(path);
    }
    let mut body = used.clone();
    body.intersect_with(avail);
    let mut free = avail.clone();
    free.difference_with(&used);
    let mut padding = Vec::with_capacity(gems_left);
    for _ in 0..gems_left {
        let Some(c) = first_clique_in(g, &free, r) else { return Ok(None) };
        for &v in &c {
            free.remove(v);
            body.insert(v);
        }
        padding.push(VertexSet::from_sorted(c));
    }
    let route = AbsorberRoute::Diamond { core: VertexSet::from_sorted(core.to_vec()), paths };
    Ok(Some(SAbsorber { s_set: s.clone(), body: VertexSet::from_bits(&body), route, padding }))
}

/// Takes `t` disjoint `K_r`'s among the vertices with the most neighbours
/// in `S`, widening the candidate window on every try.
fn grouping_route(g: &Graph, s: &VertexSet, p: &AbsorberParams, avail: &BitSet, guards: &Guards) -> Result<Option<SAbsorber>> {
    let sbits = s.to_bits(g.n());
    let mut order: Vec<usize> = avail.iter().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree_into_bits(v, &sbits)));
    for attempt in 0..GROUPING_TRIES {
        let width = (p.body_size() + attempt * p.r).min(order.len());
        let mut free = BitSet::from_iter(g.n(), order[..width].iter().copied());
        let mut parts = Vec::with_capacity(p.t);
        while parts.len() < p.t {
            let Some(c) = first_clique_in(g, &free, p.r) else { break };
            for &v in &c {
                free.remove(v);
            }
            parts.push(VertexSet::from_sorted(c));
        }
        if parts.len() == p.t {
            let body = VertexSet::from_iter_dedup(parts.iter().flat_map(|c| c.iter()))?;
            if factors(g, &body.union(s), p.r, guards)? {
                return Ok(Some(SAbsorber { s_set: s.clone(), body, route: AbsorberRoute::Grouping, padding: parts }));
            }
        }
        if width == order.len() {
            break;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::rational::ratio;

    fn params(r: usize, t: usize) -> AbsorberParams {
        AbsorberParams::new(r, t, ratio(1, 2), ratio(1, 10)).unwrap()
    }

    #[test]
    fn complete_graph_gets_a_diamond_absorber() {
        let r = 3;
        let p = params(r, 6 * r + 1);
        let g = Graph::complete(70);
        let s = VertexSet::from_sorted(vec![5, 40, 69]);
        let a = build_s_absorber(&g, &s, &p, &VertexSet::default(), &Guards::default()).unwrap().unwrap();
        assert_eq!(a.body.len(), r * p.t);
        assert!(a.body.is_disjoint(&s));
        let AbsorberRoute::Diamond { paths, .. } = &a.route else { panic!("expected the diamond route") };
        assert_eq!(paths.len(), r);
    }

    #[test]
    fn small_component_gives_none() {
        let r = 3;
        let p = params(r, 6 * r + 1);
        let g = Graph::complete(20).disjoint_union(&Graph::empty(100));
        let s = VertexSet::from_sorted(vec![0, 1, 2]);
        let forbidden = VertexSet::default();
        assert_eq!(build_s_absorber(&g, &s, &p, &forbidden, &Guards::default()).unwrap(), None);
    }

    #[test]
    fn grouping_route_for_short_bodies() {
        let r = 3;
        let g = Graph::complete(4 * r);
        let s = VertexSet::range(0, r);
        let a = build_s_absorber(&g, &s, &params(r, 1), &VertexSet::range(r, 2 * r), &Guards::default()).unwrap().unwrap();
        assert_eq!(a.route, AbsorberRoute::Grouping);
        assert_eq!(a.body, VertexSet::range(2 * r, 3 * r));
    }

    #[test]
    fn synthetic_diamond_structure_absorbs() {
        // Core K_3 on 0..3, S = {3, 4, 5}; path i: spine (i, x_i, 3 + i) with
        // gems {a, b} between consecutive spine vertices.
        let r = 3;
        let mut b = GraphBuilder::new(6 + 3 * 5);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            b.add_edge(u, v).unwrap();
        }
        let mut paths = Vec::new();
        for i in 0..r {
            let base = 6 + 5 * i;
            let (x, g1, g2) = (base, [base + 1, base + 2], [base + 3, base + 4]);
            let spine = [i, x, 3 + i];
            for (k, gem) in [g1, g2].iter().enumerate() {
                b.add_edge(gem[0], gem[1]).unwrap();
                for &y in gem {
                    b.add_edge(spine[k], y).unwrap();
                    b.add_edge(spine[k + 1], y).unwrap();
                }
            }
            paths.push(DiamondPath {
                spine: spine.to_vec(),
                gems: vec![VertexSet::from_sorted(g1.to_vec()), VertexSet::from_sorted(g2.to_vec())],
            });
        }
        let g = b.build();
        for path in &paths {
            path.validate(&g, r - 1).unwrap();
        }
        let s = VertexSet::range(3, 6);
        let body = VertexSet::from_iter_dedup((0..3).chain(6..21)).unwrap();
        let p = params(r, 6);
        assert!(is_s_t_absorber(&g, &s, &body, &p, &Guards::default()).unwrap());
        let (without, with) = diamond_witnesses(&VertexSet::range(0, 3), &paths, &[]);
        assert_eq!(Tiling::new(&g, r, without).unwrap().covered(), 18);
        assert_eq!(Tiling::new(&g, r, with).unwrap().covered(), 21);
    }
}
