use std::fmt::Write as _;
use std::ops::ControlFlow;

use super::cliques::{enumerate_kr_guarded, for_each_clique_in};
use super::{Budget, Guards};
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};

/// Vertex-disjoint cliques, each of size `r` or `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    r: usize,
    cliques: Vec<VertexSet>,
}

impl Tiling {
    pub fn empty(r: usize) -> Self {
        Tiling { r, cliques: Vec::new() }
    }

    /// Validated constructor.
    pub fn new(g: &Graph, r: usize, cliques: Vec<VertexSet>) -> Result<Self> {
        let t = Tiling { r, cliques };
        t.validate(g)?;
        Ok(t)
    }

    /// Caller guarantees validity (checked in debug builds by callers' tests).
    pub(crate) fn from_parts(r: usize, cliques: Vec<VertexSet>) -> Self {
        Tiling { r, cliques }
    }

    /// Checks disjointness, completeness of every part and part sizes.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = BitSet::new(g.n());
        for c in &self.cliques {
            c.check_within(g.n())?;
            if c.len() != self.r && c.len() != self.r + 1 {
                return input(format!("part {c:?} has size {} (r = {})", c.len(), self.r));
            }
            if !g.is_clique(c.as_slice()) {
                return input(format!("part {c:?} is not a clique"));
            }
            for v in c.iter() {
                if seen.contains(v) {
                    return input(format!("vertex {v} is covered twice"));
                }
                seen.insert(v);
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<VertexSet> {
        self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Number of covered vertices.
    pub fn covered(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).sum()
    }

    /// `true` when every part has exactly `r` vertices.
    pub fn is_pure(&self) -> bool {
        self.cliques.iter().all(|c| c.len() == self.r)
    }

    pub fn count_of_size(&self, size: usize) -> usize {
        self.cliques.iter().filter(|c| c.len() == size).count()
    }

    pub fn covered_bits(&self, n: usize) -> BitSet {
        let mut b = BitSet::new(n);
        for v in self.cliques.iter().flat_map(|c| c.iter()) {
            b.insert(v);
        }
        b
    }

    pub fn uncovered(&self, n: usize) -> VertexSet {
        let mut b = BitSet::full(n);
        b.difference_with(&self.covered_bits(n));
        VertexSet::from_bits(&b)
    }

    pub fn push(&mut self, c: VertexSet) {
        self.cliques.push(c);
    }

    pub(crate) fn parts_mut(&mut self) -> &mut Vec<VertexSet> {
        &mut self.cliques
    }

    /// Parts sorted lexicographically.
    pub fn canonical(mut self) -> Self {
        self.cliques.sort();
        self
    }

    /// `tiling r=<r>` header, then one clique per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("tiling r={}\n", self.r);
        for c in &self.cliques {
            let _ = writeln!(s, "{c}");
        }
        s
    }

    /// Parses [`Tiling::to_text`] output (structure only, no graph check).
    pub fn parse(text: &str) -> Result<Tiling> {
        let mut r = None;
        let mut cliques = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if r.is_none() {
                let val = content
                    .strip_prefix("tiling r=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or(Error::Parse { line, msg: "expected header 'tiling r=<r>'".into() })?;
                r = Some(val);
                continue;
            }
            let verts: std::result::Result<Vec<usize>, _> = content.split_whitespace().map(str::parse).collect();
            let verts = verts.map_err(|_| Error::Parse { line, msg: "invalid vertex index".into() })?;
            let set = VertexSet::from_iter_dedup(verts).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
            cliques.push(set);
        }
        let r = r.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        Ok(Tiling { r, cliques })
    }
}

/// Outcome of the factor decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorDecision {
    /// A spanning tiling, as a witness.
    Factor(Tiling),
    NoFactor,
    /// `r` does not divide `n`, so no factor can exist.
    Indivisible { n: usize, r: usize },
}

impl FactorDecision {
    pub fn exists(&self) -> bool {
        matches!(self, FactorDecision::Factor(_))
    }

    pub fn witness(&self) -> Option<&Tiling> {
        match self {
            FactorDecision::Factor(t) => Some(t),
            _ => None,
        }
    }
}

/// Decides whether `G` has a `K_r`-factor.
///
/// Exact-cover search that always branches on an uncovered vertex of
/// minimum degree among uncovered vertices, enumerating its cliques lazily.
pub fn has_kr_factor(g: &Graph, r: usize, guards: &Guards) -> Result<FactorDecision> {
    if r == 0 {
        return input("clique size must be positive");
    }
    if g.n() % r != 0 {
        return Ok(FactorDecision::Indivisible { n: g.n(), r });
    }
    let mut budget = Budget::new(guards.max_nodes, "factor search");
    let mut avail = g.all_vertices();
    let mut parts = Vec::with_capacity(g.n() / r);
    if factor_search(g, r, &mut avail, &mut parts, &mut budget)? {
        Ok(FactorDecision::Factor(Tiling::from_parts(r, parts).canonical()))
    } else {
        Ok(FactorDecision::NoFactor)
    }
}

fn factor_search(g: &Graph, r: usize, avail: &mut BitSet, parts: &mut Vec<VertexSet>, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    let mut pick: Option<(usize, usize)> = None;
    for v in avail.iter() {
        let d = g.degree_into_bits(v, avail);
        if pick.is_none_or(|(_, best)| d < best) {
            pick = Some((v, d));
        }
    }
    let Some((v, d)) = pick else {
        return Ok(true);
    };
    if d + 1 < r {
        return Ok(false);
    }
    let cand = avail.intersection(g.neighbors(v));
    let mut outcome: Result<bool> = Ok(false);
    let _ = for_each_clique_in(g, &cand, r - 1, &mut |c: &[usize]| {
        for &u in c {
            avail.remove(u);
        }
        avail.remove(v);
        let mut part: Vec<usize> = c.to_vec();
        part.push(v);
        part.sort_unstable();
        parts.push(VertexSet::from_sorted(part));
        let res = factor_search(g, r, avail, parts, budget);
        match res {
            Ok(true) => {
                outcome = Ok(true);
                return ControlFlow::Break(());
            }
            Err(e) => {
                outcome = Err(e);
                return ControlFlow::Break(());
            }
            Ok(false) => {}
        }
        parts.pop();
        avail.insert(v);
        for &u in c {
            avail.insert(u);
        }
        ControlFlow::Continue(())
    });
    outcome
}

/// A maximum-cardinality `K_r`-tiling.
pub fn max_kr_tiling(g: &Graph, r: usize, guards: &Guards) -> Result<Tiling> {
    max_cover_tiling(g, r, &[r], guards)
}

/// Tiling by cliques whose sizes are drawn from `sizes` that covers as many
/// vertices as possible; `r` is the nominal clique size of the result.
///
/// Branch and bound over the lexicographic clique list: the lowest undecided
/// vertex is either covered by a clique whose minimum it is, or left
/// uncovered. The bound is the covered count plus the undecided vertices
/// that could still be packed.
pub fn max_cover_tiling(g: &Graph, r: usize, sizes: &[usize], guards: &Guards) -> Result<Tiling> {
    if sizes.is_empty() || sizes.iter().any(|&s| s != r && s != r + 1) || r == 0 {
        return input("clique sizes must be drawn from {r, r+1}");
    }
    let mut by_min: Vec<Vec<VertexSet>> = vec![Vec::new(); g.n()];
    let mut total = 0;
    for &s in sizes {
        let list = enumerate_kr_guarded(g, s, guards.max_cliques.saturating_sub(total))?;
        total += list.len();
        for c in list {
            by_min[c.as_slice()[0]].push(c);
        }
    }
    for list in &mut by_min {
        list.sort();
    }
    let single = if sizes.iter().all(|&s| s == r) { Some(r) } else { None };
    let mut search = CoverSearch {
        by_min: &by_min,
        single,
        best: Vec::new(),
        best_cover: 0,
        target: single.map_or(g.n(), |r| r * (g.n() / r)),
        budget: Budget::new(guards.max_nodes, "maximum tiling search"),
    };
    let mut avail = g.all_vertices();
    let mut chosen = Vec::new();
    search.run(&mut avail, &mut chosen, 0)?;
    Ok(Tiling::from_parts(r, search.best))
}

struct CoverSearch<'a> {
    by_min: &'a [Vec<VertexSet>],
    single: Option<usize>,
    best: Vec<VertexSet>,
    best_cover: usize,
    target: usize,
    budget: Budget,
}

impl CoverSearch<'_> {
    fn bound(&self, avail: usize) -> usize {
        match self.single {
            Some(r) => r * (avail / r),
            None => avail,
        }
    }

    /// Returns `true` once the target coverage is reached.
    fn run(&mut self, avail: &mut BitSet, chosen: &mut Vec<VertexSet>, covered: usize) -> Result<bool> {
        self.budget.tick()?;
        if covered > self.best_cover {
            self.best_cover = covered;
            self.best = chosen.clone();
            if covered >= self.target {
                return Ok(true);
            }
        }
        let Some(v) = avail.first() else {
            return Ok(false);
        };
        if covered + self.bound(avail.count()) <= self.best_cover {
            return Ok(false);
        }
        let by_min = self.by_min;
        for c in &by_min[v] {
            if c.iter().all(|u| avail.contains(u)) {
                for u in c.iter() {
                    avail.remove(u);
                }
                chosen.push(c.clone());
                let done = self.run(avail, chosen, covered + c.len())?;
                chosen.pop();
                for u in c.iter() {
                    avail.insert(u);
                }
                if done {
                    return Ok(true);
                }
            }
        }
        avail.remove(v);
        let done = self.run(avail, chosen, covered)?;
        avail.insert(v);
        Ok(done)
    }
}
