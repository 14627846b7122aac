use super::greedy::{fill_greedy, greedy_tiling};
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::Tiling;
use crate::rational::{ceil_mul, in_open_unit, Rational};

/// Parameters of the augmentation. Only `mu` enters the moves, through the
/// threshold defining the preferred pool; `eta` sets the fractional target
/// and `rho`, when given, caps the number of blow-up rounds at `⌈1/ρ⌉`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentParams {
    pub r: usize,
    pub eta: Rational,
    pub mu: Rational,
    pub rho: Option<Rational>,
    pub gamma: Rational,
}

impl AugmentParams {
    pub fn new(r: usize, eta: Rational, mu: Rational, rho: Option<Rational>, gamma: Rational) -> Result<Self> {
        if r < 3 {
            return input("augmentation needs r >= 3");
        }
        let all = [Some(eta), Some(mu), rho, Some(gamma)];
        if !all.iter().flatten().all(in_open_unit) {
            return input("eta, mu, rho and gamma must lie in (0, 1)");
        }
        Ok(AugmentParams { r, eta, mu, rho, gamma })
    }

    /// `η = 1/10`, `μ = 1/10`, `γ = 1/10`, ρ measured.
    pub fn with_defaults(r: usize) -> Result<Self> {
        let tenth = Rational::new(1, 10);
        AugmentParams::new(r, tenth, tenth, None, tenth)
    }
}

/// Record of one swap move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentTrace {
    /// The `K_r` part before the move.
    pub chosen_clique: VertexSet,
    /// Position in `chosen_clique` of the vertex that leaves.
    pub missing_index: usize,
    pub swap_edge: (usize, usize),
    /// `|ℛ|`, `|ℛ'|`, `|ℛ''|`, `|ℛ'''|`, `|ℛ'''_j|`.
    pub pool_sizes: PoolSizes,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PoolSizes {
    pub uncovered: usize,
    pub high_degree: usize,
    pub pool: usize,
    pub incident: usize,
    pub class: usize,
}

impl AugmentTrace {
    /// The swap keeps a clique: both endpoints see the `r − 1` retained
    /// vertices and each other, and both miss the vertex that leaves.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (a, b) = self.swap_edge;
        let c = self.chosen_clique.as_slice();
        let w = *c
            .get(self.missing_index)
            .ok_or_else(|| Error::Invariant("missing index outside the clique".into()))?;
        if !g.has_edge(a, b) {
            return Err(Error::Invariant(format!("swap endpoints {a}, {b} are not adjacent")));
        }
        for &x in c.iter().filter(|&&x| x != w) {
            if !g.has_edge(a, x) || !g.has_edge(b, x) {
                return Err(Error::Invariant(format!("swap endpoint misses retained vertex {x}")));
            }
        }
        if g.has_edge(a, w) || g.has_edge(b, w) {
            return Err(Error::Invariant(format!("swap endpoint is not in class {}", self.missing_index)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    /// An uncovered vertex adjacent to the whole part joined it.
    Extended { tiling: Tiling, part: VertexSet, vertex: usize },
    /// A vertex of the part was exchanged for an uncovered edge.
    Swapped { tiling: Tiling, trace: AugmentTrace },
    NoProgress,
}

impl StepOutcome {
    pub fn tiling(&self) -> Option<&Tiling> {
        match self {
            StepOutcome::Extended { tiling, .. } | StepOutcome::Swapped { tiling, .. } => Some(tiling),
            StepOutcome::NoProgress => None,
        }
    }
}

/// One move turning a `K_r` part into a `K_{r+1}`, gaining one vertex.
///
/// The pool is `ℛ'`, the uncovered vertices with `deg(v, T) > (1 − 2/r + μ)|T|`,
/// or all uncovered vertices when no move exists inside `ℛ'`. A direct
/// extension by a pool vertex adjacent to a whole part is tried first.
/// Otherwise the `K_r` part with the most pool vertices having exactly
/// `r − 1` neighbours in it is taken, those vertices are split by their
/// missing position, and an edge inside the largest class replaces the
/// missing vertex. Remaining parts and classes are tried in order before
/// giving up.
pub fn augment_step(g: &Graph, t: &Tiling, p: &AugmentParams) -> Result<StepOutcome> {
    t.validate(g)?;
    let r = t.r();
    if r != p.r {
        return input(format!("tiling has r = {r} but parameters have r = {}", p.r));
    }
    let n = g.n();
    let covered = t.covered_bits(n);
    let mut uncovered = BitSet::full(n);
    uncovered.difference_with(&covered);
    let tsize = covered.count() as i64;
    let threshold = (Rational::from_integer(1) - Rational::new(2, r as i64) + p.mu) * Rational::from_integer(tsize);
    let high: BitSet = BitSet::from_iter(
        n,
        uncovered
            .iter()
            .filter(|&v| Rational::from_integer(g.degree_into_bits(v, &covered) as i64) > threshold),
    );
    let mut sizes = PoolSizes { uncovered: uncovered.count(), high_degree: high.count(), ..Default::default() };
    let pools: Vec<&BitSet> = if high.count() == uncovered.count() { vec![&uncovered] } else { vec![&high, &uncovered] };
    for pool in pools {
        sizes.pool = pool.count();
        if let Some(out) = try_pool(g, t, pool, &mut sizes) {
            return Ok(out);
        }
    }
    Ok(StepOutcome::NoProgress)
}

fn try_pool(g: &Graph, t: &Tiling, pool: &BitSet, sizes: &mut PoolSizes) -> Option<StepOutcome> {
    let r = t.r();
    let parts: Vec<(usize, &VertexSet)> = t.cliques().iter().enumerate().filter(|(_, c)| c.len() == r).collect();
    for &(idx, c) in &parts {
        let mut joint = pool.clone();
        for v in c.iter() {
            joint.intersect_with(g.neighbors(v));
        }
        if let Some(v) = joint.first() {
            let mut tiling = t.clone();
            let grown = VertexSet::from_iter_dedup(c.iter().chain([v])).expect("v is uncovered");
            tiling.parts_mut()[idx] = grown;
            return Some(StepOutcome::Extended { tiling, part: c.clone(), vertex: v });
        }
    }

    // classes[j] = pool vertices adjacent to every vertex of the part except
    // its j-th one.
    let mut ranked: Vec<(usize, usize, Vec<Vec<usize>>)> = parts
        .iter()
        .map(|&(idx, c)| {
            let mut classes = vec![Vec::new(); r];
            for v in pool.iter() {
                let misses: Vec<usize> = (0..r).filter(|&j| !g.has_edge(v, c.as_slice()[j])).collect();
                if let [j] = misses[..] {
                    classes[j].push(v);
                }
            }
            let incident = classes.iter().map(|cl| cl.len()).sum();
            (idx, incident, classes)
        })
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    for (idx, incident, classes) in ranked {
        if incident < 2 {
            break;
        }
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&a, &b| classes[b].len().cmp(&classes[a].len()).then(a.cmp(&b)));
        for j in order {
            let cl = &classes[j];
            let edge = cl
                .iter()
                .enumerate()
                .find_map(|(i, &a)| cl[i + 1..].iter().find(|&&b| g.has_edge(a, b)).map(|&b| (a, b)));
            if let Some((a, b)) = edge {
                let c = &t.cliques()[idx];
                let w = c.as_slice()[j];
                let mut tiling = t.clone();
                let members = c.iter().filter(|&x| x != w).chain([a, b]);
                tiling.parts_mut()[idx] = VertexSet::from_iter_dedup(members).expect("a, b are uncovered");
                sizes.incident = incident;
                sizes.class = cl.len();
                let trace = AugmentTrace { chosen_clique: c.clone(), missing_index: j, swap_edge: (a, b), pool_sizes: *sizes };
                return Some(StepOutcome::Swapped { tiling, trace });
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// New `K_r` parts found among the uncovered vertices.
    Refill,
    Extension,
    Swap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    TargetReached,
    NoProgress,
}

/// Result of [`augment_to_target`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentRun {
    pub tiling: Tiling,
    /// Coverage after the start tiling and after every step.
    pub history: Vec<usize>,
    pub steps: Vec<StepKind>,
    pub traces: Vec<AugmentTrace>,
    pub stop: StopReason,
}

/// Greedy start, then augmentation steps (with greedy refills of the
/// uncovered part in between) until `target_cover · n` vertices are
/// covered or no move applies.
pub fn augment_to_target(g: &Graph, r: usize, p: &AugmentParams, target_cover: Rational) -> Result<AugmentRun> {
    augment_from(g, greedy_tiling(g, r), p, target_cover)
}

/// As [`augment_to_target`] from a given starting tiling.
pub fn augment_from(g: &Graph, start: Tiling, p: &AugmentParams, target_cover: Rational) -> Result<AugmentRun> {
    if start.r() != p.r {
        return input("start tiling and parameters disagree on r");
    }
    start.validate(g)?;
    let target = ceil_mul(&target_cover, g.n()).min(g.n());
    let mut run = AugmentRun {
        history: vec![start.covered()],
        tiling: start,
        steps: Vec::new(),
        traces: Vec::new(),
        stop: StopReason::NoProgress,
    };
    loop {
        let mut free = run.tiling.uncovered(g.n()).to_bits(g.n());
        if fill_greedy(g, &mut run.tiling, &mut free) > 0 {
            run.steps.push(StepKind::Refill);
            run.history.push(run.tiling.covered());
        }
        if run.tiling.covered() >= target {
            run.stop = StopReason::TargetReached;
            return Ok(run);
        }
        match augment_step(g, &run.tiling, p)? {
            StepOutcome::Extended { tiling, .. } => {
                run.tiling = tiling;
                run.steps.push(StepKind::Extension);
            }
            StepOutcome::Swapped { tiling, trace } => {
                run.tiling = tiling;
                run.steps.push(StepKind::Swap);
                run.traces.push(trace);
            }
            StepOutcome::NoProgress => return Ok(run),
        }
        run.history.push(run.tiling.covered());
    }
}
