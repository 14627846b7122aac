use super::set::{build_absorbing_set, AbsorbingSet, Certificate};
use super::AbsorberParams;
use crate::constructions::Seed;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{has_kr_factor, max_kr_tiling, FactorDecision, Guards, Tiling};
use crate::rational::{floor_mul, Rational};
use crate::tiling::{augment_to_target, greedy_tiling, AugmentParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Absorb,
    Tile,
    Absorption,
    Validate,
}

impl Stage {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stage::Absorb => "absorb",
            Stage::Tile => "tile",
            Stage::Absorption => "absorption",
            Stage::Validate => "validate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageReport {
    pub stage: Stage,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    /// Validated against the input graph; spanning iff `perfect`.
    pub tiling: Tiling,
    pub perfect: bool,
    pub absorbing: AbsorbingSet,
    pub stages: Vec<StageReport>,
}

impl PipelineReport {
    pub fn failed_stage(&self) -> Option<Stage> {
        self.stages.iter().find(|s| !s.ok).map(|s| s.stage)
    }
}

/// Absorbing set `A`, a `K_r`-tiling of `G − A` aiming at `(1 − ξ)` coverage,
/// then a factor of `G[A ∪ leftover]` by the exact oracle. Every stage
/// degrades to a best-effort answer; `perfect` is set only after the merged
/// tiling validates on `g` and spans it.
pub fn full_pipeline(g: &Graph, p: &AbsorberParams, ap: &AugmentParams, seed: Seed, guards: &Guards) -> Result<PipelineReport> {
    let n = g.n();
    let r = p.r;
    let mut stages = Vec::new();
    let mut note = |stage, ok, detail: String| stages.push(StageReport { stage, ok, detail });

    let absorbing = match build_absorbing_set(g, p, seed, guards) {
        Ok(a) => a,
        Err(Error::Resource(_)) => AbsorbingSet {
            set: VertexSet::default(),
            absorbers: Vec::new(),
            certificate: Certificate::Uncertified,
            budget_reached: false,
            budget: floor_mul(&p.phi, n),
        },
        Err(e) => return Err(e),
    };
    note(
        Stage::Absorb,
        absorbing.certificate != Certificate::Refuted,
        format!("|A| = {}, {} absorbers, {}", absorbing.set.len(), absorbing.absorbers.len(), absorbing.certificate.as_str()),
    );

    let abits = absorbing.set.to_bits(n);
    let rest: Vec<usize> = (0..n).filter(|&v| !abits.contains(v)).collect();
    let h = g.induced(&rest);
    let (local, how) = tile_rest(&h, r, ap, guards)?;
    let mut parts: Vec<VertexSet> = local.cliques().iter().map(|c| lift(c, &rest)).collect();
    let target = floor_mul(&(Rational::from_integer(1) - p.xi), rest.len());
    note(Stage::Tile, local.covered() >= target, format!("{how} tiling covers {} of {}", local.covered(), rest.len()));

    let covered = Tiling::from_parts(r, parts.clone()).covered_bits(n);
    let left: Vec<usize> = (0..n).filter(|&v| !covered.contains(v)).collect();
    let hl = g.induced(&left);
    match has_kr_factor(&hl, r, guards) {
        Ok(FactorDecision::Factor(w)) => {
            parts.extend(w.cliques().iter().map(|c| lift(c, &left)));
            note(Stage::Absorption, true, format!("factor of the {} remaining vertices", left.len()));
        }
        Ok(decision) => {
            let best = greedy_tiling(&hl, r);
            parts.extend(best.cliques().iter().map(|c| lift(c, &left)));
            let why = if matches!(decision, FactorDecision::Indivisible { .. }) { "r does not divide" } else { "no factor of" };
            note(Stage::Absorption, false, format!("{why} the {} remaining vertices", left.len()));
        }
        Err(Error::Resource(msg)) => {
            let best = greedy_tiling(&hl, r);
            parts.extend(best.cliques().iter().map(|c| lift(c, &left)));
            note(Stage::Absorption, false, msg);
        }
        Err(e) => return Err(e),
    }

    let tiling = Tiling::new(g, r, parts).map_err(|e| Error::Invariant(format!("merged tiling is invalid: {e}")))?;
    let perfect = tiling.is_pure() && tiling.covered() == n;
    note(Stage::Validate, perfect, format!("{} of {n} vertices covered", tiling.covered()));
    Ok(PipelineReport { tiling, perfect, absorbing, stages })
}

/// Exact maximum `K_r`-tiling, or augmentation with every `K_{r+1}` part
/// cut back to a `K_r` when the oracle is over its guards.
fn tile_rest(h: &Graph, r: usize, ap: &AugmentParams, guards: &Guards) -> Result<(Tiling, &'static str)> {
    match max_kr_tiling(h, r, guards) {
        Ok(t) => Ok((t, "exact")),
        Err(Error::Resource(_)) if ap.r == r => {
            let run = augment_to_target(h, r, ap, Rational::from_integer(1))?;
            let parts = run.tiling.into_cliques().into_iter().map(|c| VertexSet::from_sorted(c.as_slice()[..r].to_vec()));
            Ok((Tiling::from_parts(r, parts.collect()), "augmented"))
        }
        Err(Error::Resource(_)) => Ok((greedy_tiling(h, r), "greedy")),
        Err(e) => Err(e),
    }
}

fn lift(c: &VertexSet, map: &[usize]) -> VertexSet {
    VertexSet::from_iter_dedup(c.iter().map(|v| map[v])).expect("induced labels are distinct")
}
