use rand::seq::IndexedRandom;

use super::build::{build_s_absorber, SAbsorber};
use super::check::{admissible_count, is_xi_absorbing, XI_GUARD};
use super::AbsorberParams;
use crate::constructions::Seed;
use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::Guards;
use crate::rational::floor_mul;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every admissible `R` was checked and absorbed.
    Certified,
    /// Some admissible `R` is not absorbed.
    Refuted,
    /// Too many admissible sets to check.
    Uncertified,
}

impl Certificate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certificate::Certified => "certified",
            Certificate::Refuted => "refuted",
            Certificate::Uncertified => "uncertified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorbingSet {
    pub set: VertexSet,
    pub absorbers: Vec<SAbsorber>,
    pub certificate: Certificate,
    /// `false` when sampling gave up before another body would overflow `φn`.
    pub budget_reached: bool,
    pub budget: usize,
}

/// Accumulates vertex-disjoint `(S, t)`-absorbers for random `r`-sets `S`
/// outside the current set until another body would exceed `φn` vertices,
/// then certifies the union exhaustively when that is within [`XI_GUARD`].
pub fn build_absorbing_set(g: &Graph, p: &AbsorberParams, seed: Seed, guards: &Guards) -> Result<AbsorbingSet> {
    let n = g.n();
    let budget = floor_mul(&p.phi, n);
    let body = p.body_size();
    let mut rng = seed.rng();
    let mut used = BitSet::new(n);
    let mut absorbers = Vec::new();
    let max_attempts = 4 * (budget / body + 1) + 8;
    let mut attempts = 0;
    while used.count() + body <= budget && attempts < max_attempts {
        attempts += 1;
        let free: Vec<usize> = (0..n).filter(|&v| !used.contains(v)).collect();
        if free.len() < p.r + body {
            break;
        }
        let s = VertexSet::from_iter_dedup(free.choose_multiple(&mut rng, p.r).copied())?;
        let forbidden = VertexSet::from_bits(&used);
        if let Some(a) = build_s_absorber(g, &s, p, &forbidden, guards)? {
            for v in a.body.iter() {
                used.insert(v);
            }
            absorbers.push(a);
        }
    }
    let set = VertexSet::from_bits(&used);
    let certificate = if admissible_count(g, &set, p) > XI_GUARD {
        Certificate::Uncertified
    } else {
        match is_xi_absorbing(g, &set, p, guards) {
            Ok(true) => Certificate::Certified,
            Ok(false) => Certificate::Refuted,
            Err(Error::Resource(_)) => Certificate::Uncertified,
            Err(e) => return Err(e),
        }
    };
    Ok(AbsorbingSet { budget_reached: used.count() + body > budget, set, absorbers, certificate, budget })
}
