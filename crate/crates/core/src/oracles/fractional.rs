use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use super::cliques::enumerate_kr_guarded;
use super::Guards;
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lp;
use crate::rational::{format_big, parse_big, BigRational};

/// Exact rational weights on `K_r` copies with every vertex load at most 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalTiling {
    r: usize,
    support: Vec<VertexSet>,
    weights: Vec<BigRational>,
}

impl FractionalTiling {
    pub fn zero(r: usize) -> Self {
        FractionalTiling {
            r,
            support: Vec::new(),
            weights: Vec::new(),
        }
    }

    /// Builds from `(clique, weight)` pairs, merging repeated cliques and
    /// dropping zero weights. The support ends up sorted.
    pub fn from_weighted(r: usize, entries: impl IntoIterator<Item = (VertexSet, BigRational)>) -> Self {
        let mut map = std::collections::BTreeMap::<VertexSet, BigRational>::new();
        for (c, w) in entries {
            *map.entry(c).or_insert_with(BigRational::zero) += w;
        }
        let (support, weights) = map.into_iter().filter(|(_, w)| !w.is_zero()).unzip();
        FractionalTiling { r, support, weights }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn support(&self) -> &[VertexSet] {
        &self.support
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &BigRational)> {
        self.support.iter().zip(&self.weights)
    }

    /// `w(v)` for every vertex of an `n`-vertex graph.
    pub fn vertex_weights(&self, n: usize) -> Vec<BigRational> {
        let mut load = vec![BigRational::zero(); n];
        for (c, w) in self.iter() {
            for v in c.iter() {
                load[v] += w;
            }
        }
        load
    }

    /// `Σ_v w(v) = r · Σ_K w(K)`.
    pub fn total_weight(&self) -> BigRational {
        let s: BigRational = self.weights.iter().sum();
        s * BigRational::from_integer(self.r.into())
    }

    /// Vertices whose load is strictly below `threshold`.
    pub fn count_below(&self, n: usize, threshold: &BigRational) -> usize {
        self.vertex_weights(n).iter().filter(|w| *w < threshold).count()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let one = BigRational::one();
        for (c, w) in self.iter() {
            if c.len() != self.r || !g.is_clique(c.as_slice()) {
                return input(format!("support set {c:?} is not a {}-clique", self.r));
            }
            if w.is_negative() || *w > one {
                return input(format!("weight {} outside [0, 1]", format_big(w)));
            }
        }
        for (v, load) in self.vertex_weights(g.n()).iter().enumerate() {
            if *load > one {
                return input(format!("vertex {v} has load {} > 1", format_big(load)));
            }
        }
        Ok(())
    }

    /// `fractional-tiling r=<r>` header, then `v1 ... vr : p/q` per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("fractional-tiling r={}\n", self.r);
        for (c, w) in self.iter() {
            let _ = writeln!(s, "{c} : {}", format_big(w));
        }
        s
    }

    pub fn parse(text: &str) -> Result<FractionalTiling> {
        let mut r = None;
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let perr = |msg: &str| Error::Parse { line, msg: msg.into() };
            if r.is_none() {
                let val = content
                    .strip_prefix("fractional-tiling r=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .ok_or_else(|| perr("expected header 'fractional-tiling r=<r>'"))?;
                r = Some(val);
                continue;
            }
            let (verts, weight) = content.split_once(':').ok_or_else(|| perr("expected 'vertices : p/q'"))?;
            let verts: std::result::Result<Vec<usize>, _> = verts.split_whitespace().map(str::parse).collect();
            let verts = verts.map_err(|_| perr("invalid vertex index"))?;
            let set = VertexSet::from_iter_dedup(verts).map_err(|e| perr(&e.to_string()))?;
            let w = parse_big(weight).ok_or_else(|| perr("invalid weight"))?;
            entries.push((set, w));
        }
        let r = r.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        Ok(FractionalTiling::from_weighted(r, entries))
    }
}

/// Maximum-weight fractional `K_r`-tiling, solved exactly.
///
/// LP: maximise `Σ_K w(K)` subject to `Σ_{K ∋ v} w(K) <= 1` for all `v` and
/// `w >= 0`; the total weight is `r` times the optimum.
pub fn max_fractional_tiling(g: &Graph, r: usize, guards: &Guards) -> Result<FractionalTiling> {
    if r == 0 {
        return input("clique size must be positive");
    }
    let cliques = enumerate_kr_guarded(g, r, guards.max_cliques)?;
    if cliques.is_empty() {
        return Ok(FractionalTiling::zero(r));
    }
    let one = BigRational::one();
    let zero = BigRational::zero();
    let mut a = vec![vec![zero.clone(); cliques.len()]; g.n()];
    for (j, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            a[v][j] = one.clone();
        }
    }
    let c = vec![one.clone(); cliques.len()];
    let b = vec![one; g.n()];
    let pivot_cap = usize::try_from(guards.max_nodes).unwrap_or(usize::MAX);
    let sol = lp::maximize(&c, &a, &b, pivot_cap)?;
    Ok(FractionalTiling::from_weighted(r, cliques.into_iter().zip(sol.primal)))
}
