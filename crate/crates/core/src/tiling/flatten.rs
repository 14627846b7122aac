use num_traits::Zero;

use crate::constructions::{blow_up, BlowUp};
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles::{FractionalTiling, Tiling};
use crate::rational::BigRational;

/// Blows `g` up by `r` and turns every part of `t` into pure `K_r`'s of the
/// blow-up covering all `r` copies of the part's vertices.
///
/// A `K_r` part `c_0 … c_{r−1}` gives the transversals `{c_j·r + i}`. A
/// `K_{r+1}` part gives `r + 1` cliques: clique `b` skips `c_b` and uses copy
/// `(b − i − 1) mod (r + 1)` of `c_i`, which never equals `r` for `i ≠ b`.
pub fn flatten_in_blowup(g: &Graph, t: &Tiling, r: usize) -> Result<(BlowUp, Tiling)> {
    if t.r() != r {
        return input(format!("tiling has r = {} but flattening asked for r = {r}", t.r()));
    }
    if r == 0 {
        return input("cannot flatten with r = 0");
    }
    t.validate(g)?;
    let b = blow_up(g, r)?;
    let mut parts = Vec::with_capacity(t.covered());
    for c in t.cliques() {
        let c = c.as_slice();
        if c.len() == r {
            for i in 0..r {
                parts.push(VertexSet::from_sorted(c.iter().map(|&v| b.vertex(v, i)).collect()));
            }
        } else {
            let m = r + 1;
            for skip in 0..m {
                let members = (0..m).filter(|&i| i != skip).map(|i| b.vertex(c[i], (skip + m - i - 1) % m));
                parts.push(VertexSet::from_sorted(members.collect()));
            }
        }
    }
    let flat = Tiling::from_parts(r, parts);
    debug_assert!(flat.validate(&b.graph).is_ok());
    Ok((b, flat))
}

/// Pushes a pure `K_r`-tiling of an `s`-fold blow-up down to `base`, giving
/// every image clique weight `1/s` per preimage.
///
/// `cluster_map[x]` is the base vertex under blown-up vertex `x`. A clique
/// whose image has repeated vertices raises [`Error::Invariant`]: fibres of a
/// blow-up are independent, so this can only come from a wrong map.
pub fn tiling_to_fractional(base: &Graph, blown: &Tiling, s: usize, cluster_map: &[usize]) -> Result<FractionalTiling> {
    if s == 0 {
        return input("blow-up factor must be at least 1");
    }
    if !blown.is_pure() {
        return input("only pure K_r-tilings push down to fractional K_r-tilings");
    }
    let w = BigRational::new(1.into(), s.into());
    let mut entries = Vec::with_capacity(blown.len());
    for c in blown.cliques() {
        let image = image_of(c, cluster_map, base.n())?;
        entries.push((image, w.clone()));
    }
    let f = FractionalTiling::from_weighted(blown.r(), entries);
    f.validate(base).map_err(|e| Error::Invariant(format!("pushed-down weights are not a fractional tiling: {e}")))?;
    Ok(f)
}

/// What flattening a mixed tiling and pushing it down would give, computed
/// without building the blow-up: a `K_r` part weighs `1/s`, and each `r`-subset
/// of a `K_{r+1}` part weighs `1/(s·r)`.
pub(crate) fn mixed_to_fractional(base: &Graph, t: &Tiling, s: usize, cluster_map: &[usize]) -> Result<FractionalTiling> {
    let r = t.r();
    let whole = BigRational::new(1.into(), s.into());
    let share = BigRational::new(1.into(), (s * r).into());
    let mut entries = Vec::new();
    for c in t.cliques() {
        let image = image_of(c, cluster_map, base.n())?;
        if c.len() == r {
            entries.push((image, whole.clone()));
        } else {
            for &skip in image.as_slice() {
                entries.push((VertexSet::from_sorted(image.iter().filter(|&v| v != skip).collect()), share.clone()));
            }
        }
    }
    let f = FractionalTiling::from_weighted(r, entries);
    f.validate(base).map_err(|e| Error::Invariant(format!("pushed-down weights are not a fractional tiling: {e}")))?;
    Ok(f)
}

fn image_of(c: &VertexSet, cluster_map: &[usize], n: usize) -> Result<VertexSet> {
    let mut image = Vec::with_capacity(c.len());
    for x in c.iter() {
        let v = *cluster_map
            .get(x)
            .ok_or_else(|| Error::Invariant(format!("blown-up vertex {x} has no cluster")))?;
        if v >= n {
            return Err(Error::Invariant(format!("cluster {v} outside the base graph")));
        }
        image.push(v);
    }
    image.sort_unstable();
    if image.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invariant(format!("clique {c} meets a fibre twice")));
    }
    Ok(VertexSet::from_sorted(image))
}

/// `Σ_v w(v)` as the exact covered share of a blow-up.
pub(crate) fn weight_of(covered: usize, s: usize) -> BigRational {
    if covered == 0 {
        return BigRational::zero();
    }
    BigRational::new(covered.into(), s.into())
}
