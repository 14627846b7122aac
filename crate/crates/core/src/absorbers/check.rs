use super::AbsorberParams;
use crate::error::{input, Error, Result};
use crate::graph::{BitSet, Graph, VertexSet};
use crate::oracles::{has_kr_factor, Guards};
use crate::rational::floor_mul;

/// Most sets `R` that [`is_xi_absorbing`] will try.
pub const XI_GUARD: u128 = 1_000_000;

/// Both `G[body]` and `G[body ∪ s]` have a `K_r`-factor and `|body| = r·t`.
pub fn is_s_t_absorber(g: &Graph, s: &VertexSet, body: &VertexSet, p: &AbsorberParams, guards: &Guards) -> Result<bool> {
    s.check_within(g.n())?;
    body.check_within(g.n())?;
    if s.len() != p.r {
        return input(format!("|S| = {} but r = {}", s.len(), p.r));
    }
    if !s.is_disjoint(body) {
        return input("S meets the absorber body");
    }
    if body.len() != p.body_size() {
        return Ok(false);
    }
    Ok(factors(g, body, p.r, guards)? && factors(g, &body.union(s), p.r, guards)?)
}

pub(crate) fn factors(g: &Graph, set: &VertexSet, r: usize, guards: &Guards) -> Result<bool> {
    Ok(has_kr_factor(&g.induced(set.as_slice()), r, guards)?.exists())
}

/// Number of sets `R ⊆ V(G) ∖ A` with `|R| ≤ ξn` and `r | |A| + |R|`.
pub fn admissible_count(g: &Graph, a: &VertexSet, p: &AbsorberParams) -> u128 {
    let rest = g.n() - a.len();
    let max = floor_mul(&p.xi, g.n()).min(rest);
    (0..=max).filter(|k| (a.len() + k) % p.r == 0).map(|k| binomial(rest, k)).fold(0, u128::saturating_add)
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k.min(n - k) {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    c
}

/// Exhaustive check that `G[A ∪ R]` has a `K_r`-factor for every admissible
/// `R`. Refuses with a resource error above [`XI_GUARD`] candidate sets.
pub fn is_xi_absorbing(g: &Graph, a: &VertexSet, p: &AbsorberParams, guards: &Guards) -> Result<bool> {
    a.check_within(g.n())?;
    let count = admissible_count(g, a, p);
    if count > XI_GUARD {
        return Err(Error::Resource(format!("{count} admissible sets exceed the guard of {XI_GUARD}")));
    }
    let abits = a.to_bits(g.n());
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !abits.contains(v)).collect();
    let max = floor_mul(&p.xi, g.n()).min(rest.len());
    for k in (0..=max).filter(|k| (a.len() + k) % p.r == 0) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut bits: BitSet = abits.clone();
            for &i in &idx {
                bits.insert(rest[i]);
            }
            if !factors(g, &VertexSet::from_bits(&bits), p.r, guards)? {
                return Ok(false);
            }
            if !next_combination(&mut idx, rest.len()) {
                break;
            }
        }
    }
    Ok(true)
}

/// Advances a sorted `k`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
