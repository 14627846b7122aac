use num_traits::Signed;
use rand::seq::index::sample;
use rand::Rng;

use crate::constructions::Seed;
use crate::error::{input, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{ceil_mul, Rational};

/// Largest side the exhaustive check accepts.
pub const EXHAUSTIVE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityMode {
    /// Every admissible `X`; for each `X` only the extreme `Y` of every size
    /// need checking, since `deg(X, Y)` is a sum of per-vertex degrees.
    Exhaustive,
    Sampled { trials: usize, seed: Seed },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularityVerdict {
    Regular,
    /// Subsets whose density differs from the pair density by more than `ε`.
    Irregular { x: VertexSet, y: VertexSet, density: Rational },
    /// Sampling found no witness. This is not a proof of regularity.
    NotRefuted { trials: usize },
}

impl RegularityVerdict {
    pub fn is_irregular(&self) -> bool {
        matches!(self, RegularityVerdict::Irregular { .. })
    }
}

/// Checks `|d(X, Y) − d(x, y)| ≤ ε` over subsets with `|X| ≥ ε|x|` and
/// `|Y| ≥ ε|y|`.
pub fn check_regular_pair(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    eps: Rational,
    mode: RegularityMode,
) -> Result<RegularityVerdict> {
    let base = g.pair_density(x, y)?.value();
    if eps <= Rational::from_integer(0) {
        return input("eps must be positive");
    }
    let min_x = ceil_mul(&eps, x.len()).max(1);
    let min_y = ceil_mul(&eps, y.len()).max(1);
    let deviates = |edges: usize, sx: usize, sy: usize| {
        let d = Rational::new(edges as i64, (sx * sy) as i64);
        (d - base).abs() > eps
    };
    // Degrees of the y-vertices into the chosen X, sorted descending, give
    // the densest and sparsest Y of every size.
    let extremes = |xs: &[usize]| -> Option<VertexSet> {
        let mut deg: Vec<(usize, usize)> = y
            .iter()
            .map(|w| (xs.iter().filter(|&&u| g.has_edge(u, w)).count(), w))
            .collect();
        deg.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let total: usize = deg.iter().map(|d| d.0).sum();
        let mut top = 0;
        for s in 1..=deg.len() {
            top += deg[s - 1].0;
            let bottom = total - deg[..deg.len() - s].iter().map(|d| d.0).sum::<usize>();
            if s < min_y {
                continue;
            }
            if deviates(top, xs.len(), s) {
                return Some(VertexSet::from_iter_dedup(deg[..s].iter().map(|d| d.1)).unwrap());
            }
            if deviates(bottom, xs.len(), s) {
                return Some(VertexSet::from_iter_dedup(deg[deg.len() - s..].iter().map(|d| d.1)).unwrap());
            }
        }
        None
    };
    let witness = |xs: Vec<usize>, ys: VertexSet| {
        let e = g.cross_edges(&xs, &ys.to_bits(g.n()));
        let density = Rational::new(e as i64, (xs.len() * ys.len()) as i64);
        RegularityVerdict::Irregular { x: VertexSet::from_sorted(xs), y: ys, density }
    };
    match mode {
        RegularityMode::Exhaustive => {
            if x.len() > EXHAUSTIVE_CAP || y.len() > EXHAUSTIVE_CAP {
                return Err(Error::Resource(format!(
                    "exhaustive regularity check is limited to sides of size {EXHAUSTIVE_CAP}"
                )));
            }
            let xv = x.as_slice();
            for mask in 1u32..(1 << xv.len()) {
                if (mask.count_ones() as usize) < min_x {
                    continue;
                }
                let xs: Vec<usize> = (0..xv.len()).filter(|&b| mask >> b & 1 == 1).map(|b| xv[b]).collect();
                if let Some(ys) = extremes(&xs) {
                    return Ok(witness(xs, ys));
                }
            }
            Ok(RegularityVerdict::Regular)
        }
        RegularityMode::Sampled { trials, seed } => {
            let mut rng = seed.rng();
            for _ in 0..trials {
                let sx = rng.random_range(min_x..=x.len());
                let mut xs: Vec<usize> = sample(&mut rng, x.len(), sx).into_iter().map(|i| x.as_slice()[i]).collect();
                xs.sort_unstable();
                if let Some(ys) = extremes(&xs) {
                    return Ok(witness(xs, ys));
                }
                let sy = rng.random_range(min_y..=y.len());
                let ys = VertexSet::from_iter_dedup(sample(&mut rng, y.len(), sy).into_iter().map(|i| y.as_slice()[i]))?;
                if deviates(g.cross_edges(&xs, &ys.to_bits(g.n())), sx, sy) {
                    return Ok(witness(xs, ys));
                }
            }
            Ok(RegularityVerdict::NotRefuted { trials })
        }
    }
}
