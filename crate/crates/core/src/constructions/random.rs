use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{input, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::rational::Rational;

/// Reproducibility seed. Equal seeds and parameters give equal graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Child seed for a cell of a parameter grid. Depends only on the parent
    /// seed and the coordinates, so parallel and serial runs agree.
    pub fn derive(self, coords: &[u64]) -> Seed {
        let mut h = splitmix(self.0);
        for &c in coords {
            h = splitmix(h ^ splitmix(c.wrapping_add(0x632b_e59b_d9b4_e019)));
        }
        Seed(h)
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Erdős–Rényi `G(n, p)` with an exact rational edge probability.
pub fn gnp(n: usize, p: Rational, seed: Seed) -> Result<Graph> {
    if p < Rational::from_integer(0) || p > Rational::from_integer(1) {
        return input("edge probability must lie in [0, 1]");
    }
    let (num, den) = (*p.numer() as u64, *p.denom() as u64);
    let mut rng = seed.rng();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..den) < num {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Random greedy triangle-free process on `m` vertices.
///
/// Pairs are visited in a uniformly random order and added whenever they
/// close no triangle. Forbidden pairs stay forbidden, so this is the usual
/// process run to saturation: the output is maximal triangle-free.
pub fn triangle_free_process(m: usize, seed: Seed) -> Result<Graph> {
    if m < 3 {
        return input("triangle-free process needs m >= 3");
    }
    let mut pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut seed.rng());
    let mut b = GraphBuilder::new(m);
    for (u, v) in pairs {
        if b.neighbors(u).is_disjoint(b.neighbors(v)) {
            b.add_edge(u, v)?;
        }
    }
    Ok(b.build())
}
