//! Two-part geometric graph on random points of a sphere.
//!
//! `m` random unit vectors in `R^{d+1}` are placed in both halves. Inside a
//! half, two points are joined when they are nearly antipodal; across the
//! halves, `x` and the copy `y'` are joined when `x` and `y` are close. Three
//! pairwise nearly antipodal points cannot exist, so each half is
//! triangle-free, and the cross threshold keeps the graph `K_4`-free.

use rand_distr::{Distribution, StandardNormal};

use super::random::Seed;
use crate::error::{input, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::rational::{ratio_to_f64, Rational};

/// Parameters of the construction. Thresholds are squared Euclidean
/// distances so that they stay rational.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereParams {
    /// Sphere dimension `d`; points live in `R^{d+1}`.
    pub dim: usize,
    pub points_per_side: usize,
    pub zeta: Rational,
    /// Same-half pairs are adjacent when `|x - y|² > inner_sq`.
    pub inner_sq: Rational,
    /// Cross pairs are adjacent when `|x - y|² < cross_sq`.
    pub cross_sq: Rational,
}

impl SphereParams {
    /// Default thresholds: `|x - y| > √(4 − ζ²)` inside a half and
    /// `|x - y| < √2 · (1 − ζ/4)` across.
    pub fn with_defaults(dim: usize, points_per_side: usize, zeta: Rational) -> Self {
        let four = Rational::from_integer(4);
        let two = Rational::from_integer(2);
        let shrink = Rational::from_integer(1) - zeta / four;
        SphereParams {
            dim,
            points_per_side,
            zeta,
            inner_sq: four - zeta * zeta,
            cross_sq: two * shrink * shrink,
        }
    }
}

/// A graph with a distinguished split `V_1 ∪ V_2`.
#[derive(Clone, Debug)]
pub struct SplitGraph {
    pub graph: Graph,
    pub first: VertexSet,
    pub second: VertexSet,
}

pub fn bollobas_erdos(p: &SphereParams, seed: Seed) -> Result<SplitGraph> {
    if p.dim < 4 {
        return input("sphere dimension must be at least 4");
    }
    if p.points_per_side < 10 {
        return input("need at least 10 points per side");
    }
    let two = Rational::from_integer(2);
    if p.inner_sq <= two || p.cross_sq >= two {
        return input("degenerate thresholds: need inner distance > √2 and cross distance < √2");
    }
    let m = p.points_per_side;
    let mut rng = seed.rng();
    let points: Vec<Vec<f64>> = (0..m)
        .map(|_| {
            let v: Vec<f64> = (0..=p.dim).map(|_| StandardNormal.sample(&mut rng)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.into_iter().map(|x| x / norm).collect()
        })
        .collect();
    let dist_sq = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>();
    let inner = ratio_to_f64(&p.inner_sq);
    let cross = ratio_to_f64(&p.cross_sq);

    let mut b = GraphBuilder::new(2 * m);
    for i in 0..m {
        for j in 0..m {
            let d = dist_sq(&points[i], &points[j]);
            if i < j && d > inner {
                b.add_edge(i, j)?;
                b.add_edge(m + i, m + j)?;
            }
            if d < cross {
                b.add_edge(i, m + j)?;
            }
        }
    }
    Ok(SplitGraph {
        graph: b.build(),
        first: VertexSet::range(0, m),
        second: VertexSet::range(m, 2 * m),
    })
}
