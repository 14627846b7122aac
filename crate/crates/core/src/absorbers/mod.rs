//! `(S, t)`-absorbers, `ξ`-absorbing sets and the absorb-then-tile pipeline.

mod build;
mod check;
mod pipeline;
mod set;

pub use build::{build_s_absorber, diamond_witnesses, AbsorberRoute, SAbsorber};
pub use check::{admissible_count, is_s_t_absorber, is_xi_absorbing, XI_GUARD};
pub use pipeline::{full_pipeline, PipelineReport, Stage, StageReport};
pub use set::{build_absorbing_set, AbsorbingSet, Certificate};

use crate::error::{input, Result};
use crate::rational::Rational;
use num_traits::{One, Zero};

/// Absorber sizes: bodies have `r·t` vertices, the absorbing set may use up
/// to `φ·n` vertices and must absorb every admissible set of at most `ξ·n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbsorberParams {
    pub r: usize,
    pub t: usize,
    pub phi: Rational,
    pub xi: Rational,
}

impl AbsorberParams {
    /// `φ = 0` is accepted and gives an empty absorbing set.
    pub fn new(r: usize, t: usize, phi: Rational, xi: Rational) -> Result<Self> {
        if r < 2 {
            return input("absorbers need r >= 2");
        }
        if t == 0 {
            return input("t must be at least 1");
        }
        if phi < Rational::zero() || phi >= Rational::one() {
            return input("phi must lie in [0, 1)");
        }
        if xi <= Rational::zero() || xi >= Rational::one() {
            return input("xi must lie in (0, 1)");
        }
        Ok(AbsorberParams { r, t, phi, xi })
    }

    /// `t = 6r + 1` and `φ = μ / (14 r²)`.
    pub fn with_defaults(r: usize, mu: Rational, xi: Rational) -> Result<Self> {
        let phi = mu / Rational::from_integer(14 * (r * r) as i64);
        AbsorberParams::new(r, 6 * r + 1, phi, xi)
    }

    pub fn body_size(&self) -> usize {
        self.r * self.t
    }
}
