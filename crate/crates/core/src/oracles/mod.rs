//! Exact, exponential-time ground-truth solvers for desk-scale graphs.

mod cliques;
mod fractional;
mod independence;
mod tiling;

pub use cliques::{enumerate_kr, enumerate_kr_guarded, first_clique_in, for_each_clique_in, max_clique};
pub use fractional::{max_fractional_tiling, FractionalTiling};
pub use independence::{alpha_ell, independence_number, maximum_independent_set};
pub use tiling::{has_kr_factor, max_cover_tiling, max_kr_tiling, FactorDecision, Tiling};

/// Scale guards shared by the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Longest clique list an oracle may materialise.
    pub max_cliques: usize,
    /// Branch-and-bound node budget.
    pub max_nodes: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_cliques: 200_000,
            max_nodes: 100_000_000,
        }
    }
}

/// Node counter that turns into a resource error once the budget is spent.
pub(crate) struct Budget {
    left: u64,
    what: &'static str,
}

impl Budget {
    pub(crate) fn new(nodes: u64, what: &'static str) -> Self {
        Budget { left: nodes, what }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> crate::Result<()> {
        if self.left == 0 {
            return Err(crate::Error::Resource(format!("{} exceeded its node budget", self.what)));
        }
        self.left -= 1;
        Ok(())
    }
}
