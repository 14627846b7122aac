use num_traits::Zero;

use super::augment::{augment_from, AugmentParams};
use super::flatten::{flatten_in_blowup, mixed_to_fractional, tiling_to_fractional, weight_of};
use super::greedy::greedy_tiling;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{max_kr_tiling, FractionalTiling, Guards, Tiling};
use crate::rational::{BigRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FracmatOptions {
    /// Upper bound on blow-up rounds; each round multiplies the size by `r`.
    pub max_rounds: usize,
    /// A blow-up that would exceed this many vertices is not built.
    pub max_vertices: usize,
    /// Guards for the exact start tiling; a greedy start is used on overrun.
    pub guards: Guards,
}

impl Default for FracmatOptions {
    fn default() -> Self {
        FracmatOptions { max_rounds: 3, max_vertices: 5000, guards: Guards::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FracmatStop {
    /// Weight reached `(1 − η²)·n`.
    TargetReached,
    /// An enlargement round gained nothing.
    NoGain,
    /// `min(max_rounds, ⌈1/ρ⌉)` rounds were done.
    RoundCap,
    /// The next blow-up was over `max_vertices`.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracmatReport {
    pub fractional: FractionalTiling,
    pub rounds: usize,
    pub truncated: bool,
    pub stop: FracmatStop,
    /// Total weight pushed down to `g` at the start and after every round.
    pub history: Vec<BigRational>,
    /// `ρ` measured in every round: gained vertices over current size.
    pub measured_rho: Vec<Rational>,
    /// Order of the last graph worked on.
    pub final_order: usize,
    pub exact_start: bool,
}

/// Alternates enlargement and blow-up, then pushes the final tiling down to
/// a fractional `K_r`-tiling of `g` through the composed cluster maps.
///
/// Each round augments the current tiling of the current blow-up to a
/// `{K_r, K_{r+1}}`-tiling and flattens it into a pure `K_r`-tiling of the
/// `r`-fold blow-up. The number of rounds is capped by `⌈1/ρ⌉`, with `ρ`
/// taken from `p` or else the gain of the latest round.
pub fn fracmat_iterate(g: &Graph, r: usize, p: &AugmentParams, opts: &FracmatOptions) -> Result<FracmatReport> {
    if p.r != r {
        return Err(Error::Input(format!("parameters have r = {} but r = {r} was asked", p.r)));
    }
    let n = g.n();
    let (mut tiling, exact_start) = match max_kr_tiling(g, r, &opts.guards) {
        Ok(t) => (t, true),
        Err(Error::Resource(_)) => (greedy_tiling(g, r), false),
        Err(e) => return Err(e),
    };
    let mut host = g.clone();
    let mut map: Vec<usize> = (0..n).collect();
    let mut scale = 1usize;
    let target = (Rational::from_integer(1) - p.eta * p.eta) * Rational::from_integer(n as i64);
    let reached = |covered: usize, scale: usize| {
        Rational::new(covered as i64, 1) >= target * Rational::from_integer(scale as i64)
    };
    let mut report = FracmatReport {
        fractional: FractionalTiling::zero(r),
        rounds: 0,
        truncated: false,
        stop: FracmatStop::RoundCap,
        history: vec![weight_of(tiling.covered(), scale)],
        measured_rho: Vec::new(),
        final_order: n,
        exact_start,
    };
    let mut cap = opts.max_rounds.min(rho_cap(p.rho));
    let finish = |report: &mut FracmatReport, t: &Tiling, scale: usize, map: &[usize]| -> Result<()> {
        let f = if t.is_pure() { tiling_to_fractional(g, t, scale, map)? } else { mixed_to_fractional(g, t, scale, map)? };
        report.fractional = f;
        Ok(())
    };
    loop {
        if reached(tiling.covered(), scale) {
            report.stop = FracmatStop::TargetReached;
            break;
        }
        if report.rounds >= cap {
            report.stop = FracmatStop::RoundCap;
            break;
        }
        let run = augment_from(&host, tiling.clone(), p, Rational::from_integer(1))?;
        let gain = run.tiling.covered() - tiling.covered();
        if gain == 0 {
            report.stop = FracmatStop::NoGain;
            break;
        }
        let rho = Rational::new(gain as i64, host.n() as i64);
        report.measured_rho.push(rho);
        if p.rho.is_none() {
            cap = opts.max_rounds.min(rho_cap(Some(rho)));
        }
        if host.n().saturating_mul(r) > opts.max_vertices {
            // The would-be flattening, pushed down directly.
            report.truncated = true;
            report.stop = FracmatStop::Truncated;
            report.history.push(weight_of(run.tiling.covered() * r, scale * r));
            finish(&mut report, &run.tiling, scale, &map)?;
            report.final_order = host.n();
            return Ok(report);
        }
        let (blown, flat) = flatten_in_blowup(&host, &run.tiling, r)?;
        map = blown.cluster_of.iter().map(|&x| map[x]).collect();
        host = blown.graph;
        tiling = flat;
        scale *= r;
        report.rounds += 1;
        report.history.push(weight_of(tiling.covered(), scale));
    }
    finish(&mut report, &tiling, scale, &map)?;
    report.final_order = host.n();
    debug_assert_eq!(&report.fractional.total_weight(), report.history.last().unwrap_or(&BigRational::zero()));
    Ok(report)
}

fn rho_cap(rho: Option<Rational>) -> usize {
    match rho {
        Some(rho) if !rho.is_zero() => {
            let (num, den) = (*rho.numer(), *rho.denom());
            ((den + num - 1) / num).max(1) as usize
        }
        _ => usize::MAX,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hs_extremal;
    use crate::oracles::max_fractional_tiling;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn complete_graph_needs_no_rounds() {
        let p = AugmentParams::with_defaults(4).unwrap();
        let rep = fracmat_iterate(&Graph::complete(8), 4, &p, &FracmatOptions::default()).unwrap();
        assert_eq!(rep.rounds, 0);
        assert_eq!(rep.fractional.total_weight(), big(8));
        assert_eq!(rep.stop, FracmatStop::TargetReached);
    }

    #[test]
    fn never_beats_the_lp() {
        let g = hs_extremal(8, 4).unwrap();
        let p = AugmentParams::with_defaults(4).unwrap();
        let rep = fracmat_iterate(&g, 4, &p, &FracmatOptions::default()).unwrap();
        rep.fractional.validate(&g).unwrap();
        let lp = max_fractional_tiling(&g, 4, &Guards::default()).unwrap();
        assert!(rep.fractional.total_weight() <= lp.total_weight());
        assert!(rep.history.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn blow_up_rounds_gain_weight() {
        // K_4: an exact K_3 start covers 3, the K_4 part flattens perfectly.
        let p = AugmentParams::new(3, Rational::new(1, 100), Rational::new(1, 10), None, Rational::new(1, 10)).unwrap();
        let rep = fracmat_iterate(&Graph::complete(4), 3, &p, &FracmatOptions::default()).unwrap();
        assert_eq!(rep.rounds, 1);
        assert_eq!(rep.history, vec![big(3), big(4)]);
        assert_eq!(rep.fractional.total_weight(), big(4));
    }

    #[test]
    fn truncation_keeps_the_last_gain() {
        let p = AugmentParams::new(3, Rational::new(1, 100), Rational::new(1, 10), None, Rational::new(1, 10)).unwrap();
        let opts = FracmatOptions { max_vertices: 4, ..Default::default() };
        let rep = fracmat_iterate(&Graph::complete(4), 3, &p, &opts).unwrap();
        assert!(rep.truncated);
        assert_eq!(rep.rounds, 0);
        assert_eq!(rep.fractional.total_weight(), big(4));
    }

    #[test]
    fn rho_caps_rounds() {
        assert_eq!(rho_cap(Some(Rational::new(1, 3))), 3);
        assert_eq!(rho_cap(Some(Rational::new(2, 7))), 4);
        assert_eq!(rho_cap(None), usize::MAX);
    }
}
