use std::fmt::Write as _;

use cliquefactor::reduced::{
    build_reduced, check_regular_pair, find_diamond_path, reduced_min_degree, DiamondSearch, RegularityMode, RegularityParams,
    RegularityVerdict, UpsilonTable,
};
use cliquefactor::rational::ratio;
use cliquefactor::{BitSet, Partition, ReducedMultigraph};

use super::choice;
use crate::error::CliError;
use crate::settings::Ratio;
use crate::{CliResult, Ctx, DiamondArgs, ReduceArgs, ReducedSourceArgs, UpsilonArgs};

fn read(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn build(ctx: &mut Ctx, a: ReducedSourceArgs) -> CliResult<(cliquefactor::Graph, ReducedMultigraph)> {
    let eps = ctx.settings.get("eps", a.eps, Ratio(ratio(1, 10)))?.0;
    let beta = ctx.settings.get("beta", a.beta, Ratio(ratio(1, 5)))?.0;
    let partition = ctx.settings.opt("partition", a.partition.map(|p| p.display().to_string()))?;
    let k = if partition.is_none() { Some(ctx.settings.get("k", a.k, 4usize)?) } else { None };
    let g = ctx.graph(a.graph)?;
    let p = match (partition, k) {
        (Some(path), _) => Partition::parse(&read(path.as_ref())?)?,
        (None, Some(k)) => Partition::random_equipartition(g.n(), k, ctx.seed)?,
        (None, None) => unreachable!("k is resolved when no partition file is given"),
    };
    let rm = build_reduced(&g, &p, &RegularityParams::new(eps, beta)?)?;
    Ok((g, rm))
}

pub fn reduce(ctx: &mut Ctx, a: ReduceArgs) -> CliResult<()> {
    ctx.command = "reduce";
    let mode: String = ctx.settings.get("regularity", a.regularity, "none".into())?;
    choice(&mode, "regularity", &["none", "exhaustive", "sampled"])?;
    let trials = if mode == "sampled" { ctx.settings.get("trials", a.trials, 200usize)? } else { 0 };
    let densities = ctx.settings.opt("densities", a.densities.map(|p| p.display().to_string()))?;
    let (g, rm) = build(ctx, a.source)?;
    let mut body = rm.to_text();
    writeln!(body, "# min degree: {}", reduced_min_degree(&rm)).ok();
    if mode != "none" {
        let src = rm.source().expect("built from a partition");
        let (mut irregular, mut unrefuted) = (0, 0);
        for i in 0..rm.k() {
            for j in i + 1..rm.k() {
                let m = if mode == "exhaustive" {
                    RegularityMode::Exhaustive
                } else {
                    RegularityMode::Sampled { trials, seed: ctx.seed.derive(&[i as u64, j as u64]) }
                };
                match check_regular_pair(&g, src.partition.cluster(i), src.partition.cluster(j), src.params.eps, m)? {
                    RegularityVerdict::Irregular { .. } => irregular += 1,
                    RegularityVerdict::NotRefuted { .. } => unrefuted += 1,
                    RegularityVerdict::Regular => {}
                }
            }
        }
        writeln!(body, "# irregular pairs: {irregular}").ok();
        if mode == "sampled" {
            writeln!(body, "# pairs not refuted by sampling: {unrefuted}").ok();
        }
    }
    if let Some(path) = densities {
        let csv = rm.densities_csv().unwrap_or_default();
        ctx.emit_to(path.as_ref(), &csv)?;
    }
    ctx.emit(&body)
}

fn members(b: &BitSet) -> String {
    b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn upsilon(ctx: &mut Ctx, a: UpsilonArgs) -> CliResult<()> {
    ctx.command = "upsilon";
    let r: usize = ctx.settings.get("r", a.r, 3)?;
    let reduced = ctx.settings.opt("reduced", a.reduced.map(|p| p.display().to_string()))?;
    let rm = match reduced {
        Some(path) => ReducedMultigraph::parse(&read(path.as_ref())?)?,
        None => build(ctx, a.source)?.1,
    };
    let table = UpsilonTable::new(&rm, r)?;
    let mut body = String::from("# cluster | upsilon | upsilon2\n");
    for v in 0..rm.k() {
        writeln!(body, "{v} | {} | {}", members(table.upsilon(v)), members(table.upsilon2(v))).ok();
    }
    ctx.emit(&body)
}

pub fn diamond(ctx: &mut Ctx, a: DiamondArgs) -> CliResult<()> {
    ctx.command = "diamond";
    let r: usize = ctx.settings.get("r", a.base.r, 3)?;
    let from: usize = ctx.settings.require("from", a.from)?;
    let to: usize = ctx.settings.require("to", a.to)?;
    let max_len: usize = ctx.settings.get("max-len", a.max_len, 7)?;
    let g = ctx.graph(a.base.graph)?;
    let mut opts = DiamondSearch::new(&g, r, max_len);
    opts.max_nodes = ctx.guards.max_nodes;
    let body = match find_diamond_path(&g, from, to, &opts)? {
        Some(path) => {
            path.validate(&g, opts.gem)?;
            let spine: Vec<String> = path.spine.iter().map(|v| v.to_string()).collect();
            let mut s = format!("length {}\nspine {}\n", path.len(), spine.join(" "));
            for gem in &path.gems {
                writeln!(s, "gem {gem}").ok();
            }
            s
        }
        None => format!("none within {max_len} spine vertices\n"),
    };
    ctx.emit(&body)
}
