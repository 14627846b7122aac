use std::fmt::Write as _;

use cliquefactor::graph::io::{format_graph, GraphFormat};
use cliquefactor::oracles::{has_kr_factor, independence_number, max_clique, max_fractional_tiling, max_kr_tiling};
use cliquefactor::rational::format_big;
use cliquefactor::FactorDecision;

use super::choice;
use crate::{CliResult, Ctx, GenArgs, GraphR, SolveArgs};

pub fn gen(ctx: &mut Ctx, a: GenArgs) -> CliResult<()> {
    ctx.command = "gen";
    let format: String = ctx.settings.get("format", a.format, "edgelist".into())?;
    choice(&format, "format", &["edgelist", "dimacs"])?;
    let g = ctx.graph(a.graph)?;
    let f = if format == "dimacs" { GraphFormat::Dimacs } else { GraphFormat::EdgeList };
    ctx.emit(&format_graph(&g, f))
}

pub fn solve(ctx: &mut Ctx, a: SolveArgs) -> CliResult<()> {
    ctx.command = "solve";
    let what: String = ctx.settings.get("what", a.what, "all".into())?;
    choice(&what, "what", &["alpha", "clique", "tiling", "factor", "fractional", "all"])?;
    let r: usize = ctx.settings.get("r", a.base.r, 3)?;
    let g = ctx.graph(a.base.graph)?;
    let wants = |w: &str| what == "all" || what == w;
    let mut body = format!("n {}\nedges {}\nmin_degree {}\n", g.n(), g.edge_count(), g.min_degree().unwrap_or(0));
    if wants("alpha") {
        writeln!(body, "alpha {}", independence_number(&g, &ctx.guards)?).ok();
    }
    if wants("clique") {
        let c = max_clique(&g, ctx.guards.max_nodes)?;
        let members: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        writeln!(body, "omega {}\nclique {}", c.len(), members.join(" ")).ok();
    }
    if wants("tiling") {
        let t = max_kr_tiling(&g, r, &ctx.guards)?;
        writeln!(body, "max_tiling_parts {}\nmax_tiling_covered {}", t.len(), t.covered()).ok();
    }
    if wants("fractional") {
        let f = max_fractional_tiling(&g, r, &ctx.guards)?;
        writeln!(body, "fractional_weight {}", format_big(&f.total_weight())).ok();
    }
    if wants("factor") {
        let verdict = match has_kr_factor(&g, r, &ctx.guards)? {
            FactorDecision::Factor(t) => {
                writeln!(body, "factor yes").ok();
                t.canonical().to_text()
            }
            FactorDecision::NoFactor => "factor no\n".into(),
            FactorDecision::Indivisible { .. } => "factor indivisible\n".into(),
        };
        body.push_str(&verdict);
    }
    ctx.emit(&body)
}

pub fn frac(ctx: &mut Ctx, a: GraphR) -> CliResult<()> {
    ctx.command = "frac";
    let r: usize = ctx.settings.get("r", a.r, 3)?;
    let g = ctx.graph(a.graph)?;
    let f = max_fractional_tiling(&g, r, &ctx.guards)?;
    let mut body = f.to_text();
    writeln!(body, "# total weight: {}", format_big(&f.total_weight())).ok();
    ctx.emit(&body)
}
