use std::time::Instant;

use cliquefactor::oracles::max_kr_tiling;
use cliquefactor::rational::{ratio, BigRational};
use cliquefactor::tiling::{augment_to_target, fracmat_iterate, greedy_tiling, FracmatOptions};
use cliquefactor::AugmentParams;

use super::choice;
use crate::output::csv_table;
use crate::settings::Ratio;
use crate::{CliResult, Ctx, TileArgs};

pub const TILE_COLUMNS: [&str; 8] = ["n", "r", "mode", "covered", "weight_num", "weight_den", "rounds", "wall_ms"];

pub(crate) fn split(w: &BigRational) -> (String, String) {
    (w.numer().to_string(), w.denom().to_string())
}

pub fn tile(ctx: &mut Ctx, a: TileArgs) -> CliResult<()> {
    ctx.command = "tile";
    let r: usize = ctx.settings.get("r", a.base.r, 3)?;
    let mode: String = ctx.settings.get("mode", a.mode, "greedy".into())?;
    choice(&mode, "mode", &["greedy", "augment", "fracmat", "exact"])?;
    let tenth = Ratio(ratio(1, 10));
    let (eta, mu, target, cap) = if mode == "augment" || mode == "fracmat" {
        (
            ctx.settings.get("eta", a.eta, tenth)?.0,
            ctx.settings.get("mu", a.mu, tenth)?.0,
            ctx.settings.get("target", a.target, Ratio(ratio(1, 1)))?.0,
            ctx.settings.get("blowup-cap", a.blowup_cap, 3)?,
        )
    } else {
        (tenth.0, tenth.0, ratio(1, 1), 0)
    };
    let csv_path = ctx.settings.opt("csv", a.csv.map(|p| p.display().to_string()))?;
    let g = ctx.graph(a.base.graph)?;
    let start = Instant::now();
    let (mut body, covered, weight, rounds) = match mode.as_str() {
        "greedy" | "exact" => {
            let t = if mode == "greedy" { greedy_tiling(&g, r) } else { max_kr_tiling(&g, r, &ctx.guards)? };
            let w = split(&BigRational::from_integer(t.covered().into()));
            (t.clone().canonical().to_text(), t.covered(), Some(w), 0)
        }
        "augment" => {
            let p = AugmentParams::new(r, eta, mu, None, tenth.0)?;
            let run = augment_to_target(&g, r, &p, target)?;
            (run.tiling.clone().canonical().to_text(), run.tiling.covered(), None, run.steps.len())
        }
        _ => {
            let p = AugmentParams::new(r, eta, mu, None, tenth.0)?;
            let opts = FracmatOptions { max_rounds: cap, guards: ctx.guards, ..FracmatOptions::default() };
            let rep = fracmat_iterate(&g, r, &p, &opts)?;
            let w = rep.fractional.total_weight();
            let covered = rep.fractional.vertex_weights(g.n()).iter().filter(|x| **x > BigRational::from_integer(0.into())).count();
            (rep.fractional.to_text(), covered, Some(split(&w)), rep.rounds)
        }
    };
    let wall = ctx.elapsed(start).map_or_else(|| "-".to_string(), |ms| ms.to_string());
    let (num, den) = weight.unwrap_or_else(|| ("-".into(), "-".into()));
    let row = vec![g.n().to_string(), r.to_string(), mode.clone(), covered.to_string(), num, den, rounds.to_string(), wall];
    let table = csv_table(&TILE_COLUMNS, [row])?;
    match csv_path {
        Some(p) => ctx.emit_to(std::path::Path::new(&p), &table)?,
        None => {
            for line in table.lines() {
                body.push_str("# report: ");
                body.push_str(line);
                body.push('\n');
            }
        }
    }
    ctx.emit(&body)
}
