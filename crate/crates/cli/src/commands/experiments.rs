use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use cliquefactor::constructions::{bottleneck_extremal, gnp, hs_extremal, two_cliques};
use cliquefactor::oracles::{has_kr_factor, independence_number, max_fractional_tiling, max_kr_tiling};
use cliquefactor::rational::{format_big, format_ratio, ratio, BigRational};
use cliquefactor::tiling::{augment_to_target, fracmat_iterate, greedy_tiling, FracmatOptions};
use cliquefactor::{AugmentParams, Graph, Guards};
use rayon::prelude::*;

use super::choice;
use super::tile::split;
use crate::error::CliError;
use crate::instances::load_graph;
use crate::output::{csv_table, plot_script, report_csv, ReportRow};
use crate::settings::{List, Ratio};
use crate::{CliResult, Ctx, ExtremalArgs, FracVsIntArgs, SweepArgs};

struct Check {
    lines: String,
    failures: Vec<String>,
}

impl Check {
    fn claim(&mut self, label: &str, ok: bool) {
        writeln!(self.lines, "{} {label}", if ok { "ok  " } else { "FAIL" }).ok();
        if !ok {
            self.failures.push(label.to_string());
        }
    }
}

fn no_factor(g: &Graph, r: usize, guards: &Guards) -> CliResult<bool> {
    Ok(!has_kr_factor(g, r, guards)?.exists())
}

pub fn verify_extremal(ctx: &mut Ctx, a: ExtremalArgs) -> CliResult<()> {
    ctx.command = "verify-extremal";
    let family: String = ctx.settings.get("family", a.family, "hs".into())?;
    choice(&family, "family", &["hs", "two-cliques", "bottleneck"])?;
    let default_n = match family.as_str() {
        "hs" => vec![8, 12, 16],
        "two-cliques" => vec![12, 16, 20],
        _ => vec![16],
    };
    let ns = ctx.settings.get("n", a.n, List(default_n))?.0;
    let r = ctx.settings.opt("r", a.r)?;
    let guards = ctx.guards;
    let mut c = Check { lines: String::new(), failures: Vec::new() };
    for n in ns {
        match family.as_str() {
            "hs" => {
                let r = r.unwrap_or(4);
                let g = hs_extremal(n, r)?;
                let delta = g.min_degree()?;
                c.claim(&format!("hs n={n} r={r}: min degree {delta} = (1 - 1/r)n - 1"), delta + 1 == n - n / r);
                let alpha = independence_number(&g, &guards)?;
                c.claim(&format!("hs n={n} r={r}: alpha {alpha} = n/r + 1"), alpha == n / r + 1);
                c.claim(&format!("hs n={n} r={r}: no K_{r}-factor"), no_factor(&g, r, &guards)?);
            }
            "two-cliques" => {
                let g = two_cliques(n)?;
                let delta = g.min_degree()?;
                c.claim(&format!("two-cliques n={n}: min degree {delta} = n/2 - 2"), delta + 2 == n / 2);
                let alpha = independence_number(&g, &guards)?;
                c.claim(&format!("two-cliques n={n}: alpha {alpha} = 2"), alpha == 2);
                for r in r.map_or(vec![2, 3], |r| vec![r]) {
                    c.claim(&format!("two-cliques n={n}: no K_{r}-factor"), no_factor(&g, r, &guards)?);
                }
            }
            _ => {
                let r = r.unwrap_or(4);
                if r == 0 {
                    return Err(CliError::Input("r must be positive".into()));
                }
                let tf = Graph::cycle(2 * n / r + 1)?;
                let g = bottleneck_extremal(n, r, &tf)?;
                c.claim(&format!("bottleneck n={n} r={r}: sparse part is triangle-free"), tf.is_triangle_free());
                c.claim(&format!("bottleneck n={n} r={r}: no K_{r}-factor"), no_factor(&g, r, &guards)?);
            }
        }
    }
    writeln!(c.lines, "claims {} failed {}", c.lines.lines().count(), c.failures.len()).ok();
    ctx.emit(&c.lines)?;
    if c.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Assertion(c.failures.join("; ")))
    }
}

const SWEEP_MODES: [&str; 5] = ["greedy", "augment", "fracmat", "exact", "lp"];

fn sweep_row(g: &Graph, r: usize, mode: &str, guards: &Guards, timing: bool) -> cliquefactor::Result<ReportRow> {
    let start = Instant::now();
    let n = g.n();
    let tenth = ratio(1, 10);
    let mut row = ReportRow { n, r, mode: mode.to_string(), factor: "-".into(), ..Default::default() };
    match mode {
        "greedy" => row.covered = Some(greedy_tiling(g, r).covered()),
        "augment" => {
            let p = AugmentParams::new(r, tenth, tenth, None, tenth)?;
            row.covered = Some(augment_to_target(g, r, &p, ratio(1, 1))?.tiling.covered());
        }
        "fracmat" => {
            let p = AugmentParams::new(r, tenth, tenth, None, tenth)?;
            let rep = fracmat_iterate(g, r, &p, &FracmatOptions { guards: *guards, ..FracmatOptions::default() })?;
            row.weight = Some(split(&rep.fractional.total_weight()));
        }
        "exact" => {
            let t = max_kr_tiling(g, r, guards)?;
            row.covered = Some(t.covered());
            row.weight = Some(split(&BigRational::from_integer(t.covered().into())));
            row.factor = if t.covered() == n { "yes" } else { "no" }.into();
        }
        _ => row.weight = Some(split(&max_fractional_tiling(g, r, guards)?.total_weight())),
    }
    row.wall_ms = timing.then(|| start.elapsed().as_millis());
    Ok(row)
}

pub fn sweep(ctx: &mut Ctx, a: SweepArgs) -> CliResult<()> {
    ctx.command = "sweep";
    let ns = ctx.settings.get("n", a.n, List(vec![12, 24]))?.0;
    let rs = ctx.settings.get("r", a.r, List(vec![3, 4]))?.0;
    let default_p = [5, 7, 9].iter().map(|&k| Ratio(ratio(k, 10))).collect();
    let ps = ctx.settings.get("p", a.p, List(default_p))?.0;
    let instances: usize = ctx.settings.get("instances", a.instances, 3)?;
    let default_modes = ["greedy", "augment", "exact"].iter().map(|s| s.to_string()).collect();
    let modes = ctx.settings.get("modes", a.modes, List(default_modes))?.0;
    for m in &modes {
        choice(m, "modes", &SWEEP_MODES)?;
    }
    let mut cells = Vec::new();
    for &n in &ns {
        for &r in &rs {
            for p in &ps {
                for i in 0..instances {
                    cells.push((n, r, p.0, i));
                }
            }
        }
    }
    let (seed, guards, timing) = (ctx.seed, ctx.guards, ctx.timing);
    let results: Vec<CliResult<Vec<ReportRow>>> = cells
        .par_iter()
        .map(|&(n, r, p, i)| {
            let cell_seed = seed.derive(&[n as u64, r as u64, *p.numer() as u64, *p.denom() as u64, i as u64]);
            let g = gnp(n, p, cell_seed)?;
            let instance = format!("gnp:{n}:{}#{i}", format_ratio(&p));
            let min_degree = g.min_degree().ok();
            let alpha = independence_number(&g, &guards).ok();
            let mut rows = Vec::new();
            for mode in &modes {
                let mut row = match sweep_row(&g, r, mode, &guards, timing) {
                    Ok(row) => row,
                    Err(cliquefactor::Error::Resource(_)) => {
                        ReportRow { n, r, mode: mode.clone(), factor: "guard".into(), ..Default::default() }
                    }
                    Err(e) => return Err(e.into()),
                };
                row.instance = instance.clone();
                row.min_degree = min_degree;
                row.alpha = alpha;
                row.seed = cell_seed.0;
                rows.push(row);
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    let mut body = report_csv(&rows)?;
    let mut rate: BTreeMap<(usize, usize, String), (usize, usize)> = BTreeMap::new();
    for row in rows.iter().filter(|row| row.mode == "exact") {
        let p = row.instance.split(':').nth(2).and_then(|s| s.split('#').next()).unwrap_or("").to_string();
        let e = rate.entry((row.n, row.r, p)).or_default();
        e.1 += 1;
        if row.factor == "yes" {
            e.0 += 1;
        }
    }
    for ((n, r, p), (yes, total)) in rate {
        writeln!(body, "# factor-rate n={n} r={r} p={p}: {yes}/{total}").ok();
    }
    if let Some(script) = ctx.plot_script.clone() {
        let csv = ctx.out.as_ref().map_or_else(|| "sweep.csv".to_string(), |p| p.display().to_string());
        crate::output::write_text(Some(&script), &plot_script(&csv, "n", "covered", "mode"))?;
    }
    ctx.emit(&body)
}

const FVI_COLUMNS: [&str; 9] =
    ["instance", "n", "r", "lp_cover", "fracmat_cover", "integral_cover", "lp_below", "fracmat_below", "integral_below"];

pub fn frac_vs_int(ctx: &mut Ctx, a: FracVsIntArgs) -> CliResult<()> {
    ctx.command = "frac-vs-int";
    let default_instances = ["cycle:5@2", "complete:8@4", "hs:8:4@4"].iter().map(|s| s.to_string()).collect();
    let specs = ctx.settings.get("instances", a.instances, List(default_instances))?.0;
    let default_r: usize = ctx.settings.get("r", a.r, 3)?;
    let eta = ctx.settings.get("eta", a.eta, Ratio(ratio(1, 10)))?.0;
    let threshold = BigRational::from_integer(1.into()) - cliquefactor::rational::to_big(&eta);
    let mut rows = Vec::new();
    for spec in specs {
        let (graph_spec, r) = match spec.rsplit_once('@') {
            Some((g, r)) => (g.to_string(), r.parse().map_err(|_| CliError::Input(format!("bad r in '{spec}'")))?),
            None => (spec.clone(), default_r),
        };
        let g = load_graph(&graph_spec, ctx.seed)?;
        let n = g.n();
        let lp = max_fractional_tiling(&g, r, &ctx.guards)?;
        let (fm_cover, fm_below) = if r >= 3 {
            let tenth = ratio(1, 10);
            let p = AugmentParams::new(r, eta, tenth, None, tenth)?;
            let rep = fracmat_iterate(&g, r, &p, &FracmatOptions { guards: ctx.guards, ..FracmatOptions::default() })?;
            (format_big(&rep.fractional.total_weight()), rep.fractional.count_below(n, &threshold).to_string())
        } else {
            ("-".to_string(), "-".to_string())
        };
        let t = max_kr_tiling(&g, r, &ctx.guards)?;
        rows.push(vec![
            graph_spec,
            n.to_string(),
            r.to_string(),
            format_big(&lp.total_weight()),
            fm_cover,
            t.covered().to_string(),
            lp.count_below(n, &threshold).to_string(),
            fm_below,
            (n - t.covered()).to_string(),
        ]);
    }
    let body = csv_table(&FVI_COLUMNS, rows)?;
    ctx.emit(&body)
}

