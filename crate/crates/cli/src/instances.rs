//! Graph sources: a file path, or a family specification such as
//! `gnp:24:0.9`, `hs:8:4`, `two-cliques:12`, `bottleneck:16:4`,
//! `sphere:6:30:1/8`, `tf:50`, `complete:8`, `cycle:5`, `empty:4` or
//! `blowup:3:complete:4`.

use std::path::Path;

use cliquefactor::constructions::{
    blow_up, bollobas_erdos, bottleneck_extremal, gnp, hs_extremal, triangle_free_process, two_cliques, SphereParams,
};
use cliquefactor::graph::io::{read_graph, GraphFormat};
use cliquefactor::rational::parse_ratio;
use cliquefactor::{Graph, Seed};

use crate::error::{CliError, CliResult};

pub fn load_graph(spec: &str, seed: Seed) -> CliResult<Graph> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(read_graph(path, GraphFormat::from_path(path))?);
    }
    from_spec(spec, seed)
}

fn from_spec(spec: &str, seed: Seed) -> CliResult<Graph> {
    let (family, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let args: Vec<&str> = if rest.is_empty() { Vec::new() } else { rest.split(':').collect() };
    let bad = || CliError::Input(format!("cannot read graph '{spec}': no such file and not a family spec"));
    let int = |i: usize| -> CliResult<usize> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad) };
    let ratio = |i: usize| args.get(i).and_then(|a| parse_ratio(a)).ok_or_else(bad);
    let g = match family {
        "complete" => Graph::complete(int(0)?),
        "empty" => Graph::empty(int(0)?),
        "cycle" => Graph::cycle(int(0)?)?,
        "star" => Graph::star(int(0)?),
        "gnp" => gnp(int(0)?, ratio(1)?, seed)?,
        "hs" => hs_extremal(int(0)?, int(1)?)?,
        "two-cliques" => two_cliques(int(0)?)?,
        "bottleneck" => {
            let (n, r) = (int(0)?, int(1)?);
            let m = 2 * n / r.max(1) + 1;
            let tf = if args.get(2) == Some(&"tf") { triangle_free_process(m, seed)? } else { Graph::cycle(m)? };
            bottleneck_extremal(n, r, &tf)?
        }
        "tf" => triangle_free_process(int(0)?, seed)?,
        "sphere" => {
            let zeta = if args.len() > 2 { ratio(2)? } else { cliquefactor::rational::ratio(1, 8) };
            bollobas_erdos(&SphereParams::with_defaults(int(0)?, int(1)?, zeta), seed)?.graph
        }
        "blowup" => {
            let s = int(0)?;
            let inner = rest.split_once(':').map(|(_, tail)| tail).ok_or_else(bad)?;
            blow_up(&load_graph(inner, seed)?, s)?.graph
        }
        _ => return Err(bad()),
    };
    Ok(g)
}
