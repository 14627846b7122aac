//! Experiment driver: graph generation, exact solving, the tiling pipeline,
//! reduced multigraphs, absorbers and reproducible sweeps.

pub mod commands;
pub mod error;
pub mod instances;
pub mod output;
pub mod settings;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cliquefactor::{Guards, Seed};

pub use error::{CliError, CliResult};
use settings::{List, Ratio, Settings};

#[derive(Debug, Parser)]
#[command(name = "cliquefactor", version, about = "Clique-factor experiments at desk scale")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Master seed for every random choice.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Branch-and-bound node budget of the exact oracles.
    #[arg(long, global = true)]
    pub guard_nodes: Option<u64>,
    /// Largest clique list an oracle may build.
    #[arg(long, global = true)]
    pub guard_cliques: Option<usize>,
    /// Output file (standard output otherwise).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Flat TOML file of parameters; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write a matplotlib script plotting the produced CSV.
    #[arg(long, global = true)]
    pub plot_script: Option<PathBuf>,
    /// Record wall-clock times (outputs are then no longer byte-stable).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a family specification.
    Gen(GenArgs),
    /// Exact invariants: α, ω, maximum tiling, factor decision.
    Solve(SolveArgs),
    /// K_r-tiling by greedy, augmentation, fractional iteration or exact search.
    Tile(TileArgs),
    /// Maximum fractional K_r-tiling by exact LP.
    Frac(GraphR),
    /// Reduced multigraph of an equipartition.
    Reduce(ReduceArgs),
    /// K_r-neighbourhoods of a reduced multigraph.
    Upsilon(UpsilonArgs),
    /// Shortest K_r-diamond path between two vertices.
    Diamond(DiamondArgs),
    /// Build and certify an absorbing set.
    Absorb(AbsorbArgs),
    /// Absorb-then-tile pipeline for a K_r-factor.
    Factor(AbsorbArgs),
    /// Check the extremal families against their claimed invariants.
    VerifyExtremal(ExtremalArgs),
    /// Coverage of every tiling mode over a G(n, p) grid.
    Sweep(SweepArgs),
    /// LP weight, fractional-iteration weight and integral coverage side by side.
    FracVsInt(FracVsIntArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Graph file or family spec such as gnp:24:0.9 or hs:8:4.
    #[arg(long)]
    pub graph: Option<String>,
    /// edgelist or dimacs.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Debug, Args)]
pub struct GraphR {
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub base: GraphR,
    /// alpha, clique, tiling, factor or all.
    #[arg(long)]
    pub what: Option<String>,
}

#[derive(Debug, Args)]
pub struct TileArgs {
    #[command(flatten)]
    pub base: GraphR,
    /// greedy, augment, fracmat or exact.
    #[arg(long)]
    pub mode: Option<String>,
    /// Coverage fraction at which augmentation stops.
    #[arg(long)]
    pub target: Option<Ratio>,
    /// Most blow-up rounds of the fractional iteration.
    #[arg(long)]
    pub blowup_cap: Option<usize>,
    #[arg(long)]
    pub eta: Option<Ratio>,
    #[arg(long)]
    pub mu: Option<Ratio>,
    /// Write the report row to this CSV file instead of trailing comments.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReducedSourceArgs {
    #[arg(long)]
    pub graph: Option<String>,
    /// Number of clusters of the random equipartition.
    #[arg(long)]
    pub k: Option<usize>,
    /// Partition file replacing the random equipartition.
    #[arg(long)]
    pub partition: Option<PathBuf>,
    #[arg(long)]
    pub eps: Option<Ratio>,
    #[arg(long)]
    pub beta: Option<Ratio>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub source: ReducedSourceArgs,
    /// none, exhaustive or sampled regularity check of every pair.
    #[arg(long)]
    pub regularity: Option<String>,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Write the density matrix as CSV.
    #[arg(long)]
    pub densities: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct UpsilonArgs {
    #[command(flatten)]
    pub source: ReducedSourceArgs,
    /// Reduced multigraph file instead of a graph and partition.
    #[arg(long)]
    pub reduced: Option<PathBuf>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DiamondArgs {
    #[command(flatten)]
    pub base: GraphR,
    #[arg(long)]
    pub from: Option<usize>,
    #[arg(long)]
    pub to: Option<usize>,
    #[arg(long)]
    pub max_len: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AbsorbArgs {
    #[command(flatten)]
    pub base: GraphR,
    /// Absorber size parameter: bodies have r·t vertices.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub phi: Option<Ratio>,
    #[arg(long)]
    pub xi: Option<Ratio>,
    #[arg(long)]
    pub mu: Option<Ratio>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    /// hs, two-cliques or bottleneck.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<List<usize>>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: Option<List<usize>>,
    #[arg(long)]
    pub r: Option<List<usize>>,
    #[arg(long)]
    pub p: Option<List<Ratio>>,
    /// Instances per grid cell.
    #[arg(long)]
    pub instances: Option<usize>,
    #[arg(long)]
    pub modes: Option<List<String>>,
}

#[derive(Debug, Args)]
pub struct FracVsIntArgs {
    /// Graph specs, each optionally suffixed by @r.
    #[arg(long)]
    pub instances: Option<List<String>>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub eta: Option<Ratio>,
}

/// Resolved global state shared by the subcommands.
pub struct Ctx {
    pub settings: Settings,
    pub seed: Seed,
    pub guards: Guards,
    pub timing: bool,
    pub out: Option<PathBuf>,
    pub plot_script: Option<PathBuf>,
    pub command: &'static str,
}

impl Ctx {
    /// Header plus `body`, to `--out` or standard output.
    pub fn emit(&self, body: &str) -> CliResult<()> {
        let text = format!("{}{body}", output::header(self.command, self.settings.resolved()));
        output::write_text(self.out.as_deref(), &text)
    }

    pub fn emit_to(&self, path: &std::path::Path, body: &str) -> CliResult<()> {
        let text = format!("{}{body}", output::header(self.command, self.settings.resolved()));
        output::write_text(Some(path), &text)
    }

    pub fn graph(&mut self, flag: Option<String>) -> CliResult<cliquefactor::Graph> {
        let spec: String = self.settings.require("graph", flag)?;
        instances::load_graph(&spec, self.seed)
    }

    pub fn elapsed(&self, start: std::time::Instant) -> Option<u128> {
        self.timing.then(|| start.elapsed().as_millis())
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    let Cli { global, command } = cli;
    let mut settings = Settings::load(global.config.as_deref())?;
    let seed = Seed(settings.get("seed", global.seed, 0u64)?);
    let defaults = Guards::default();
    let guards = Guards {
        max_nodes: settings.get("guard-nodes", global.guard_nodes, defaults.max_nodes)?,
        max_cliques: settings.get("guard-cliques", global.guard_cliques, defaults.max_cliques)?,
    };
    let timing = settings.get("timing", global.timing.then_some(true), false)?;
    let mut ctx = Ctx { settings, seed, guards, timing, out: global.out, plot_script: global.plot_script, command: "" };
    use commands::*;
    match command {
        Command::Gen(a) => graphs::gen(&mut ctx, a),
        Command::Solve(a) => graphs::solve(&mut ctx, a),
        Command::Frac(a) => graphs::frac(&mut ctx, a),
        Command::Tile(a) => tile::tile(&mut ctx, a),
        Command::Reduce(a) => reduced::reduce(&mut ctx, a),
        Command::Upsilon(a) => reduced::upsilon(&mut ctx, a),
        Command::Diamond(a) => reduced::diamond(&mut ctx, a),
        Command::Absorb(a) => absorb::absorb(&mut ctx, a),
        Command::Factor(a) => absorb::factor(&mut ctx, a),
        Command::VerifyExtremal(a) => experiments::verify_extremal(&mut ctx, a),
        Command::Sweep(a) => experiments::sweep(&mut ctx, a),
        Command::FracVsInt(a) => experiments::frac_vs_int(&mut ctx, a),
    }
}
