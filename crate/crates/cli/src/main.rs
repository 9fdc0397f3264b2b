use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use sldendro::algo::{build, Algo};
use sldendro::bench::bench;
use sldendro::dendrogram_io::{first_divergence, load_dendrogram, save_dendrogram};
use sldendro::edgelist::{load_edge_list, save_edge_list};
use sldendro::mreach::mutual_reachability_mst;
use sldendro::points::{gen_points, Distribution};
use sldendro::stats::Report;
use sldendro::synth::{synth_tree, Topology};
use sldendro_core::RankedTree;

/// Single-linkage dendrograms from minimum spanning trees.
#[derive(Debug, Parser)]
#[command(name = "sldendro", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write an input tree: the mutual reachability MST of a random point
    /// cloud, or a synthetic tree with --topology.
    Gen(GenArgs),
    /// Build a dendrogram from an edge list.
    Build(BuildArgs),
    /// Print height, skewness and per-level edge counts.
    Stats(StatsArgs),
    /// Compare two dendrogram files; exit 1 if they differ.
    Verify(VerifyArgs),
    /// Time repeated builds for several thread counts.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = Distribution::Normal)]
    dist: Distribution,
    /// Number of points (or vertices with --topology).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    minpts: usize,
    /// Generate a synthetic tree instead of a point cloud MST.
    #[arg(long, value_enum)]
    topology: Option<Topology>,
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Pandora)]
    algo: Algo,
    /// Upper bound on worker threads; defaults to the available cores.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Report the height of this dendrogram instead of building one.
    #[arg(long)]
    dendrogram: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Pandora)]
    algo: Algo,
    /// Comma-separated thread counts.
    #[arg(long, default_value = "1,2,8", value_delimiter = ',',
          value_parser = clap::value_parser!(u64).range(1..))]
    threads_list: Vec<u64>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
    #[arg(long)]
    json: bool,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run_gen(args: GenArgs) -> Result<()> {
    let (tree, comments) = match args.topology {
        Some(t) => {
            anyhow::ensure!(args.n >= 2, "a tree needs at least 2 vertices");
            let tree = synth_tree(t, args.n, args.seed);
            (
                tree,
                vec![format!("topology={t:?} n={} seed={}", args.n, args.seed).to_lowercase()],
            )
        }
        None => {
            let pc = gen_points(args.dist, args.n, args.dim, args.seed)?;
            let tree = mutual_reachability_mst(&pc, args.minpts)?;
            let note = format!(
                "mutual reachability mst dist={:?} n={} dim={} seed={} minpts={}",
                args.dist, args.n, args.dim, args.seed, args.minpts
            );
            (tree, vec![note.to_lowercase()])
        }
    };
    save_edge_list(&args.output, &tree, &comments)
        .with_context(|| format!("writing {}", args.output.display()))
}

fn run_build(args: BuildArgs) -> Result<()> {
    let tree =
        load_edge_list(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let threads = args.threads.map_or_else(default_threads, |t| t as usize);
    let run = build(args.algo, tree, threads)?;
    save_dendrogram(&args.output, &run.dendrogram)
        .with_context(|| format!("writing {}", args.output.display()))?;
    println!(
        "algo={} threads={threads} points={} seconds={:.6} mpoints_per_sec={:.3}",
        args.algo.name(),
        run.dendrogram.num_vertices(),
        run.seconds,
        run.mpoints_per_sec()
    );
    Ok(())
}

fn run_stats(args: StatsArgs) -> Result<()> {
    let tree =
        load_edge_list(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let ranked = RankedTree::new(tree);
    let d = match &args.dendrogram {
        Some(p) => Some(load_dendrogram(p).with_context(|| format!("reading {}", p.display()))?),
        None => None,
    };
    let report = Report::new(&ranked, d.as_ref())?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<bool> {
    let a = load_dendrogram(&args.a).with_context(|| format!("reading {}", args.a.display()))?;
    let b = load_dendrogram(&args.b).with_context(|| format!("reading {}", args.b.display()))?;
    match first_divergence(&a, &b) {
        None => {
            println!("identical");
            Ok(true)
        }
        Some(d) => {
            println!("differ at {d}");
            Ok(false)
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<()> {
    let tree =
        load_edge_list(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let threads: Vec<usize> = args.threads_list.iter().map(|&t| t as usize).collect();
    let rows = bench(&tree, args.algo, &threads, args.repeat as usize)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(());
    }
    for r in rows {
        println!(
            "algo={} threads={} runs={} median_seconds={:.6} mpoints_per_sec={:.3}",
            args.algo.name(),
            r.threads,
            r.runs,
            r.median_seconds,
            r.mpoints_per_sec
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => run_gen(a).map(|_| true),
        Command::Build(a) => run_build(a).map(|_| true),
        Command::Stats(a) => run_stats(a).map(|_| true),
        Command::Verify(a) => run_verify(a),
        Command::Bench(a) => run_bench(a).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
