use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use halfgame::harness::{
    bias_sweep, equivalence_test, parse_grid, property_diagnostics, sidecar_path, sweep_csv, sweep_json, Alternative,
};
use halfgame::verify::{
    has_complete_bipartite, has_dense_kset, is_connected, is_hamiltonian, is_perfect_matching, max_degree, min_degree,
    SimpleGraph,
};
use halfgame::{
    play, BreakerMode, Error, GameConfig, GameKind, GreedyMaker, HamiltonMaker, MakerStrategy, PerfectMatchingMaker,
    StopPolicy,
};

#[derive(Debug, Parser)]
#[command(name = "halfgame", version, about = "Half-random biased Maker-Breaker games on K_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Play one game and print its record as JSON.
    Play(PlayArgs),
    /// Estimate win rates over a bias grid; writes CSV and a JSON sidecar.
    Sweep(SweepArgs),
    /// Exact total-variation distance between uniform and permutation Breaker play.
    Equiv(EquivArgs),
    /// Run the graph checkers on an edge-list file.
    Verify(VerifyArgs),
    /// Structural property frequencies of Breaker's graph.
    Diag(DiagArgs),
}

#[derive(Debug, Args)]
struct PlayArgs {
    /// Read the whole configuration from a JSON file, as echoed by a previous run.
    #[arg(long, conflicts_with_all = ["game", "n", "bias", "epsilon", "seed", "breaker", "stop"])]
    config: Option<PathBuf>,
    #[arg(long, default_value = "pm")]
    game: GameKind,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    bias: usize,
    #[arg(long, default_value_t = 0.45)]
    epsilon: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// uniform or perm
    #[arg(long, default_value = "uniform")]
    breaker: BreakerMode,
    /// goal (stop at Maker's win) or full (play until the board is full)
    #[arg(long, default_value = "goal")]
    stop: StopPolicy,
    /// Write the play-sequence as `u-v:M|B` tokens to this file.
    #[arg(long)]
    sequence_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    game: GameKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    /// start:stop:step, both ends included
    #[arg(long)]
    bias_grid: String,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "uniform")]
    breaker: BreakerMode,
    /// CSV path; the sidecar goes next to it with a .json extension.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, env = "HALFGAME_WORKERS", default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum MakerChoice {
    Greedy,
    Pm,
    Ham,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum AgainstChoice {
    Perm,
    Smallest,
}

#[derive(Debug, Args, Serialize)]
struct EquivArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    bias: usize,
    /// Compare the first ROUNDS rounds; the full game when omitted.
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(long, value_enum, default_value = "greedy")]
    maker: MakerChoice,
    #[arg(long, default_value_t = 0.45)]
    epsilon: f64,
    /// Breaker model compared against uniform play.
    #[arg(long, value_enum, default_value = "perm")]
    against: AgainstChoice,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Edge list: the vertex count, then one `u v` pair per edge.
    #[arg(long)]
    graph: PathBuf,
    /// Also test for a set of K vertices inducing at least C(K,2) - K/2 edges.
    #[arg(long)]
    dense: Option<usize>,
    /// Also test for a complete bipartite subgraph, given as R,Q.
    #[arg(long, value_parser = parse_pair)]
    biclique: Option<(usize, usize)>,
    /// Skip the exact Hamiltonicity search.
    #[arg(long)]
    no_ham: bool,
}

#[derive(Debug, Args)]
struct DiagArgs {
    #[arg(long, default_value = "pm")]
    game: GameKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.45)]
    epsilon: f64,
    /// Defaults to floor((1 - epsilon) n).
    #[arg(long)]
    bias: Option<usize>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the dense-set size.
    #[arg(long)]
    k: Option<usize>,
    /// Override the bipartite side length.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, env = "HALFGAME_WORKERS", default_value_t = 1)]
    workers: usize,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected R,Q")?;
    let a = a.trim().parse().map_err(|_| "R is not a number")?;
    let b = b.trim().parse().map_err(|_| "Q is not a number")?;
    Ok((a, b))
}

fn echo<T: Serialize>(what: &str, value: &T) {
    eprintln!("{what}: {}", serde_json::to_string(value).expect("config serializes"));
}

fn cmd_play(a: PlayArgs) -> anyhow::Result<()> {
    let mut cfg = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str::<GameConfig>(&text).context("parsing the configuration")?
        }
        None => GameConfig::new(a.game, a.n, a.bias, a.epsilon, a.seed)
            .with_breaker(a.breaker)
            .with_stop(a.stop),
    };
    cfg.record_sequence = a.sequence_out.is_some();
    echo("config", &cfg);
    let record = play(&cfg)?;
    if let (Some(path), Some(seq)) = (&a.sequence_out, &record.play_sequence) {
        let codec = halfgame::EdgeCodec::new(cfg.n);
        fs::write(path, halfgame::board::sequence_text(&codec, seq) + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    println!("{}", serde_json::to_string(&record)?);
    Ok(())
}

fn cmd_sweep(a: SweepArgs) -> anyhow::Result<()> {
    let grid = parse_grid(&a.bias_grid)?;
    let base = GameConfig::new(a.game, a.n, grid[0], a.epsilon, a.seed).with_breaker(a.breaker);
    base.validate()?;
    echo("config", &serde_json::json!({
        "game": a.game, "n": a.n, "epsilon": a.epsilon, "biasGrid": grid, "trials": a.trials,
        "seed": a.seed, "breakerMode": a.breaker, "out": a.out, "workers": a.workers,
    }));
    let result = bias_sweep(&base, &grid, a.trials, a.seed, a.workers)?;
    fs::write(&a.out, sweep_csv(&result)).with_context(|| format!("writing {}", a.out.display()))?;
    let json = sweep_json(&result, a.breaker, StopPolicy::StopAtGoal, a.workers);
    let side = sidecar_path(&a.out);
    fs::write(&side, serde_json::to_string_pretty(&json)? + "\n")
        .with_context(|| format!("writing {}", side.display()))?;
    match result.estimated_threshold {
        Some(t) => println!("estimatedThreshold={t:.6} ({:.6} n)", t / a.n as f64),
        None => println!("estimatedThreshold=none"),
    }
    if result.non_monotone {
        println!("warning: win rate is not monotone in the bias beyond noise");
    }
    Ok(())
}

fn cmd_equiv(a: EquivArgs) -> anyhow::Result<()> {
    echo("config", &a);
    let (n, eps) = (a.n, a.epsilon);
    let factory = move || -> halfgame::Result<Box<dyn MakerStrategy>> {
        Ok(match a.maker {
            MakerChoice::Greedy => Box::new(GreedyMaker),
            MakerChoice::Pm => Box::new(PerfectMatchingMaker::new(n, eps)?),
            MakerChoice::Ham => Box::new(HamiltonMaker::new(n, eps)?),
        })
    };
    let alt = match a.against {
        AgainstChoice::Perm => Alternative::Permutation,
        AgainstChoice::Smallest => Alternative::SmallestFree,
    };
    let tv = equivalence_test(a.n, a.bias, a.rounds, &factory, alt)?;
    println!("TV={:.6}", *tv.numer() as f64 / *tv.denom() as f64);
    Ok(())
}

fn read_graph(path: &PathBuf) -> anyhow::Result<SimpleGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut nums = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parameter(format!("bad token '{t}' in graph file"))));
    let n = nums.next().ok_or_else(|| Error::Parameter("graph file is empty".into()))??;
    let rest: Vec<usize> = nums.collect::<Result<_, _>>()?;
    if !rest.len().is_multiple_of(2) {
        bail!(Error::Parameter("graph file has an unpaired vertex".into()));
    }
    Ok(SimpleGraph::from_edges(n, rest.chunks(2).map(|c| (c[0], c[1])))?)
}

fn cmd_verify(a: VerifyArgs) -> anyhow::Result<()> {
    let g = read_graph(&a.graph)?;
    println!("n={}", g.n());
    println!("edges={}", g.edge_count());
    println!("minDegree={}", min_degree(&g));
    println!("maxDegree={}", max_degree(&g));
    println!("connected={}", is_connected(&g));
    if g.n() % 2 == 0 {
        println!("perfectMatching={}", is_perfect_matching(&g)?);
    }
    if !a.no_ham {
        println!("hamiltonian={}", is_hamiltonian(&g)?);
    }
    if let Some(k) = a.dense {
        println!("denseSet[{k}]={}", has_dense_kset(&g, k)?);
    }
    if let Some((r, q)) = a.biclique {
        println!("biclique[{r},{q}]={}", has_complete_bipartite(&g, r, q)?);
    }
    Ok(())
}

fn cmd_diag(a: DiagArgs) -> anyhow::Result<()> {
    let bias = a.bias.unwrap_or(((1.0 - a.epsilon) * a.n as f64).floor() as usize);
    let cfg = GameConfig::new(a.game, a.n, bias, a.epsilon, a.seed);
    echo("config", &serde_json::json!({
        "game": a.game, "n": a.n, "epsilon": a.epsilon, "bias": bias, "trials": a.trials,
        "seed": a.seed, "k": a.k, "l": a.l, "workers": a.workers,
    }));
    let report = property_diagnostics(&cfg, a.trials, a.seed, a.workers, a.k, a.l)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parameter(_)) | Some(Error::InvalidVertex { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Play(a) => cmd_play(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Equiv(a) => cmd_equiv(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Diag(a) => cmd_diag(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
