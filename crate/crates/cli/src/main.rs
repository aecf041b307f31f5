//! `cendist` — measure how far apart two named graphs are through the lens
//! of a centrality, and run the associated evolution and null-model tools.
//!
//! Exit codes: 0 on success (including `--help`/`--version`), 1 on usage
//! errors, 2 on domain errors (bad input files, out-of-range parameters,
//! infeasible requests). All diagnostics go to standard error.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cendist::io::{
    centrality_csv, cdf_csv, format_sig12, parse_edge_list, parse_events, parse_events_unsorted,
    profile_csv, records_csv, serialize_edge_list,
};
use cendist::{
    approx_distance, centrality, dichotomic_path, discretize, exact_distance_matrix,
    exact_distance_with_cap, greedy_path, incremental_path, layer_edge_count, profile, rank_cdf,
    run_experiment_with_pool, sample_at_radius, sensitivity, CentralityKind, DiscretizeMode,
    EvolutionPath, MetagraphIndex, NamedGraph, SamplingPool, DEFAULT_UNIVERSE_CAP,
};

#[derive(Parser)]
#[command(
    name = "cendist",
    version,
    about = "Centrality distances between named graphs: vectors, exact and \
             approximate distances, metagraph checks, evolution profiles, \
             null-model sampling, and the dynamic-network rank experiment.",
    arg_required_else_help = true
)]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one graph's centrality vector and print it as CSV.
    Centrality(CentralityArgs),
    /// Measure the distance between two graphs under a centrality.
    Dist(DistArgs),
    /// Inspect the k-vertex layer of the graph-of-graphs.
    Metagraph(MetagraphArgs),
    /// Build an evolution path and profile its per-step distances.
    Evolve(EvolveArgs),
    /// Draw random graphs at an exact edit radius from a reference.
    Sample(SampleArgs),
    /// Rank real evolution against same-radius random change over a trace.
    Experiment(ExperimentArgs),
    /// Validate the installation: metric axioms and sensitivity checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Degree,
    Betweenness,
    Closeness,
}

impl From<KindArg> for CentralityKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Degree => CentralityKind::Degree,
            KindArg::Betweenness => CentralityKind::Betweenness,
            KindArg::Closeness => CentralityKind::Closeness,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Approx,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Incremental,
    Dichotomic,
    Greedy,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Bipartite,
    Layers,
    Size,
}

#[derive(Clone, Copy, ValueEnum)]
enum WindowModeArg {
    Interaction,
    Cumulative,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoolArg {
    /// Toggle pairs over the whole trace universe.
    Universe,
    /// Toggle pairs only among vertices with an edge in the current snapshot.
    Active,
}

#[derive(Args)]
struct CentralityArgs {
    /// Edge-list file of the graph.
    graph: PathBuf,
    /// Which centrality to compute.
    #[arg(long, value_enum)]
    centrality: KindArg,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    /// Edge-list file of the first graph.
    g1: PathBuf,
    /// Edge-list file of the second graph.
    g2: PathBuf,
    /// Which centrality induces the distance.
    #[arg(long, value_enum)]
    centrality: KindArg,
    /// Direct L1 difference (approx) or shortest-path distance in the
    /// graph-of-graphs (exact).
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Largest vertex-universe size admitted in exact mode; the exact
    /// search visits up to 2^(cap choose 2) graphs.
    #[arg(long, default_value_t = DEFAULT_UNIVERSE_CAP)]
    cap: usize,
}

#[derive(Args)]
struct MetagraphArgs {
    /// Number of vertices of the layer.
    #[arg(long)]
    k: usize,
    /// Which structural property to verify.
    #[arg(long, value_enum)]
    check: CheckArg,
    /// Largest layer admitted for full enumeration.
    #[arg(long, default_value_t = DEFAULT_UNIVERSE_CAP)]
    cap: usize,
}

#[derive(Args)]
struct EvolveArgs {
    /// Number of vertices for the built-in line-to-shell schedules.
    #[arg(
        long,
        required_if_eq_any([("path", "incremental"), ("path", "dichotomic")]),
        conflicts_with_all = ["start", "target"]
    )]
    n: Option<usize>,
    /// Which edge-addition schedule to follow.
    #[arg(long, value_enum)]
    path: PathArg,
    /// Which centrality the per-step profile measures (and the greedy
    /// schedule optimizes).
    #[arg(long, value_enum)]
    centrality: KindArg,
    /// Starting graph for the greedy schedule (edge-list file).
    #[arg(long, required_if_eq("path", "greedy"))]
    start: Option<PathBuf>,
    /// Target graph for the greedy schedule; must contain every start edge.
    #[arg(long, required_if_eq("path", "greedy"))]
    target: Option<PathBuf>,
    /// Write the profile CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    /// Edge-list file of the reference graph.
    #[arg(long = "ref")]
    reference: PathBuf,
    /// Exact edit distance of every sample from the reference.
    #[arg(long)]
    radius: usize,
    /// Number of samples to draw.
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Random seed (no hidden entropy: runs are reproducible).
    #[arg(long)]
    seed: u64,
    /// Directory for the sample edge lists and run.json.
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Timestamped event file: one `u v unix_timestamp` per line.
    #[arg(long)]
    events: PathBuf,
    /// Window length in the trace's time unit (e.g. 86400 for daily).
    #[arg(long)]
    window: u64,
    /// Snapshot semantics: edges seen within each window (interaction) or
    /// all edges seen so far (cumulative).
    #[arg(long, value_enum)]
    mode: WindowModeArg,
    /// Which centrality induces the distance.
    #[arg(long, value_enum)]
    centrality: KindArg,
    /// Random samples per timestep.
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Random seed (no hidden entropy: runs are reproducible).
    #[arg(long)]
    seed: u64,
    /// Directory for records.csv, cdf.csv, and run.json.
    #[arg(long)]
    out_dir: PathBuf,
    /// Which vertices the null model may rewire.
    #[arg(long, value_enum, default_value_t = PoolArg::Universe)]
    pool: PoolArg,
    /// Accept out-of-order events by sorting them first.
    #[arg(long)]
    sort: bool,
}

/// Anything that should terminate the run with exit code 2.
enum CliError {
    Domain(cendist::Error),
    File { path: PathBuf, source: std::io::Error },
    Check(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::File { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Check(msg) => f.write_str(msg),
        }
    }
}

impl From<cendist::Error> for CliError {
    fn from(e: cendist::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool can only be set once, and a
        // pre-initialized default pool is not an error worth dying for.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
    }

    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Centrality(args) => cmd_centrality(args),
        Command::Dist(args) => cmd_dist(args),
        Command::Metagraph(args) => cmd_metagraph(args),
        Command::Evolve(args) => cmd_evolve(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Selftest => cmd_selftest(),
    }
}

fn read_to_string(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.to_owned(),
        source,
    })
}

fn read_graph(path: &Path) -> CliResult<NamedGraph> {
    Ok(parse_edge_list(&read_to_string(path)?)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult {
    fs::write(path, contents).map_err(|source| CliError::File {
        path: path.to_owned(),
        source,
    })
}

fn emit(out: Option<&Path>, contents: &str) -> CliResult {
    match out {
        Some(path) => write_file(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn cmd_centrality(args: CentralityArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let vector = centrality(args.centrality.into(), &g);
    emit(args.out.as_deref(), &centrality_csv(&vector))
}

fn cmd_dist(args: DistArgs) -> CliResult {
    let g1 = read_graph(&args.g1)?;
    let g2 = read_graph(&args.g2)?;
    let kind = args.centrality.into();
    let value = match args.mode {
        ModeArg::Approx => approx_distance(kind, &g1, &g2),
        ModeArg::Exact => {
            let universe: BTreeSet<_> = g1.vertex_set().union(g2.vertex_set()).cloned().collect();
            exact_distance_with_cap(kind, &g1, &g2, &universe, args.cap)?
        }
    };
    println!("{}", format_sig12(value));
    Ok(())
}

fn cmd_metagraph(args: MetagraphArgs) -> CliResult {
    let mg = MetagraphIndex::canonical(args.k)?;
    let nodes = mg.node_count();
    println!(
        "layer k={}: {} graphs over {} vertex pairs",
        args.k,
        nodes,
        mg.pair_count()
    );

    let mut summary = serde_json::json!({
        "k": args.k,
        "pairs": mg.pair_count(),
        "nodes": nodes,
    });

    match args.check {
        CheckArg::Size => {}
        CheckArg::Bipartite => {
            let bipartite = mg.check_bipartite(args.cap)?;
            println!("edge-parity bipartition: {bipartite} (every edit flips edge-count parity)");
            summary["bipartite"] = serde_json::json!(bipartite);
        }
        CheckArg::Layers => {
            let sizes: Vec<u64> = (1..=args.k)
                .map(|j| layer_edge_count(j, args.cap))
                .collect::<Result<_, _>>()?;
            let rendered: Vec<String> = sizes.iter().map(u64::to_string).collect();
            println!("layer sizes for k=1..={}: {}", args.k, rendered.join(", "));
            summary["layers"] = serde_json::json!(sizes);
        }
    }

    println!("{summary}");
    Ok(())
}

fn cmd_evolve(args: EvolveArgs) -> CliResult {
    let kind: CentralityKind = args.centrality.into();
    let path: EvolutionPath = match args.path {
        PathArg::Incremental => incremental_path(args.n.expect("required by clap"))?,
        PathArg::Dichotomic => dichotomic_path(args.n.expect("required by clap"))?,
        PathArg::Greedy => {
            let start = read_graph(args.start.as_deref().expect("required by clap"))?;
            let target = read_graph(args.target.as_deref().expect("required by clap"))?;
            greedy_path(kind, &start, &target)?
        }
    };
    let prof = profile(&path, kind)?;
    emit(args.out.as_deref(), &profile_csv(&path, &prof))
}

fn cmd_sample(args: SampleArgs) -> CliResult {
    let reference = read_graph(&args.reference)?;
    let set = sample_at_radius(&reference, args.radius, args.count, args.seed)?;

    fs::create_dir_all(&args.out_dir).map_err(|source| CliError::File {
        path: args.out_dir.clone(),
        source,
    })?;
    for (i, sample) in set.samples.iter().enumerate() {
        let file = args.out_dir.join(format!("sample_{i:04}.edges"));
        write_file(&file, &serialize_edge_list(sample))?;
    }

    let run = serde_json::json!({
        "subcommand": "sample",
        "reference": args.reference.display().to_string(),
        "radius": args.radius,
        "count": args.count,
        "seed": args.seed,
        "sampling": "uniform over vertex-pair subsets of the given size, with replacement across samples",
        "out_dir": args.out_dir.display().to_string(),
        "version": env!("CARGO_PKG_VERSION"),
    });
    write_file(
        &args.out_dir.join("run.json"),
        &format!("{:#}\n", run),
    )?;

    println!(
        "wrote {} samples at radius {} to {}",
        set.samples.len(),
        args.radius,
        args.out_dir.display()
    );
    Ok(())
}

fn cmd_experiment(args: ExperimentArgs) -> CliResult {
    let text = read_to_string(&args.events)?;
    let events = if args.sort {
        parse_events_unsorted(&text)?
    } else {
        parse_events(&text)?
    };
    let mode = match args.mode {
        WindowModeArg::Interaction => DiscretizeMode::Interaction,
        WindowModeArg::Cumulative => DiscretizeMode::Cumulative,
    };
    let dynamic = discretize(&events, args.window, mode)?;
    let pool = match args.pool {
        PoolArg::Universe => SamplingPool::FullUniverse,
        PoolArg::Active => SamplingPool::ActiveVertices,
    };
    let kind: CentralityKind = args.centrality.into();
    let records = run_experiment_with_pool(&dynamic, kind, args.count, args.seed, pool)?;

    fs::create_dir_all(&args.out_dir).map_err(|source| CliError::File {
        path: args.out_dir.clone(),
        source,
    })?;
    write_file(&args.out_dir.join("records.csv"), &records_csv(&records))?;

    let skipped = records.iter().filter(|r| r.is_skipped()).count();
    let usable = records.len() - skipped;
    // A trace whose snapshots never change has nothing to rank; the CSV of
    // skip markers is still a faithful result, so emit an empty CDF rather
    // than failing the run.
    let cdf = if usable > 0 {
        cdf_csv(&rank_cdf(&records)?)
    } else {
        "rank,fraction\n".to_owned()
    };
    write_file(&args.out_dir.join("cdf.csv"), &cdf)?;

    let run = serde_json::json!({
        "subcommand": "experiment",
        "events": args.events.display().to_string(),
        "window": args.window,
        "mode": match args.mode {
            WindowModeArg::Interaction => "interaction",
            WindowModeArg::Cumulative => "cumulative",
        },
        "centrality": kind.as_str(),
        "count": args.count,
        "seed": args.seed,
        "pool": match args.pool {
            PoolArg::Universe => "full trace universe",
            PoolArg::Active => "vertices active in the current snapshot",
        },
        "sorted_input": args.sort,
        "timesteps": dynamic.len(),
        "transitions": records.len(),
        "skipped_zero_radius": skipped,
        "rank_semantics": "rank counts samples strictly closer than the observed successor; ties do not raise the rank",
        "sampling": "uniform over vertex-pair subsets at the observed radius, with replacement",
        "percentiles": "nearest-rank p5/p50/p95 of the sample distances",
        "out_dir": args.out_dir.display().to_string(),
        "version": env!("CARGO_PKG_VERSION"),
    });
    write_file(
        &args.out_dir.join("run.json"),
        &format!("{:#}\n", run),
    )?;

    println!(
        "wrote records.csv and cdf.csv for {} transitions ({} skipped) to {}",
        records.len(),
        skipped,
        args.out_dir.display()
    );
    Ok(())
}

/// Installation checks, small enough to finish in seconds: the exact
/// distance must be a metric on the 4-vertex layer, and every single-edge
/// removal on a batch of random graphs must move every centrality.
fn cmd_selftest() -> CliResult {
    const TOL: f64 = 1e-9;

    let mg = MetagraphIndex::canonical(4)?;
    let n = mg.node_count() as usize;
    for kind in [
        CentralityKind::Degree,
        CentralityKind::Betweenness,
        CentralityKind::Closeness,
    ] {
        let d = exact_distance_matrix(kind, &mg, 4)?;
        for i in 0..n {
            for j in 0..n {
                let separated = if i == j { d[i][j].abs() <= TOL } else { d[i][j] > TOL };
                if !separated || (d[i][j] - d[j][i]).abs() > TOL {
                    return Err(CliError::Check(format!(
                        "metric axioms fail for {kind} at pair ({i},{j}): d={}",
                        d[i][j]
                    )));
                }
                for k in 0..n {
                    if d[i][k] > d[i][j] + d[j][k] + TOL {
                        return Err(CliError::Check(format!(
                            "triangle inequality fails for {kind} at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        println!("metric axioms on the 4-vertex layer ({kind}): ok");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for case in 0..200 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.15..0.9);
        let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((vertices[i].clone(), vertices[j].clone()));
                }
            }
        }
        let g = NamedGraph::from_parts(vertices, edges)?;
        for kind in [
            CentralityKind::Degree,
            CentralityKind::Betweenness,
            CentralityKind::Closeness,
        ] {
            if let Some(edge) = sensitivity(kind, &g).witness() {
                return Err(CliError::Check(format!(
                    "sensitivity fails for {kind} on random graph {case}: removing {edge} changes nothing"
                )));
            }
        }
    }
    println!("sensitivity on 200 random graphs x 3 centralities: ok");

    println!("selftest: ok");
    Ok(())
}
