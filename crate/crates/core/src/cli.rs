//! Command-line entry points: solve, oracle, gen, check, and bench.
//!
//! Graph files are plain text: one `n m` header line, then `m` lines `u v`
//! with vertices in `0..n`; `#` starts a comment. Exit codes: 0 success,
//! 2 parse failure, 3 graph outside the solver domain, 4 graph too large
//! for the oracle, 5 invalid or too-long walk.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::multigraph::{ConnectivityClass, EdgeId, Multigraph, Vertex};
use crate::walk::TspWalk;
use crate::{approx, generators, oracle, walk};

/// Errors from CLI commands, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input file or arguments (exit 2).
    #[error("{0}")]
    Parse(String),
    /// Input graph outside the solver domain (exit 3).
    #[error("{0}")]
    Domain(String),
    /// Graph too large for exhaustive search (exit 4).
    #[error("{0}")]
    TooLarge(String),
    /// Invalid or bound-violating walk (exit 5).
    #[error("{0}")]
    Invalid(String),
    /// Filesystem failure (exit 2).
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Domain(_) => 3,
            CliError::TooLarge(_) => 4,
            CliError::Invalid(_) => 5,
        }
    }
}

/// Bounded TSP walks on subcubic graphs via even covers.
#[derive(Parser)]
#[command(name = "subcubic-tsp", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a bounded spanning closed walk for a graph file.
    Solve(SolveArgs),
    /// Exact excess values by exhaustive search (small graphs).
    Oracle(OracleArgs),
    /// Generate a test graph.
    Gen(GenArgs),
    /// Verify a solve output against its graph.
    Check(CheckArgs),
    /// Time the solver on the extremal family.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file.
    graph: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    /// Graph file.
    graph: PathBuf,
    /// Also report per-edge values for the edge with these two endpoints.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    edge: Option<Vec<Vertex>>,
    /// Vertex-count limit (default: ORACLE_LIMIT env var, then 16).
    #[arg(long)]
    limit: Option<usize>,
    /// Ignore the vertex-count limit.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Family: k4, diamond, petersen, prism, cube, cycle, theta, k23,
    /// random.
    family: String,
    /// Size parameter (cycle/random: n, theta: interior vertices per path,
    /// k23: growth steps).
    param: Option<usize>,
    /// Seed for the randomized families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Graph file.
    graph: PathBuf,
    /// Output of `solve` for that graph.
    solution: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Target sizes, mapped to the nearest extremal-family member.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    sizes: Vec<usize>,
    /// Seed for the family construction.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Runs a parsed command and returns its stdout payload.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Solve(a) => cmd_solve(&a.graph),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Check(a) => cmd_check(&a.graph, &a.solution),
        Command::Bench(a) => cmd_bench(&a),
    }
}

/// Parses the graph file format.
pub fn parse_graph(text: &str) -> Result<Multigraph, CliError> {
    let mut rows: Vec<(u32, u32)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<u32> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Parse(format!("line {}: expected integers", i + 1)))?;
        if nums.len() != 2 {
            return Err(CliError::Parse(format!(
                "line {}: expected two integers, found {}",
                i + 1,
                nums.len()
            )));
        }
        rows.push((nums[0], nums[1]));
    }
    let Some(&(n, m)) = rows.first() else {
        return Err(CliError::Parse("empty graph file".into()));
    };
    let edges = &rows[1..];
    if edges.len() != m as usize {
        return Err(CliError::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Multigraph::build(n as usize, edges).map_err(|e| CliError::Parse(e.to_string()))
}

/// Serializes a graph in the file format, edges in id order.
pub fn format_graph(g: &Multigraph) -> String {
    let mut lines = vec![format!("{} {}", g.n(), g.m())];
    for (_, (u, v)) in g.edges() {
        lines.push(format!("{u} {v}"));
    }
    lines.join("\n") + "\n"
}

fn load_graph(path: &Path) -> Result<Multigraph, CliError> {
    parse_graph(&fs::read_to_string(path)?)
}

fn domain_check(g: &Multigraph) -> Result<(), CliError> {
    if !g.is_simple() {
        return Err(CliError::Domain("graph is not simple".into()));
    }
    if !g.is_subcubic() {
        return Err(CliError::Domain("graph is not subcubic".into()));
    }
    if g.connectivity_class() != ConnectivityClass::TwoConnected {
        return Err(CliError::Domain("graph is not 2-connected".into()));
    }
    Ok(())
}

/// `(5n + n2)/4 - 1` reduced; integral or exact halves on domain graphs.
fn exact_bound(n: usize, n2: usize) -> String {
    let num = (5 * n + n2) as i64 - 4;
    if num % 4 == 0 {
        format!("{}", num / 4)
    } else if num % 2 == 0 {
        format!("{}/2", num / 2)
    } else {
        format!("{num}/4")
    }
}

fn cmd_solve(path: &Path) -> Result<String, CliError> {
    let g = load_graph(path)?;
    domain_check(&g)?;
    let f = approx::solve(&g).expect("domain was checked");
    let w = walk::cover_to_walk(&g, &f).expect("solver covers span the graph");
    let (n, n2, _) = g.degree_profile();
    let bound = (5 * n + n2) / 4 - 1;
    let mut lines = vec![f.render(&g), w.render()];
    lines.push(format!(
        "n={n} n2={n2} exc={} walk_len={} bound={bound}",
        f.exc(),
        w.length()
    ));
    lines.push(format!("bound_exact={}", exact_bound(n, n2)));
    Ok(lines.join("\n"))
}

fn ids(list: &[EdgeId]) -> String {
    list.iter().map(|e| e.0.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_oracle(args: &OracleArgs) -> Result<String, CliError> {
    let g = load_graph(&args.graph)?;
    // The oracle accepts multigraphs but still insists on 2-connectivity;
    // excess values on separable graphs are outside its contract.
    if matches!(
        g.connectivity_class(),
        ConnectivityClass::Disconnected | ConnectivityClass::HasCutVertex
    ) {
        return Err(CliError::Domain("graph is not 2-connected".into()));
    }
    let limit = if args.force {
        usize::MAX
    } else if let Some(l) = args.limit {
        l
    } else if let Ok(text) = std::env::var("ORACLE_LIMIT") {
        text.parse()
            .map_err(|_| CliError::Parse("ORACLE_LIMIT must be an integer".into()))?
    } else {
        oracle::DEFAULT_LIMIT
    };
    let edge = match &args.edge {
        None => None,
        Some(pair) => {
            let (u, v) = (pair[0], pair[1]);
            if !g.has_vertex(u) || !g.has_vertex(v) {
                return Err(CliError::Parse(format!("no edge joins {u} and {v}")));
            }
            // Parallel edges are interchangeable here; take the smallest id.
            let Some(id) = g.edges_between(u, v).into_iter().min() else {
                return Err(CliError::Parse(format!("no edge joins {u} and {v}")));
            };
            Some(id)
        }
    };
    let report = oracle::exact_with_limit(&g, edge, limit).map_err(|err| match err {
        oracle::OracleError::TooLarge { .. } => CliError::TooLarge(err.to_string()),
        oracle::OracleError::Disconnected => CliError::Domain(err.to_string()),
    })?;

    let mut lines = vec![format!("exc={}", report.exc)];
    lines.push(format!("witness={}", ids(&report.witness)));
    if edge.is_some() {
        let opt = |v: Option<i64>| v.map_or("none".into(), |x| x.to_string());
        let half = |v: Option<crate::Half>| v.map_or("none".into(), |x| x.to_string());
        lines.push(format!(
            "exc_with={} exc_without={} delta={} delta_hat={}",
            opt(report.exc_with),
            opt(report.exc_without),
            half(report.delta),
            half(report.delta_hat)
        ));
        if let Some(w) = &report.witness_with {
            lines.push(format!("witness_with={}", ids(w)));
        }
        if let Some(w) = &report.witness_without {
            lines.push(format!("witness_without={}", ids(w)));
        }
    }
    Ok(lines.join("\n"))
}

fn cmd_gen(args: &GenArgs) -> Result<String, CliError> {
    let param = |name: &str| -> Result<usize, CliError> {
        args.param
            .ok_or_else(|| CliError::Parse(format!("family {name} needs a size parameter")))
    };
    let fixed = |name: &str, g: Multigraph| -> Result<Multigraph, CliError> {
        match args.param {
            Some(_) => Err(CliError::Parse(format!(
                "family {name} takes no size parameter"
            ))),
            None => Ok(g),
        }
    };
    let gen_err = |e: generators::GenError| CliError::Parse(e.to_string());
    let g = match args.family.as_str() {
        "k4" => fixed("k4", generators::k4())?,
        "diamond" => fixed("diamond", generators::diamond())?,
        "petersen" => fixed("petersen", generators::petersen())?,
        "prism" => fixed("prism", generators::prism())?,
        "cube" => fixed("cube", generators::cube())?,
        "cycle" => generators::cycle(param("cycle")?).map_err(gen_err)?,
        "theta" => generators::theta(param("theta")?).map_err(gen_err)?,
        "k23" => generators::k23_constructible(param("k23")?, args.seed),
        "random" => {
            generators::random_two_connected_subcubic(param("random")?, args.seed)
                .map_err(gen_err)?
        }
        other => return Err(CliError::Parse(format!("unknown family: {other}"))),
    };
    let text = format_graph(&g);
    match &args.out {
        Some(path) => {
            fs::write(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn cmd_check(graph: &Path, solution: &Path) -> Result<String, CliError> {
    let g = load_graph(graph)?;
    domain_check(&g)?;
    let text = fs::read_to_string(solution)?;
    let mut walks: Vec<Vec<Vertex>> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Ok(seq) = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Vertex>, _>>()
        {
            walks.push(seq);
        }
    }
    if walks.len() != 1 {
        return Err(CliError::Parse(format!(
            "solution must contain exactly one all-integer walk line, found {}",
            walks.len()
        )));
    }
    let vertices = walks.pop().expect("length was checked");
    let mut edges = Vec::new();
    for pair in vertices.windows(2) {
        if !g.has_vertex(pair[0]) || !g.has_vertex(pair[1]) {
            return Err(CliError::Invalid(format!(
                "walk visits unknown vertex {} or {}",
                pair[0], pair[1]
            )));
        }
        let Some(&id) = g.edges_between(pair[0], pair[1]).first() else {
            return Err(CliError::Invalid(format!(
                "walk step {}-{} is not an edge",
                pair[0], pair[1]
            )));
        };
        edges.push(id);
    }
    let w = TspWalk { vertices, edges };
    let len = walk::validate_walk(&g, &w).map_err(|e| CliError::Invalid(e.to_string()))?;
    let (n, n2, _) = g.degree_profile();
    let bound = (5 * n + n2) / 4 - 1;
    if len > bound {
        return Err(CliError::Invalid(format!(
            "walk length {len} exceeds the bound {bound}"
        )));
    }
    Ok(format!("ok walk_len={len} bound={bound}"))
}

fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let mut lines = Vec::new();
    let mut prev: Option<f64> = None;
    for &size in &args.sizes {
        if size < 5 {
            return Err(CliError::Parse("bench sizes start at 5".into()));
        }
        let steps = (size - 5) / 3;
        let g = generators::k23_constructible(steps, args.seed);
        let start = Instant::now();
        let mut reps = 0u32;
        loop {
            let f = approx::solve(&g).expect("generated graphs are in domain");
            std::hint::black_box(f.exc());
            reps += 1;
            if start.elapsed().as_millis() >= 50 || reps >= 16 {
                break;
            }
        }
        let avg = start.elapsed().as_secs_f64() * 1000.0 / f64::from(reps);
        let mut line = format!("n={} m={} reps={reps} avg_ms={avg:.3}", g.n(), g.m());
        if let Some(p) = prev {
            line.push_str(&format!(" ratio={:.2}", avg / p));
        }
        lines.push(line);
        prev = Some(avg);
    }
    Ok(lines.join("\n"))
}
