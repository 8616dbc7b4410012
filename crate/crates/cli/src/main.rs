use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphtoric::blocks::{block_decomposition, BlockKind};
use graphtoric::circuits::{circuit_binomial, enumerate_circuit_subgraphs, odd_cactus_optimum};
use graphtoric::fixtures::{fixture, FIXTURE_NAMES};
use graphtoric::graver::circuits_bruteforce;
use graphtoric::grn::{build_grn, separation_report, GrnParams, ReportOptions};
use graphtoric::lattice::{circuit_index, true_degree};
use graphtoric::primitivity::is_primitive_subgraph;
use graphtoric::registry::{circuit_strategy, graver_engine, GraverInput};
use graphtoric::toric::{incidence_configuration, Binomial, ToricConfiguration};
use graphtoric::{Error, Graph, Limits};

/// Toric ideals of graphs: circuits, Graver bases and the odd cactus family.
///
/// Enumeration caps come from GRAPHTORIC_LIMITS, e.g.
/// `GRAPHTORIC_LIMITS=cycles=100000,subgraphs=65536,insertions=1000000,subsets=1000000`.
#[derive(Parser)]
#[command(name = "graphtoric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write G_r^n, or a bundled fixture, in the edge-list format.
    GenGrn(GenGrnArgs),
    /// Blocks, cut vertices and block-tree edges.
    Blocks(GraphSource),
    /// Circuits of the graph's toric ideal.
    Circuits(CircuitsArgs),
    /// Graver basis of a graph or of a matrix configuration.
    Graver(GraverArgs),
    /// Decide whether the whole graph is the support of a primitive walk.
    PrimitiveCheck(GraphSource),
    /// Degree, index and true degree of one circuit.
    Index(IndexArgs),
    /// Graver degree against circuit degree along G_r^n.
    Report(ReportArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Edge-list file: one `u v` pair per line, `#` comments.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    file: Option<PathBuf>,
    /// Use a bundled graph instead of a file.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
struct GenGrnArgs {
    #[arg(long, required_unless_present = "fixture", requires = "r")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    r: Option<usize>,
    #[arg(long, conflicts_with_all = ["n", "r"])]
    fixture: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CircuitsArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Print only `t = <largest circuit degree>`.
    #[arg(long)]
    max_degree_only: bool,
    /// Strategy for --max-degree-only.
    #[arg(long, default_value = "enumerate")]
    strategy: String,
    /// Shorthand for --strategy cactus.
    #[arg(long)]
    cactus_fast: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GraverArgs {
    /// Graph file, or a matrix file with --matrix.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    file: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    /// Read FILE as a matrix: `rows cols` then the entries row by row.
    #[arg(long)]
    matrix: bool,
    #[arg(long, default_value = "graph")]
    engine: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct IndexArgs {
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    file: Option<PathBuf>,
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    matrix: bool,
    /// Circuit number as listed by `circuits` (from 1).
    #[arg(long)]
    circuit: usize,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    rmax: usize,
    /// Cross-check t and primitivity by full enumeration up to this r.
    #[arg(long, default_value_t = 2)]
    verify_up_to: usize,
    /// Cross-check primitivity with the completion engine up to this r.
    #[arg(long, default_value_t = 1)]
    completion_up_to: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Csv,
}

enum Failure {
    /// Bad invocation, unreadable or malformed input.
    Usage(String),
    /// The computation itself failed or the answer is negative.
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn named_fixture(name: &str) -> Result<Graph, Failure> {
    fixture(name).ok_or_else(|| {
        Failure::Usage(format!("unknown fixture {name:?}; available: {}", FIXTURE_NAMES.join(", ")))
    })
}

fn load_graph(file: Option<&Path>, fixture: Option<&str>) -> Result<Graph, Failure> {
    match (file, fixture) {
        (_, Some(name)) => named_fixture(name),
        (Some(path), None) => Ok(Graph::parse(&read(path)?)?),
        (None, None) => Err(Failure::Usage("no input graph".into())),
    }
}

fn load_matrix(file: Option<&Path>) -> Result<ToricConfiguration, Failure> {
    let path = file.ok_or_else(|| Failure::Usage("--matrix needs a file".into()))?;
    Ok(ToricConfiguration::parse(&read(path)?)?)
}

fn edge_name(e: usize) -> String {
    format!("e{}", e + 1)
}

fn gen_grn(args: GenGrnArgs) -> Outcome {
    let g = match (&args.fixture, args.n, args.r) {
        (Some(name), _, _) => named_fixture(name)?,
        (None, Some(n), Some(r)) => build_grn(GrnParams::new(n, r)?),
        _ => return Err(Failure::Usage("give --n and --r, or --fixture".into())),
    };
    let text = g.to_text();
    match args.out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(format!("wrote {} vertices, {} edges to {}\n", g.vertex_count(), g.edge_count(), path.display()))
        }
        None => Ok(text),
    }
}

fn blocks(src: GraphSource) -> Outcome {
    let g = load_graph(src.file.as_deref(), src.fixture.as_deref())?;
    let d = block_decomposition(&g)?;
    let tree = d.block_tree();
    let mut out = String::new();
    for (i, b) in d.blocks.iter().enumerate() {
        let kind = match b.kind {
            BlockKind::Cycle => "cycle",
            BlockKind::CutEdge => "cut-edge",
            BlockKind::Other => "other",
        };
        let edges: Vec<String> = b.edges.iter().map(|&e| edge_name(e)).collect();
        let vertices: Vec<&str> = b.vertices.iter().map(|&v| g.label(v)).collect();
        out += &format!("B{}: {kind}, edges {}, vertices {}\n", i + 1, edges.join(" "), vertices.join(" "));
    }
    let cuts: Vec<&str> = d.cut_vertices.iter().map(|&v| g.label(v)).collect();
    out += &format!("cut vertices: {}\n", cuts.join(" "));
    let links: Vec<String> = tree.edges().iter().map(|&(b, v)| format!("B{}-{}", b + 1, g.label(v))).collect();
    out += &format!("tree edges: {}\n", links.join(" "));
    out += &format!(
        "{} blocks, {} cut vertices, max block distance {}\n",
        d.blocks.len(),
        d.cut_vertices.len(),
        tree.max_block_distance()
    );
    Ok(out)
}

fn circuits(args: CircuitsArgs, limits: &Limits) -> Outcome {
    let g = load_graph(args.source.file.as_deref(), args.source.fixture.as_deref())?;
    let strategy = if args.cactus_fast { "cactus" } else { args.strategy.as_str() };
    if args.max_degree_only {
        let t = circuit_strategy(strategy).map_err(|e| Failure::Usage(e.to_string()))?.max_degree(&g, limits)?;
        let mut out = format!("t = {t}\n");
        if strategy == "cactus" {
            if let Some((a, b)) = odd_cactus_optimum(&g)?.witness {
                out += &format!("attained by blocks B{} and B{}\n", a + 1, b + 1);
            }
        }
        return Ok(out);
    }
    let mut out = String::new();
    let mut t = 0;
    for (k, c) in enumerate_circuit_subgraphs(&g, limits)?.iter().enumerate() {
        let b = circuit_binomial(c, &g)?;
        t = t.max(b.degree());
        out += &match args.format {
            Format::Text => format!("{}\t{}\tdegree {}\t{b}\n", k + 1, c.kind.tag(), b.degree()),
            Format::Json => format!("{}\n", b.to_json()),
        };
    }
    if let Format::Text = args.format {
        out += &format!("t = {t}\n");
    }
    Ok(out)
}

fn graver(args: GraverArgs, limits: &Limits) -> Outcome {
    let engine = graver_engine(&args.engine).map_err(|e| Failure::Usage(e.to_string()))?;
    let set = if args.matrix {
        let a = load_matrix(args.file.as_deref())?;
        engine.graver(GraverInput::Matrix(&a), limits)?
    } else {
        let g = load_graph(args.file.as_deref(), args.fixture.as_deref())?;
        engine.graver(GraverInput::Graph(&g), limits)?
    };
    let mut out = String::new();
    for b in set.iter() {
        out += &match args.format {
            Format::Text => format!("degree {}\t{b}\n", b.degree()),
            Format::Json => format!("{}\n", b.to_json()),
        };
    }
    if let Format::Text = args.format {
        out += &format!("{} elements, max degree {}\n", set.len(), set.max_degree());
    }
    Ok(out)
}

fn primitive_check(src: GraphSource) -> Outcome {
    let g = load_graph(src.file.as_deref(), src.fixture.as_deref())?;
    let verdict = is_primitive_subgraph(&g)?;
    if !verdict.primitive {
        return Err(Failure::Domain(format!("not primitive: {}", verdict.reason)));
    }
    Ok(format!("primitive: {}\n", verdict.reason))
}

fn index(args: IndexArgs, limits: &Limits) -> Outcome {
    let (circuits, a): (Vec<Binomial>, ToricConfiguration) = if args.matrix {
        let a = load_matrix(args.file.as_deref())?;
        (circuits_bruteforce(&a, limits)?.into_iter().collect(), a)
    } else {
        let g = load_graph(args.file.as_deref(), args.fixture.as_deref())?;
        let list = enumerate_circuit_subgraphs(&g, limits)?
            .iter()
            .map(|c| circuit_binomial(c, &g))
            .collect::<graphtoric::Result<_>>()?;
        (list, incidence_configuration(&g))
    };
    let k = args.circuit;
    if k == 0 || k > circuits.len() {
        return Err(Failure::Usage(format!("--circuit must be between 1 and {}", circuits.len())));
    }
    let c = &circuits[k - 1];
    Ok(format!(
        "circuit {k}: {c}\ndegree = {}\nindex = {}\ntrue degree = {}\n",
        c.degree(),
        circuit_index(c, &a)?,
        true_degree(c, &a)?
    ))
}

fn report(args: ReportArgs, limits: &Limits) -> Outcome {
    let options = ReportOptions { verify_up_to: args.verify_up_to, completion_up_to: args.completion_up_to };
    let report = separation_report(args.n, args.rmax, options, limits)?;
    Ok(match args.format {
        ReportFormat::Table => report.to_table(),
        ReportFormat::Csv => report.to_csv(),
    })
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env().map_err(|e| Failure::Usage(e.to_string()))?;
    match cli.command {
        Command::GenGrn(a) => gen_grn(a),
        Command::Blocks(a) => blocks(a),
        Command::Circuits(a) => circuits(a, &limits),
        Command::Graver(a) => graver(a, &limits),
        Command::PrimitiveCheck(a) => primitive_check(a),
        Command::Index(a) => index(a, &limits),
        Command::Report(a) => report(a, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
