//! The `hfree` command line: every command prints one JSON report on
//! stdout; diagnostics go to stderr.
//!
//! Exit status is 0 on success (including negative answers), 1 when a
//! search gives up or a certificate fails, and 2 for usage, I/O and parse
//! errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::extremal::{verify_sesc, ExtremalError};
use crate::factor::{max_degree_constrained_subgraph, DegreeBudget};
use crate::generate::{all_graphs, candidate_trees, MAX_GENERATION_N};
use crate::graph::complement_components;
use crate::graph::Graph;
use crate::io::{parse_graph, to_graph6, GraphFormat};
use crate::matching::max_matching;
use crate::oracle::{rem_exact, OracleError, SearchLimits, DEFAULT_NODE_LIMIT};
use crate::reductions::{
    contains_balanced_biclique, disjoint_pad, has_clique_factor, pendant_expand, Construction,
    ReductionError,
};
use crate::starforest::{
    ex_star_forest_with, StarForestError, StarForestOptions, DEFAULT_ENUMERATION_CEILING,
};
use crate::subgraph::contains_subgraph;
use crate::tree::{classify_tree, decompose_star_forest};

/// Oracle runs on hosts with more edges than this need `--budget` or
/// `--yes-exponential`.
pub const EXPONENTIAL_EDGE_THRESHOLD: usize = 40;

pub const NODE_LIMIT_ENV: &str = "HFREE_NODE_LIMIT";
pub const ENUMERATION_CEILING_ENV: &str = "HFREE_ENUMERATION_CEILING";

#[derive(Debug, Parser)]
#[command(
    name = "hfree",
    version,
    about = "Edge deletion to H-freeness: exact solvers and checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum edge deletions making the graph free of the pattern.
    Rem(DeletionArgs),
    /// Largest pattern-free subgraph.
    Ex(DeletionArgs),
    /// Maximum matching.
    Matching(GraphArgs),
    /// Largest subgraph with degrees bounded by a budget.
    Factor(FactorArgs),
    /// Build a reduction instance.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Polynomial decision procedures.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Exhaustively test the strong Erdős–Sós property of a tree on n vertices.
    VerifySesc(SescArgs),
    /// List nonisomorphic trees on k vertices.
    GenTrees(GenTreesArgs),
    /// Compare the star-forest solver with the oracle on every small graph.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph file (graph6 or edge list); `-` reads stdin.
    #[arg(long)]
    pub graph: PathBuf,
    /// Input format; guessed from the extension or content when omitted.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<GraphFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Oracle,
    Starforest,
    Factor,
}

#[derive(Debug, Args)]
pub struct DeletionArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Pattern file, same formats as the graph.
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Oracle only: stop once rem is known to exceed this.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Allow an unbudgeted oracle run on a large host.
    #[arg(long)]
    pub yes_exponential: bool,
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[command(flatten)]
    pub input: GraphArgs,
    /// Budget file: one `vertex value` pair per line, every vertex listed once.
    #[arg(
        long = "f",
        conflicts_with = "f_const",
        required_unless_present = "f_const"
    )]
    pub f_file: Option<PathBuf>,
    /// The same budget at every vertex.
    #[arg(long)]
    pub f_const: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum ReduceCommand {
    /// Attach private pendant leaves to every vertex (tree of diameter >= 5).
    Pendant {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        tree: PathBuf,
        /// Check the identity with the oracle on both sides.
        #[arg(long)]
        validate: bool,
    },
    /// Pad with disjoint copies of the non-dominant pattern components.
    Pad {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        validate: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Does the graph contain K_{⌊n/2⌋,⌈n/2⌉}?
    Biclique(GraphArgs),
    /// Can the vertices be split into cliques of size q?
    CliqueFactor {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Debug, Args)]
pub struct SescArgs {
    #[arg(long)]
    pub tree: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<GraphFormat>,
}

#[derive(Debug, Args)]
pub struct GenTreesArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub max_diameter: Option<usize>,
    #[arg(long)]
    pub non_star: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Largest host vertex count.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Star-forest pattern file.
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<GraphFormat>,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// The computation ran but could not produce an answer.
    Gave(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Gave(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Gave(m) => f.write_str(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Gave(e.to_string())
    }
}

impl From<StarForestError> for CliError {
    fn from(e: StarForestError) -> Self {
        match e {
            StarForestError::Shape(_) => CliError::Usage(e.to_string()),
            _ => CliError::Gave(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Oracle(_) => CliError::Gave(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

struct Inputs {
    stdin_used: bool,
    fingerprints: serde_json::Map<String, Value>,
}

impl Inputs {
    fn new() -> Self {
        Inputs {
            stdin_used: false,
            fingerprints: serde_json::Map::new(),
        }
    }

    fn read_text(&mut self, path: &Path) -> CliResult<String> {
        if path == Path::new("-") {
            if self.stdin_used {
                return Err(CliError::Usage("stdin can supply only one input".into()));
            }
            self.stdin_used = true;
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
            return Ok(text);
        }
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    fn graph(&mut self, role: &str, path: &Path, format: Option<GraphFormat>) -> CliResult<Graph> {
        let text = self.read_text(path)?;
        let format = format
            .or_else(|| GraphFormat::from_path(path))
            .unwrap_or_else(|| GraphFormat::sniff(&text));
        let g = parse_graph(&text, format)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        self.fingerprints.insert(role.into(), fingerprint(&g));
        Ok(g)
    }
}

fn fingerprint(g: &Graph) -> Value {
    let g6 = to_graph6(g);
    let digest = Sha256::digest(g6.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    json!({ "graph6": g6, "sha256": hex, "n": g.n(), "edges": g.edge_count() })
}

fn env_u64(name: &str) -> CliResult<Option<u64>> {
    match std::env::var(name) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Usage(format!("{name} must be a nonnegative integer, got `{v}`"))
        }),
        Err(_) => Ok(None),
    }
}

fn oracle_limits(budget: Option<usize>) -> CliResult<SearchLimits> {
    Ok(SearchLimits {
        budget,
        node_limit: Some(env_u64(NODE_LIMIT_ENV)?.unwrap_or(DEFAULT_NODE_LIMIT)),
    })
}

fn starforest_options() -> CliResult<StarForestOptions> {
    Ok(StarForestOptions {
        ceiling: env_u64(ENUMERATION_CEILING_ENV)?.unwrap_or(DEFAULT_ENUMERATION_CEILING),
        ..Default::default()
    })
}

/// What a command produced, before the envelope is added.
struct Outcome {
    method: Option<&'static str>,
    result: Value,
    counters: Value,
}

impl Outcome {
    fn plain(result: Value) -> Self {
        Outcome {
            method: None,
            result,
            counters: json!({}),
        }
    }
}

fn certify(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Gave(format!("certificate check failed: {what}")))
    }
}

fn check_witness(g: &Graph, h: &Graph, witness: &Graph, ex: usize) -> CliResult<()> {
    certify(
        witness.n() == g.n()
            && witness.edge_count() == ex
            && witness.edges().all(|(u, v)| g.has_edge(u, v))
            && contains_subgraph(witness, h).is_none(),
        "witness is not a pattern-free subgraph with the reported edge count",
    )
}

fn deletion(args: &DeletionArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let g = inputs.graph("graph", &args.input.graph, args.input.format)?;
    let h = inputs.graph("pattern", &args.pattern, args.input.format)?;
    let star_forest = decompose_star_forest(&h).ok();
    let method = match args.method {
        Method::Auto if star_forest.is_some() => Method::Starforest,
        Method::Auto => Method::Oracle,
        m => m,
    };
    match method {
        Method::Starforest => {
            if star_forest.is_none() {
                return Err(CliError::Usage(
                    "--method starforest needs a star-forest pattern".into(),
                ));
            }
            let r = ex_star_forest_with(&g, &h, &starforest_options()?)?;
            check_witness(&g, &h, &r.witness, r.ex)?;
            Ok(Outcome {
                method: Some("starforest"),
                result: json!({
                    "rem": r.rem,
                    "ex": r.ex,
                    "witness_graph6": to_graph6(&r.witness),
                    "branch_trace": r.branch_trace,
                }),
                counters: json!({ "branch_steps": r.branch_trace.len() }),
            })
        }
        Method::Factor => {
            let spec = star_forest.filter(|s| s.r() == 1).ok_or_else(|| {
                CliError::Usage("--method factor needs a single-star pattern".into())
            })?;
            if g.n() < h.n() {
                return Err(CliError::Usage(
                    "--method factor needs a host at least as large as the pattern".into(),
                ));
            }
            let t = spec.leaves()[0];
            let r = max_degree_constrained_subgraph(&g, &DegreeBudget::constant(g.n(), t - 1))
                .map_err(|e| CliError::Gave(e.to_string()))?;
            let witness = g.spanning_subgraph(&r.edges);
            check_witness(&g, &h, &witness, r.m)?;
            Ok(Outcome {
                method: Some("factor"),
                result: json!({
                    "rem": g.edge_count() - r.m,
                    "ex": r.m,
                    "witness_graph6": to_graph6(&witness),
                }),
                counters: json!({ "gadget_vertices": r.gadget_vertices, "gadget_matching": r.gadget_matching }),
            })
        }
        Method::Oracle | Method::Auto => {
            if args.budget.is_none()
                && !args.yes_exponential
                && g.edge_count() > EXPONENTIAL_EDGE_THRESHOLD
            {
                return Err(CliError::Usage(format!(
                    "the oracle is exponential and the graph has {} > {EXPONENTIAL_EDGE_THRESHOLD} edges; \
                     pass --budget B or --yes-exponential",
                    g.edge_count()
                )));
            }
            eprintln!("warning: pattern is not a star forest or the oracle was requested; using exponential-time search");
            let r = rem_exact(&g, &h, oracle_limits(args.budget)?)?;
            check_witness(&g, &h, &r.witness, r.ex)?;
            Ok(Outcome {
                method: Some("oracle"),
                result: json!({
                    "rem": r.rem,
                    "ex": r.ex,
                    "deleted_edges": r.deleted_edges,
                    "witness_graph6": to_graph6(&r.witness),
                }),
                counters: json!({ "nodes": r.nodes }),
            })
        }
    }
}

fn read_budget(text: &str, n: usize) -> CliResult<DegreeBudget> {
    let mut values: Vec<Option<usize>> = vec![None; n];
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || {
            CliError::Usage(format!(
                "budget line {}: expected `vertex value`, got `{line}`",
                no + 1
            ))
        };
        let mut parts = line.split_whitespace();
        let (Some(v), Some(f), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let v: usize = v.parse().map_err(|_| bad())?;
        let f: usize = f.parse().map_err(|_| bad())?;
        if v >= n {
            return Err(CliError::Usage(format!(
                "budget line {}: vertex {v} out of range",
                no + 1
            )));
        }
        if values[v].replace(f).is_some() {
            return Err(CliError::Usage(format!(
                "budget line {}: vertex {v} listed twice",
                no + 1
            )));
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(v, f)| f.ok_or_else(|| CliError::Usage(format!("budget is missing vertex {v}"))))
        .collect::<CliResult<Vec<_>>>()
        .map(DegreeBudget::new)
}

fn factor(args: &FactorArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let g = inputs.graph("graph", &args.input.graph, args.input.format)?;
    let f = match (&args.f_file, args.f_const) {
        (Some(path), _) => read_budget(&inputs.read_text(path)?, g.n())?,
        (None, Some(k)) => DegreeBudget::constant(g.n(), k),
        (None, None) => unreachable!("clap requires one budget source"),
    };
    let r = max_degree_constrained_subgraph(&g, &f).map_err(|e| CliError::Usage(e.to_string()))?;
    let sub = g.spanning_subgraph(&r.edges);
    certify(
        (0..g.n()).all(|v| sub.degree(v) <= f.get(v)) && r.gadget_matching == r.m + r.slack_total,
        "degree budget or gadget identity violated",
    )?;
    Ok(Outcome {
        method: Some("factor"),
        result: json!({ "m": r.m, "edges": r.edges, "subgraph_graph6": to_graph6(&sub) }),
        counters: json!({
            "gadget_vertices": r.gadget_vertices,
            "gadget_matching": r.gadget_matching,
            "slack_total": r.slack_total,
        }),
    })
}

fn reduce(cmd: &ReduceCommand, inputs: &mut Inputs) -> CliResult<Outcome> {
    let (inst, validate) = match cmd {
        ReduceCommand::Pendant {
            input,
            tree,
            validate,
        } => {
            let g = inputs.graph("graph", &input.graph, input.format)?;
            let t = inputs.graph("tree", tree, input.format)?;
            let spec = classify_tree(&t).map_err(|e| CliError::Usage(e.to_string()))?;
            (pendant_expand(&g, &spec)?, *validate)
        }
        ReduceCommand::Pad {
            input,
            pattern,
            validate,
        } => {
            let g = inputs.graph("graph", &input.graph, input.format)?;
            let h = inputs.graph("pattern", pattern, input.format)?;
            (disjoint_pad(&g, &h)?, *validate)
        }
    };
    let params = match &inst.construction {
        Construction::Pendant {
            core,
            leaf_set_size,
            ..
        } => json!({
            "core_graph6": to_graph6(core.graph()),
            "leaf_set_size": leaf_set_size,
        }),
        Construction::Pad {
            dominant,
            multiplicity,
            padding,
            copies,
            ..
        } => json!({
            "dominant_graph6": to_graph6(dominant),
            "multiplicity": multiplicity,
            "padding_graph6": padding.iter().map(to_graph6).collect::<Vec<_>>(),
            "copies": copies,
        }),
    };
    let mut result = json!({
        "kind": inst.kind(),
        "constructed_graph6": to_graph6(&inst.constructed),
        "constructed_vertices": inst.constructed.n(),
        "constructed_edges": inst.constructed.edge_count(),
        "params": params,
    });
    if validate {
        let check = inst.validate(oracle_limits(None)?)?;
        let holds = check.holds;
        result["validation"] = json!(check);
        if !holds {
            return Err(CliError::Gave(format!(
                "reduction identity failed: {result}"
            )));
        }
    }
    Ok(Outcome {
        method: validate.then_some("oracle"),
        result,
        counters: json!({}),
    })
}

fn check(cmd: &CheckCommand, inputs: &mut Inputs) -> CliResult<Outcome> {
    match cmd {
        CheckCommand::Biclique(input) => {
            let g = inputs.graph("graph", &input.graph, input.format)?;
            Ok(Outcome::plain(json!({
                "contains": contains_balanced_biclique(&g),
                "complement_components": complement_components(&g),
            })))
        }
        CheckCommand::CliqueFactor { input, q } => {
            let g = inputs.graph("graph", &input.graph, input.format)?;
            Ok(Outcome::plain(
                json!({ "q": q, "has_factor": has_clique_factor(&g, *q)? }),
            ))
        }
    }
}

fn sesc(args: &SescArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    let t = inputs.graph("tree", &args.tree, args.format)?;
    let spec = classify_tree(&t).map_err(|e| CliError::Usage(e.to_string()))?;
    let v = verify_sesc(&spec, args.n, args.jobs)?;
    let counters = json!({ "t_free_graphs": v.t_free_graphs });
    Ok(Outcome {
        method: None,
        result: json!(v),
        counters,
    })
}

fn gen_trees(args: &GenTreesArgs) -> CliResult<Outcome> {
    if args.k == 0 || args.k > MAX_GENERATION_N {
        return Err(CliError::Usage(format!(
            "--k must be in 1..={MAX_GENERATION_N}"
        )));
    }
    let trees: Vec<Value> = candidate_trees(
        args.k,
        args.max_diameter.unwrap_or(usize::MAX),
        args.non_star,
    )
    .iter()
    .map(|t| {
        json!({
            "graph6": to_graph6(t.graph()),
            "diameter": t.diameter(),
            "star": t.is_star(),
            "gammas": t.decomposition().map(|d| d.gammas()),
        })
    })
    .collect();
    Ok(Outcome::plain(
        json!({ "k": args.k, "count": trees.len(), "trees": trees }),
    ))
}

fn bench(args: &BenchArgs, inputs: &mut Inputs) -> CliResult<Outcome> {
    if args.max_n > 7 {
        return Err(CliError::Usage("--max-n is limited to 7".into()));
    }
    let h = inputs.graph("pattern", &args.pattern, args.format)?;
    decompose_star_forest(&h).map_err(|e| CliError::Usage(e.to_string()))?;
    let opts = StarForestOptions {
        free_check: false,
        ..starforest_options()?
    };
    let limits = oracle_limits(None)?;
    let run = || -> CliResult<(Vec<String>, usize, f64, f64)> {
        use rayon::prelude::*;
        let graphs: Vec<Graph> = (0..=args.max_n).flat_map(all_graphs).collect();
        let rows: Vec<CliResult<(bool, String, f64, f64)>> = graphs
            .par_iter()
            .map(|g| {
                let t0 = Instant::now();
                let sf = ex_star_forest_with(g, &h, &opts)?;
                let t1 = Instant::now();
                let or = rem_exact(g, &h, limits)?;
                let t2 = Instant::now();
                Ok((
                    sf.ex == or.ex,
                    to_graph6(g),
                    (t1 - t0).as_secs_f64(),
                    (t2 - t1).as_secs_f64(),
                ))
            })
            .collect();
        let mut mismatches = Vec::new();
        let (mut sf_time, mut or_time) = (0.0, 0.0);
        for row in rows {
            let (same, g6, a, b) = row?;
            sf_time += a;
            or_time += b;
            if !same {
                mismatches.push(g6);
            }
        }
        Ok((mismatches, graphs.len(), sf_time, or_time))
    };
    let (mismatches, instances, sf_time, or_time) = match args.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let agree = mismatches.is_empty();
    let outcome = Outcome {
        method: Some("starforest"),
        result: json!({ "instances": instances, "agree": agree, "mismatches": mismatches }),
        counters: json!({ "starforest_ms": sf_time * 1e3, "oracle_ms": or_time * 1e3 }),
    };
    if !agree {
        return Err(CliError::Gave(format!(
            "solver and oracle disagree: {}",
            outcome.result
        )));
    }
    Ok(outcome)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Rem(_) => "rem",
        Command::Ex(_) => "ex",
        Command::Matching(_) => "matching",
        Command::Factor(_) => "factor",
        Command::Reduce(ReduceCommand::Pendant { .. }) => "reduce pendant",
        Command::Reduce(ReduceCommand::Pad { .. }) => "reduce pad",
        Command::Check(CheckCommand::Biclique(_)) => "check biclique",
        Command::Check(CheckCommand::CliqueFactor { .. }) => "check clique-factor",
        Command::VerifySesc(_) => "verify-sesc",
        Command::GenTrees(_) => "gen-trees",
        Command::Bench(_) => "bench",
    }
}

/// Runs a parsed command and returns the full report.
pub fn dispatch(cli: &Cli, argv: &[String]) -> CliResult<Value> {
    let start = Instant::now();
    let mut inputs = Inputs::new();
    let outcome = match &cli.command {
        Command::Rem(a) | Command::Ex(a) => deletion(a, &mut inputs)?,
        Command::Matching(a) => {
            let g = inputs.graph("graph", &a.graph, a.format)?;
            let m = max_matching(&g);
            certify(
                m.is_valid_in(&g),
                "matching edges overlap or leave the graph",
            )?;
            Outcome {
                method: None,
                result: json!({ "size": m.size(), "edges": m.edges() }),
                counters: json!({}),
            }
        }
        Command::Factor(a) => factor(a, &mut inputs)?,
        Command::Reduce(r) => reduce(r, &mut inputs)?,
        Command::Check(c) => check(c, &mut inputs)?,
        Command::VerifySesc(a) => sesc(a, &mut inputs)?,
        Command::GenTrees(a) => gen_trees(a)?,
        Command::Bench(a) => bench(a, &mut inputs)?,
    };
    Ok(json!({
        "command": command_name(&cli.command),
        "argv": argv,
        "inputs": Value::Object(inputs.fingerprints),
        "method": outcome.method,
        "result": outcome.result,
        "counters": outcome.counters,
        "wall_time_ms": start.elapsed().as_secs_f64() * 1e3,
    }))
}

/// Entry point for the binary: parses `args` (program name first), runs the
/// command, prints the report, and maps failures to exit codes.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(&cli, &args[1.min(args.len())..]) {
        Ok(report) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report is valid JSON")
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
