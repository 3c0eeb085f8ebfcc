//! Command-line front end behind the `mutvis` binary.
//!
//! Standard output carries exactly one report; diagnostics go to standard
//! error. Exit codes: 0 success, 1 error, 2 a solve or check hit its timeout
//! (compute, z) or a claim failed (check).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::from_spec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use crate::product::cartesian_product;
use crate::solvers::{bounds_mu, BoundsReport, Instance, Invariant, SolveStatus, SolverConfig};
use crate::theorems::{check, claim_ids, CheckReport, CheckStatus, ScaleParams};
use crate::zarankiewicz::{erdos_window, kst_upper, projective_lower, z_exact, ZConfig, ZInstance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;

const TIMEOUT_ENV: &str = "MUTVIS_TIMEOUT_SECS";

#[derive(Parser, Debug)]
#[command(
    name = "mutvis",
    version,
    about = "Mutual-visibility invariants of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve mu, mu_i, alpha and gp for one graph.
    Compute(ComputeArgs),
    /// Write a named graph as graph6 or an edge list.
    Generate(GenerateArgs),
    /// Exact Zarankiewicz number z(m,n;s,t) with its bounds.
    Z(ZArgs),
    /// Run the theorem checkers.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Seconds per solve.
    #[arg(long, env = TIMEOUT_ENV, default_value_t = 60.0)]
    timeout: f64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Include wall-clock times and node counts (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// graph6 file (`.g6`) or edge list.
    #[arg(
        long,
        conflicts_with = "generate",
        required_unless_present = "generate"
    )]
    input: Option<PathBuf>,
    /// Family spec such as `cycle:8` or `cartesian:path:4,path:4`.
    #[arg(long)]
    generate: Option<String>,
    #[arg(long)]
    mu: bool,
    #[arg(long = "mu-i")]
    mu_i: bool,
    #[arg(long)]
    alpha: bool,
    #[arg(long)]
    gp: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    spec: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ZArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Also solve mu(K_m x K_n) and compare.
    #[arg(long)]
    crosscheck_mu: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Claim ids; see `--all`.
    ids: Vec<String>,
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Largest order for claims over all connected graphs [default: 6].
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest order for triangle-free claims (defaults to 7, or --max-n when given).
    #[arg(long)]
    max_n_triangle_free: Option<usize>,
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Generate(a) => generate(a),
        Command::Z(a) => zarankiewicz(a),
        Command::Check(a) => run_check(a),
    };
    match outcome {
        Ok((text, code)) => match out.write_all(text.as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_ERROR
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .try_init();
    run(std::env::args_os(), &mut std::io::stdout().lock())
}

fn timeout_of(common: &Common) -> Result<Duration> {
    if !(common.timeout > 0.0 && common.timeout.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "timeout must be positive, got {}",
            common.timeout
        )));
    }
    Ok(Duration::from_secs_f64(common.timeout))
}

fn solver_config(common: &Common) -> Result<SolverConfig> {
    Ok(SolverConfig::default()
        .with_timeout(Some(timeout_of(common)?))
        .with_workers(common.workers.max(1)))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Resolved configuration echoed into reports. The worker count is left out
/// so reports are identical across worker counts.
#[derive(Serialize)]
struct ReportConfig {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generate: Option<String>,
    format: Format,
    timeout_secs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    timings: bool,
}

impl ReportConfig {
    fn new(command: &'static str, common: &Common) -> Self {
        ReportConfig {
            command,
            input: None,
            generate: None,
            format: common.format,
            timeout_secs: common.timeout,
            seed: None,
            timings: common.timings,
        }
    }
}

#[derive(Serialize)]
struct Header {
    tool: &'static str,
    version: &'static str,
}

const HEADER: Header = Header {
    tool: env!("CARGO_PKG_NAME"),
    version: env!("CARGO_PKG_VERSION"),
};

// ---------------------------------------------------------------------------
// compute

#[derive(Serialize)]
struct GraphSummary {
    order: usize,
    size: usize,
    graph6: String,
}

#[derive(Serialize)]
struct InvariantReport {
    invariant: Invariant,
    value: usize,
    witness: Vec<usize>,
    status: SolveStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct ComputeReport {
    #[serde(flatten)]
    header: Header,
    config: ReportConfig,
    graph: GraphSummary,
    results: Vec<InvariantReport>,
    mu_bounds: BoundsReport,
    complete: bool,
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let is_g6 =
        path.extension().is_some_and(|e| e == "g6") || text.trim_start().starts_with(">>graph6<<");
    if is_g6 {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Parse("empty graph6 file".into()))?;
        from_graph6(line)
    } else {
        from_edge_list(&text)
    }
}

fn compute(args: ComputeArgs) -> Result<(String, i32)> {
    let cfg = solver_config(&args.common)?;
    let graph = match (&args.input, &args.generate) {
        (Some(path), None) => read_graph(path)?,
        (None, Some(spec)) => from_spec(spec)?,
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one of --input and --generate".into(),
            ))
        }
    };
    let mut invariants: Vec<Invariant> = [
        (args.mu, Invariant::Mu),
        (args.mu_i, Invariant::MuI),
        (args.alpha, Invariant::Alpha),
        (args.gp, Invariant::Gp),
    ]
    .iter()
    .filter(|(on, _)| *on)
    .map(|&(_, inv)| inv)
    .collect();
    if invariants.is_empty() {
        invariants = Invariant::ALL.to_vec();
    }
    let instance = Instance::new(&graph)?;
    let mut results = Vec::new();
    for inv in invariants {
        log::info!("solving {}", inv.name());
        let r = instance.solve(inv, &cfg)?;
        results.push(InvariantReport {
            invariant: inv,
            value: r.value,
            witness: r.witness.to_vec(),
            status: r.status,
            nodes_explored: args.common.timings.then_some(r.nodes_explored),
            elapsed_ms: args.common.timings.then_some(r.elapsed.as_millis() as u64),
        });
    }
    let complete = results.iter().all(|r| r.status == SolveStatus::Optimal);
    let mut config = ReportConfig::new("compute", &args.common);
    config.input = args.input.as_ref().map(|p| p.display().to_string());
    config.generate = args.generate.clone();
    let report = ComputeReport {
        header: HEADER,
        config,
        graph: GraphSummary {
            order: graph.order(),
            size: graph.size(),
            graph6: to_graph6(&graph),
        },
        results,
        mu_bounds: bounds_mu(&graph)?,
        complete,
    };
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("invariant,value,status,witness\n");
            for r in &report.results {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.invariant.name(),
                    r.value,
                    status_name(r.status),
                    join(&r.witness, " ")
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} {}\ngraph: n={} m={} graph6={}\n",
                HEADER.tool,
                HEADER.version,
                report.graph.order,
                report.graph.size,
                report.graph.graph6
            );
            for r in &report.results {
                let _ = writeln!(
                    s,
                    "{} = {} ({}) witness {{{}}}",
                    r.invariant.name(),
                    r.value,
                    status_name(r.status),
                    join(&r.witness, ", ")
                );
            }
            let _ = writeln!(
                s,
                "mu bounds: {} <= mu <= {}",
                report.mu_bounds.lower, report.mu_bounds.upper
            );
            s
        }
    };
    Ok((text, if complete { EXIT_OK } else { EXIT_INCOMPLETE }))
}

fn status_name(s: SolveStatus) -> &'static str {
    match s {
        SolveStatus::Optimal => "optimal",
        SolveStatus::Incomplete => "incomplete",
    }
}

// ---------------------------------------------------------------------------
// generate

fn generate(args: GenerateArgs) -> Result<(String, i32)> {
    let g = from_spec(&args.spec)?;
    let text = match args.format {
        GraphFormat::Graph6 => format!("{}\n", to_graph6(&g)),
        GraphFormat::Edgelist => to_edge_list(&g),
    };
    match args.output {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| {
                Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
            })?;
            log::info!("wrote {} vertices to {}", g.order(), path.display());
            Ok((String::new(), EXIT_OK))
        }
        None => Ok((text, EXIT_OK)),
    }
}

// ---------------------------------------------------------------------------
// z

#[derive(Serialize)]
struct Crosscheck {
    mu: usize,
    equal: bool,
}

#[derive(Serialize)]
struct ZReport {
    #[serde(flatten)]
    header: Header,
    config: ReportConfig,
    m: usize,
    n: usize,
    s: usize,
    t: usize,
    value: usize,
    witness: Vec<String>,
    complete: bool,
    kst_upper: f64,
    projective_lower: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    erdos_window: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    crosscheck_mu: Option<Crosscheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn zarankiewicz(args: ZArgs) -> Result<(String, i32)> {
    let timeout = timeout_of(&args.common)?;
    let inst = ZInstance::new(args.m, args.n, args.s, args.t)?;
    let z = z_exact(
        inst,
        &ZConfig {
            timeout: Some(timeout),
            ..ZConfig::default()
        },
    )?;
    let mut complete = z.complete;
    let crosscheck_mu = if args.crosscheck_mu {
        if (args.s, args.t) != (2, 2) {
            return Err(Error::InvalidArgument(
                "--crosscheck-mu needs s = t = 2".into(),
            ));
        }
        let (g, _) = cartesian_product(
            &crate::constructions::complete(args.m)?,
            &crate::constructions::complete(args.n)?,
        )?;
        let r = Instance::new(&g)?.solve(Invariant::Mu, &solver_config(&args.common)?)?;
        complete &= r.is_optimal();
        Some(Crosscheck {
            mu: r.value,
            equal: r.value == z.value,
        })
    } else {
        None
    };
    let report = ZReport {
        header: HEADER,
        config: ReportConfig::new("z", &args.common),
        m: args.m,
        n: args.n,
        s: args.s,
        t: args.t,
        value: z.value,
        witness: z.witness.row_strings(),
        complete,
        kst_upper: kst_upper(inst)?,
        projective_lower: projective_lower(inst)?,
        erdos_window: (args.m == args.n).then(|| erdos_window(args.n)),
        crosscheck_mu,
        elapsed_ms: args.common.timings.then_some(z.elapsed.as_millis() as u64),
    };
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("m,n,s,t,value,complete,kst_upper,projective_lower,witness\n");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{}",
                report.m,
                report.n,
                report.s,
                report.t,
                report.value,
                report.complete,
                report.kst_upper,
                report.projective_lower,
                report.witness.join(" ")
            );
            s
        }
        Format::Text => {
            let mut s = format!(
                "z({},{};{},{}) = {}{}\n",
                report.m,
                report.n,
                report.s,
                report.t,
                report.value,
                if report.complete { "" } else { " (incomplete)" }
            );
            for row in &report.witness {
                let _ = writeln!(s, "  {row}");
            }
            let _ = writeln!(s, "projective lower: {}", report.projective_lower);
            let _ = writeln!(s, "KST upper: {:.4}", report.kst_upper);
            if let Some((lo, hi)) = report.erdos_window {
                let _ = writeln!(s, "window: [{lo:.4}, {hi:.4}]");
            }
            if let Some(c) = &report.crosscheck_mu {
                let _ = writeln!(
                    s,
                    "mu(K_m x K_n) = {} ({})",
                    c.mu,
                    if c.equal { "equal" } else { "DIFFERENT" }
                );
            }
            s
        }
    };
    Ok((text, if complete { EXIT_OK } else { EXIT_INCOMPLETE }))
}

// ---------------------------------------------------------------------------
// check

#[derive(Serialize)]
struct ScaleSummary {
    ids: Vec<String>,
    max_n: usize,
    max_n_triangle_free: usize,
    samples: usize,
}

#[derive(Serialize, Default)]
struct Totals {
    pass: usize,
    fail: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct SuiteReport {
    #[serde(flatten)]
    header: Header,
    config: ReportConfig,
    scale: ScaleSummary,
    reports: Vec<CheckReport>,
    totals: Totals,
}

fn run_check(args: CheckArgs) -> Result<(String, i32)> {
    let ids: Vec<String> = if args.all {
        claim_ids().into_iter().map(String::from).collect()
    } else if args.ids.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "name claims or pass --all; valid claims: {}",
            claim_ids().join(", ")
        )));
    } else {
        args.ids.clone()
    };
    // reject unknown ids before running anything
    for id in &ids {
        crate::theorems::find_claim(id)?;
    }
    let max_n_triangle_free = args.max_n_triangle_free.or(args.max_n).unwrap_or(7);
    let params = ScaleParams {
        max_n: args.max_n.unwrap_or(6),
        max_n_triangle_free,
        samples: args.samples,
        seed: args.seed,
        workers: args.common.workers.max(1),
        solver: SolverConfig::default().with_timeout(Some(timeout_of(&args.common)?)),
        instances: None,
    };
    let mut reports = Vec::new();
    let mut totals = Totals::default();
    for id in &ids {
        log::info!("checking {id}");
        let mut r = check(id, &params)?;
        if !args.common.timings {
            r.elapsed_ms = None;
        }
        match r.status {
            CheckStatus::Pass => totals.pass += 1,
            CheckStatus::Fail => totals.fail += 1,
            CheckStatus::Skipped => totals.skipped += 1,
        }
        reports.push(r);
    }
    let mut config = ReportConfig::new("check", &args.common);
    config.seed = Some(args.seed);
    let code = if totals.fail == 0 {
        EXIT_OK
    } else {
        EXIT_INCOMPLETE
    };
    let report = SuiteReport {
        header: HEADER,
        config,
        scale: ScaleSummary {
            ids,
            max_n: params.max_n,
            max_n_triangle_free: params.max_n_triangle_free,
            samples: params.samples,
        },
        reports,
        totals,
    };
    let text = match args.common.format {
        Format::Json => to_json(&report)?,
        Format::Csv => {
            let mut s = String::from("claim_id,status,instances_checked,failures\n");
            for r in &report.reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.claim_id,
                    check_name(r.status),
                    r.instances_checked,
                    r.failures.len()
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.reports {
                let _ = writeln!(
                    s,
                    "{:<18} {:<7} {} instances",
                    r.claim_id,
                    check_name(r.status),
                    r.instances_checked
                );
                for f in &r.failures {
                    let _ = writeln!(
                        s,
                        "    {}: expected {}, got {}",
                        f.instance, f.expected, f.got
                    );
                }
            }
            let _ = writeln!(
                s,
                "{} passed, {} failed, {} skipped",
                report.totals.pass, report.totals.fail, report.totals.skipped
            );
            s
        }
    };
    Ok((text, code))
}

fn check_name(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    }
}
