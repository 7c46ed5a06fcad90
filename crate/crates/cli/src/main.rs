//! `shooting-star`: validate drawings, build and certify shooting stars, run
//! the exhaustive oracles, generate instances and render SVG.
//!
//! Exit codes: 0 success, 1 domain failure, 2 malformed input, 3 budget
//! refusal.

mod explain;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use shooting_star::corpus::{Family, GenSpec};
use shooting_star::format::{parse_drawing, root_ref, write_drawing, TreeDoc, TreeEdgeDoc};
use shooting_star::monotone::monotone_report;
use shooting_star::oracle::{enumerate_shooting_stars, max_plane_subdrawing, plane_spanning_tree, DEFAULT_BUDGET};
use shooting_star::render::{render_svg, RenderOptions};
use shooting_star::search::{find_shooting_star_with, SearchOptions};
use shooting_star::validate::{validate, Mode};
use shooting_star::wedge::{assignment_star, wedge_assignment};
use shooting_star::{certify, verify_plane, Drawing, EdgeId, Error, ShootingStar, VertexRef};

#[derive(Parser)]
#[command(name = "shooting-star", version, about = "Plane spanning trees in simple drawings of K_{m,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a drawing is simple and in general position.
    Validate {
        file: PathBuf,
        /// Allow independent edges to cross several times.
        #[arg(long)]
        star_simple: bool,
    },
    /// Build a shooting star and print it as a tree document.
    Find {
        file: PathBuf,
        /// Root vertex id. Defaults to the first red vertex, or to the
        /// leftmost vertex for the monotone method.
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::General)]
        method: Method,
        /// Also write the drawing with the tree highlighted.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print the per-vertex choices or the repair trace to stderr as JSON.
        #[arg(long)]
        explain: bool,
        /// Shuffle the insertion order of the general method with this seed.
        #[arg(long)]
        order_seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive ground truth for small drawings.
    Oracle {
        file: PathBuf,
        #[arg(value_enum)]
        query: Query,
        /// Root for `shooting-stars`; defaults to the first red vertex.
        #[arg(long)]
        root: Option<String>,
        /// Search nodes (or candidate matchings) before refusing.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Re-verify every witness before printing.
        #[arg(long)]
        certify: bool,
    },
    /// Generate a drawing.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render a drawing, optionally with a tree document highlighted.
    Render {
        file: PathBuf,
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(long, default_value_t = 640.0)]
        width: f64,
        #[arg(long, default_value_t = 640.0)]
        height: f64,
        #[arg(long)]
        no_labels: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a method on many generated instances and certify every result.
    Batch {
        #[arg(long, value_enum, default_value_t = GenFamily::Random)]
        family: GenFamily,
        #[arg(long, value_enum, default_value_t = Method::General)]
        method: Method,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// First seed; instance `i` uses `seed + i`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    General,
    Monotone,
    Straightline,
}

#[derive(Clone, Copy, ValueEnum)]
enum Query {
    ShootingStars,
    SpanningTree,
    MaxPlane,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Convex,
    #[value(alias = "convex-minus-edge")]
    ConvexMinus,
    #[value(alias = "random-straightline")]
    Random,
    RandomMonotone,
}

impl From<GenFamily> for Family {
    fn from(f: GenFamily) -> Family {
        match f {
            GenFamily::Convex => Family::Convex,
            GenFamily::ConvexMinus => Family::ConvexMinusEdge,
            GenFamily::Random => Family::RandomStraightline,
            GenFamily::RandomMonotone => Family::RandomMonotone,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) | Error::Malformed(_) | Error::Json(_) | Error::UnknownVertex(_) => 2,
            Error::BudgetExceeded(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn read_drawing(path: &Path) -> Outcome<Drawing> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_drawing(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn resolve_root(d: &Drawing, root: Option<&str>) -> Outcome<VertexRef> {
    match root {
        Some(id) => Ok(root_ref(d, id)?),
        None => Ok(VertexRef::red(0)),
    }
}

fn leftmost(d: &Drawing) -> VertexRef {
    d.vertices().min_by(|a, b| a.1.position.x.cmp(&b.1.position.x)).expect("drawings have vertices").0
}

fn cmd_validate(file: &Path, star_simple: bool) -> Outcome {
    let d = read_drawing(file)?;
    let report = validate(&d, if star_simple { Mode::StarSimple } else { Mode::Simple });
    print!("{}", json(&report));
    if report.ok {
        Ok(())
    } else {
        Err(Failure::domain(report.to_string()))
    }
}

/// A shooting star and, if requested, its explanation.
fn construct(
    d: &Drawing,
    root: Option<&str>,
    method: Method,
    order_seed: Option<u64>,
    explain: bool,
) -> Outcome<(ShootingStar, Option<serde_json::Value>)> {
    let report = validate(d, Mode::Simple);
    if !report.ok {
        return Err(Failure::domain(format!("drawing is not simple: {report}")));
    }
    match method {
        Method::General => {
            let root = resolve_root(d, root)?;
            let opts = SearchOptions { order_seed, ..Default::default() };
            let found = find_shooting_star_with(d, root, &opts)?;
            let note = explain.then(|| explain::trace(d, root, &found.trace));
            Ok((found.star, note))
        }
        Method::Monotone => {
            let left = leftmost(d);
            if let Some(id) = root {
                if root_ref(d, id)? != left {
                    return Err(Failure::domain(format!(
                        "the monotone method roots at the leftmost vertex {}, not {id}",
                        d.vertex(left).id
                    )));
                }
            }
            let found = monotone_report(d)?;
            let note = explain.then(|| explain::monotone(d, &found.picks, found.star.root));
            Ok((found.star, note))
        }
        Method::Straightline => {
            let root = resolve_root(d, root)?;
            let a = wedge_assignment(d, root)?;
            let note = explain.then(|| explain::wedge(d, &a));
            Ok((assignment_star(d, &a), note))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_find(
    file: &Path,
    root: Option<&str>,
    method: Method,
    svg: Option<&Path>,
    explain: bool,
    order_seed: Option<u64>,
    output: Option<&Path>,
) -> Outcome {
    let d = read_drawing(file)?;
    let (star, note) = construct(&d, root, method, order_seed, explain)?;
    certify(&d, &star).map_err(|e| Failure::domain(format!("refusing to print an uncertified tree: {e}")))?;
    if let Some(note) = note {
        eprint!("{}", json(&note));
    }
    if let Some(path) = svg {
        let opts = RenderOptions::default().highlight(&d, &star)?;
        fs::write(path, render_svg(&d, &opts)?).map_err(|e| Failure::domain(format!("{}: {e}", path.display())))?;
    }
    emit(&json(&TreeDoc::from_star(&d, &star)), output)
}

#[derive(Serialize)]
struct OracleReport {
    query: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<String>,
    count: usize,
    witnesses: Vec<Vec<TreeEdgeDoc>>,
    /// `"none"` when a spanning-tree search is exhausted.
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'static str>,
    certified: bool,
    elapsed_ms: f64,
}

fn edge_docs(d: &Drawing, edges: &[EdgeId]) -> Vec<TreeEdgeDoc> {
    edges
        .iter()
        .map(|&e| TreeEdgeDoc { red: d.reds()[d.edge(e).red].id.clone(), blue: d.blues()[d.edge(e).blue].id.clone() })
        .collect()
}

fn check_plane(d: &Drawing, edges: &[EdgeId]) -> Outcome {
    match verify_plane(d, edges) {
        None => Ok(()),
        Some((a, b)) => Err(Failure::domain(format!("witness edges {} and {} cross", d.edge_name(a), d.edge_name(b)))),
    }
}

fn cmd_oracle(file: &Path, query: Query, root: Option<&str>, budget: u64, recheck: bool) -> Outcome {
    let d = read_drawing(file)?;
    let start = Instant::now();
    let mut report = OracleReport {
        query: "",
        root: None,
        count: 0,
        witnesses: Vec::new(),
        result: None,
        certified: recheck,
        elapsed_ms: 0.0,
    };
    match query {
        Query::ShootingStars => {
            let root = resolve_root(&d, root)?;
            let found = enumerate_shooting_stars(&d, root, budget)?;
            for star in &found.witnesses {
                let edges = star.edge_ids(&d)?;
                if recheck {
                    check_plane(&d, &edges)?;
                }
                report.witnesses.push(edge_docs(&d, &edges));
            }
            report.query = "shooting-stars";
            report.root = Some(d.vertex(root).id.clone());
            report.count = found.count;
        }
        Query::SpanningTree => {
            report.query = "spanning-tree";
            match plane_spanning_tree(&d, budget)? {
                Some(tree) => {
                    if recheck {
                        check_plane(&d, &tree)?;
                    }
                    report.count = 1;
                    report.witnesses.push(edge_docs(&d, &tree));
                }
                None => report.result = Some("none"),
            }
        }
        Query::MaxPlane => {
            let best = max_plane_subdrawing(&d, budget)?;
            if recheck {
                check_plane(&d, &best)?;
            }
            report.query = "max-plane";
            report.count = best.len();
            report.witnesses.push(edge_docs(&d, &best));
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    print!("{}", json(&report));
    Ok(())
}

fn cmd_gen(family: GenFamily, m: usize, n: usize, seed: u64, output: Option<&Path>) -> Outcome {
    let spec = GenSpec { family: family.into(), m, n, seed };
    // invalid sizes are a domain failure here, not a malformed input
    let d = spec.generate().map_err(|e| match e {
        Error::Malformed(msg) => Failure::domain(msg),
        e => e.into(),
    })?;
    emit(&write_drawing(&d), output)
}

fn cmd_render(file: &Path, tree: Option<&Path>, opts: RenderOptions, output: Option<&Path>) -> Outcome {
    let d = read_drawing(file)?;
    let opts = match tree {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let doc: TreeDoc =
                serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            opts.highlight(&d, &doc.to_star(&d)?)?
        }
        None => opts,
    };
    emit(&render_svg(&d, &opts)?, output)
}

#[derive(Serialize)]
struct BatchReport {
    instances: u64,
    roots: usize,
    failures: Vec<String>,
    elapsed_ms: f64,
}

/// Number of roots checked in one instance, or the first failure.
fn batch_instance(spec: &GenSpec, method: Method) -> Result<usize, String> {
    let d = spec.generate().map_err(|e| e.to_string())?;
    let roots: Vec<VertexRef> = match method {
        Method::Monotone => vec![leftmost(&d)],
        _ => d.vertices().map(|(v, _)| v).collect(),
    };
    for &root in &roots {
        let id = d.vertex(root).id.clone();
        let (star, _) = construct(&d, Some(&id), method, None, false).map_err(|f| format!("root {id}: {}", f.message))?;
        certify(&d, &star).map_err(|e| format!("root {id}: {e}"))?;
    }
    Ok(roots.len())
}

#[allow(clippy::too_many_arguments)]
fn cmd_batch(family: GenFamily, method: Method, count: u64, m_max: usize, n_max: usize, seed: u64, jobs: usize) -> Outcome {
    if m_max == 0 || n_max == 0 {
        return Err(Failure::domain("--m-max and --n-max must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::domain(e.to_string()))?;
    let start = Instant::now();
    let results: Vec<(GenSpec, Result<usize, String>)> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let s = seed + i;
                let spec = GenSpec {
                    family: family.into(),
                    m: 1 + (s as usize) % m_max,
                    n: 1 + (s as usize / m_max) % n_max,
                    seed: s,
                };
                let r = batch_instance(&spec, method);
                (spec, r)
            })
            .collect()
    });
    let mut report = BatchReport { instances: count, roots: 0, failures: Vec::new(), elapsed_ms: 0.0 };
    for (spec, r) in results {
        match r {
            Ok(k) => report.roots += k,
            Err(e) => report.failures.push(format!("seed {} ({}x{}): {e}", spec.seed, spec.m, spec.n)),
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    print!("{}", json(&report));
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::domain(format!("{} instances failed", report.failures.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file, star_simple } => cmd_validate(&file, star_simple),
        Command::Find { file, root, method, svg, explain, order_seed, output } => {
            cmd_find(&file, root.as_deref(), method, svg.as_deref(), explain, order_seed, output.as_deref())
        }
        Command::Oracle { file, query, root, budget, certify } => {
            cmd_oracle(&file, query, root.as_deref(), budget, certify)
        }
        Command::Gen { family, m, n, seed, output } => cmd_gen(family, m, n, seed, output.as_deref()),
        Command::Render { file, tree, width, height, no_labels, output } => {
            let opts = RenderOptions { width, height, labels: !no_labels, ..RenderOptions::default() };
            cmd_render(&file, tree.as_deref(), opts, output.as_deref())
        }
        Command::Batch { family, method, count, m_max, n_max, seed, jobs } => {
            cmd_batch(family, method, count, m_max, n_max, seed, jobs)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
