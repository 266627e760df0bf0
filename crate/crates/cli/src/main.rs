//! `ramsey`: constructions, certificates, bounds, search and extraction for
//! monochromatic stars, double stars and subdivided stars.
//!
//! Exit codes: 0 the claim holds, 1 the claim is refuted (a pattern was
//! found where freeness was claimed), 2 usage or input error, 3 internal
//! invariant failure.

mod dot;
mod files;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_stars::bounds::bounds_for;
use ramsey_stars::construct::{best_witness, build_witness, ConstructError, ConstructionId};
use ramsey_stars::detect::{brute_force_find, find_mono};
use ramsey_stars::extract::{
    check_conditions, extract_double_star, extract_double_star_m1, extract_subdivided_star,
    ExtractError, Extraction,
};
use ramsey_stars::search::{ramsey_exact, RamseyValue, SearchError, SearchOptions};
use ramsey_stars::{Color, ColoredCompleteGraph, Pattern};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use files::ColoringFile;

/// Largest order handed to the brute-force cross-check.
const ORACLE_ORDER: usize = 12;

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Monochromatic star-like patterns in edge-colored complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a pattern-free coloring and write its certificate.
    Construct(ConstructArgs),
    /// Re-check a certificate or raw coloring for freeness.
    Verify(VerifyArgs),
    /// Known bounds on the Ramsey number.
    Bounds(BoundsArgs),
    /// Exact Ramsey number by exhaustive search.
    Search(SearchArgs),
    /// Find the pattern by following the counting argument.
    Extract(ExtractArgs),
    /// Find the pattern with the exact detector.
    Detect(DetectArgs),
    /// Export a coloring as Graphviz DOT.
    Dot(DotArgs),
    /// Write a uniformly random coloring.
    Random(RandomArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternKind {
    Star,
    DoubleStar,
    P4,
    Substar,
}

#[derive(Args, Clone, Default)]
struct PatternArgs {
    /// Pattern family.
    #[arg(long, value_enum)]
    pattern: Option<PatternKind>,
    /// Leaves of the star / major center / center.
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Leaves of the minor center / subdivided edges.
    #[arg(short = 'm')]
    m: Option<usize>,
}

impl PatternArgs {
    fn given(&self) -> Result<Option<Pattern>, Failure> {
        let Some(kind) = self.pattern else {
            if self.n.is_some() || self.m.is_some() {
                return Err(usage(anyhow!("-n/-m given without --pattern")));
            }
            return Ok(None);
        };
        let n = || self.n.ok_or_else(|| usage(anyhow!("--pattern needs -n")));
        let m = || self.m.ok_or_else(|| usage(anyhow!("--pattern needs -m")));
        let p = match kind {
            PatternKind::Star => Pattern::star(n()?),
            PatternKind::DoubleStar => Pattern::double_star(n()?, m()?),
            PatternKind::P4 => Ok(Pattern::p4()),
            PatternKind::Substar => Pattern::subdivided_star(n()?, m()?),
        };
        p.map(Some).map_err(usage)
    }

    fn required(&self) -> Result<Pattern, Failure> {
        self.given()?
            .ok_or_else(|| usage(anyhow!("--pattern is required")))
    }

    /// Flag pattern, else the file's pattern; they must agree if both exist.
    fn or_file(&self, file: &ColoringFile) -> Result<Pattern, Failure> {
        let stored = file.pattern().map_err(usage)?;
        match (self.given()?, stored) {
            (Some(a), Some(b)) if a != b => Err(usage(anyhow!(
                "pattern {a} from flags disagrees with {b} in the file"
            ))),
            (Some(p), _) | (None, Some(p)) => Ok(p),
            (None, None) => Err(usage(anyhow!("no pattern in the file; pass --pattern"))),
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    /// Number of colors.
    #[arg(short = 'k')]
    k: usize,
    /// Construction id, or `auto` for the largest applicable witness.
    #[arg(long, default_value = "auto")]
    construction: String,
    /// Order of the star construction (default: the largest feasible).
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, env = "RAMSEY_SEED", default_value_t = 0)]
    seed: u64,
    /// Certificate path; without it the certificate goes to stdout.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate or raw coloring JSON.
    path: PathBuf,
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(short = 'k')]
    k: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(short = 'k')]
    k: Color,
    /// Largest order to try.
    #[arg(long, default_value_t = 10)]
    cap: usize,
    /// Node budget per order (per worker).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Disable color-ordering symmetry breaking.
    #[arg(long)]
    no_symmetry: bool,
    /// Write the largest free coloring found as a raw coloring.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtractMethod {
    Auto,
    General,
    M1,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    pattern: PatternArgs,
    /// Palette size for the hypotheses (default: the file's color count).
    #[arg(short = 'k')]
    k: Option<Color>,
    #[arg(long, value_enum, default_value = "auto")]
    method: ExtractMethod,
    /// Print the proof trace.
    #[arg(long)]
    explain: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct DotArgs {
    #[arg(long)]
    input: PathBuf,
    /// Thicken the edges of a monochromatic copy of the pattern.
    #[arg(long)]
    highlight: bool,
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    order: usize,
    #[arg(short = 'k')]
    k: Color,
    #[arg(long, env = "RAMSEY_SEED", default_value_t = 0)]
    seed: u64,
    /// Pattern recorded in the file.
    #[command(flatten)]
    pattern: PatternArgs,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

enum Outcome {
    Holds,
    Refuted,
}

#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn internal(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Internal(e.into())
}

fn construct_failure(e: ConstructError) -> Failure {
    match e {
        ConstructError::Internal(_) | ConstructError::Factor(_) => internal(e),
        _ => usage(e),
    }
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::Internal(_) => internal(e),
        _ => usage(e),
    }
}

fn extract_failure(e: ExtractError) -> Failure {
    match e {
        ExtractError::Internal(_) => internal(e),
        ExtractError::HypothesisViolated(_) => usage(e),
    }
}

type CmdResult = Result<Outcome, Failure>;

/// Writes to stdout; a closed pipe ends the output silently.
fn print_stdout(contents: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(contents.as_bytes()).and_then(|_| out.flush());
}

fn emit(format: Format, text: impl FnOnce() -> String, json: impl FnOnce() -> serde_json::Value) {
    let body = match format {
        Format::Text => text().trim_end().to_string(),
        Format::Json => serde_json::to_string_pretty(&json()).expect("serializable"),
    };
    print_stdout(&(body + "\n"));
}

fn write_out(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, contents)
            .with_context(|| format!("writing {}", p.display()))
            .map_err(usage),
        None => {
            print_stdout(contents);
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<(ColoringFile, ColoredCompleteGraph), Failure> {
    let file = ColoringFile::load(path).map_err(usage)?;
    let graph = file
        .graph()
        .with_context(|| format!("loading {}", path.display()))
        .map_err(usage)?;
    Ok((file, graph))
}

fn to_color(k: usize) -> Result<Color, Failure> {
    match Color::try_from(k) {
        Ok(c) if c >= 1 => Ok(c),
        _ => Err(usage(anyhow!("k must be in 1..={}", Color::MAX))),
    }
}

fn cmd_construct(a: ConstructArgs) -> CmdResult {
    let pattern = a.pattern.required()?;
    to_color(a.k)?;
    let w = if a.construction == "auto" {
        if a.order.is_some() {
            return Err(usage(anyhow!("--order needs an explicit --construction")));
        }
        best_witness(pattern, a.k, a.seed)
    } else {
        let id: ConstructionId = a
            .construction
            .parse()
            .map_err(|e: String| usage(anyhow!(e)))?;
        build_witness(id, pattern, a.k, a.order, a.seed)
    }
    .map_err(construct_failure)?;
    if !w.verified {
        return Err(internal(anyhow!("construction was not verified")));
    }
    let file = ColoringFile::certificate(&w);
    match &a.output {
        None => write_out(None, &(file.to_json() + "\n"))?,
        Some(path) => {
            write_out(Some(path), &(file.to_json() + "\n"))?;
            emit(
                a.format,
                || {
                    format!(
                        "{}-free {}-coloring of K_{} via {} (r > {}), written to {}",
                        w.pattern,
                        w.colors,
                        w.graph.order(),
                        w.construction_id,
                        w.graph.order(),
                        path.display()
                    )
                },
                || {
                    json!({
                        "pattern": files::PatternJson::from(w.pattern),
                        "colors": w.colors,
                        "order": w.graph.order(),
                        "construction_id": w.construction_id.as_str(),
                        "claimed_bound": w.claimed_bound,
                        "verified": w.verified,
                        "output": path,
                    })
                },
            );
        }
    }
    Ok(Outcome::Holds)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let (file, graph) = load(&a.path)?;
    let pattern = a.pattern.or_file(&file)?;
    let mut problems = Vec::new();
    if file.is_certificate() {
        if let Some(id) = &file.construction_id {
            id.parse::<ConstructionId>()
                .map_err(|e| usage(anyhow!(e)))?;
        }
        if let Some(p) = &file.partition {
            let scheme = ramsey_stars::construct::PartitionScheme {
                a: p.a.clone(),
                b: p.b.clone(),
                v: p.v.clone(),
            };
            if !scheme.covers(graph.order()) {
                return Err(usage(anyhow!(
                    "partition does not cover the vertices exactly"
                )));
            }
        }
        if file.verified == Some(false) {
            problems.push("certificate is marked unverified".to_string());
        }
        if let Some(bound) = file.claimed_bound {
            if bound > graph.order() + 1 {
                problems.push(format!(
                    "a free coloring of K_{} shows r > {}, not r >= {bound}",
                    graph.order(),
                    graph.order()
                ));
            }
        }
    }
    let found = find_mono(&graph, pattern);
    if found.is_none() && graph.order() <= ORACLE_ORDER {
        let slow = brute_force_find(&graph, pattern).map_err(internal)?;
        if let Some(e) = slow {
            return Err(internal(anyhow!(
                "detector missed a monochromatic {pattern} found by brute force: {:?}",
                e.vertex_map
            )));
        }
    }
    let holds = found.is_none() && problems.is_empty();
    emit(
        a.format,
        || match &found {
            Some(e) => report::embedding_text(e),
            None if problems.is_empty() => "FREE".to_string(),
            None => format!("FREE, but {}", problems.join("; ")),
        },
        || {
            json!({
                "status": if found.is_some() { "found" } else { "free" },
                "pattern": files::PatternJson::from(pattern),
                "order": graph.order(),
                "embedding": found.as_ref().map(report::embedding_json),
                "problems": problems,
                "claim_holds": holds,
            })
        },
    );
    Ok(if holds {
        Outcome::Holds
    } else {
        Outcome::Refuted
    })
}

fn cmd_bounds(a: BoundsArgs) -> CmdResult {
    let pattern = a.pattern.required()?;
    if a.k == 0 {
        return Err(usage(anyhow!("k must be at least 1")));
    }
    let r = bounds_for(pattern, a.k);
    emit(
        a.format,
        || format!("{}\n{r}", report::bounds_headline(&r)),
        || report::bounds_json(&r),
    );
    Ok(Outcome::Holds)
}

fn cmd_search(a: SearchArgs) -> CmdResult {
    let pattern = a.pattern.required()?;
    if a.k == 0 || a.cap == 0 || a.workers == 0 {
        return Err(usage(anyhow!("k, cap and workers must be at least 1")));
    }
    let mut options = SearchOptions {
        symmetry_breaking: !a.no_symmetry,
        workers: a.workers,
        ..SearchOptions::default()
    };
    if let Some(b) = a.budget {
        options.budget = b;
    }
    let start = Instant::now();
    let value = ramsey_exact(pattern, a.k, a.cap, options).map_err(search_failure)?;
    let elapsed = start.elapsed();
    let (exact, lower, witness, nodes) = match &value {
        RamseyValue::Exact {
            value,
            witness,
            nodes_explored,
        } => (Some(*value), *value, witness, *nodes_explored),
        RamseyValue::LowerBoundOnly {
            lower,
            witness,
            nodes_explored,
        } => (None, *lower, witness, *nodes_explored),
    };
    if let Some(path) = &a.witness_out {
        write_out(
            Some(path),
            &(ColoringFile::raw(witness, Some(pattern)).to_json() + "\n"),
        )?;
    }
    emit(
        a.format,
        || match exact {
            Some(v) => format!(
                "r({pattern}; {}): r = {v} ({nodes} nodes, {elapsed:.2?})",
                a.k
            ),
            None => format!(
                "r({pattern}; {}): r > {} ({nodes} nodes, {elapsed:.2?})",
                a.k, a.cap
            ),
        },
        || {
            json!({
                "pattern": files::PatternJson::from(pattern),
                "k": a.k,
                "exact": exact,
                "lower": lower,
                "cap": a.cap,
                "witness_order": witness.order(),
                "nodes_explored": nodes,
                "elapsed_ms": elapsed.as_millis() as u64,
            })
        },
    );
    Ok(Outcome::Holds)
}

fn run_extractor(
    graph: &ColoredCompleteGraph,
    pattern: Pattern,
    k: usize,
    method: ExtractMethod,
) -> Result<Extraction, Failure> {
    let unsupported = |why: &str| usage(anyhow!("no {why} extractor for {pattern}"));
    match (pattern, method) {
        (Pattern::DoubleStar { n, m }, ExtractMethod::General) => extract_double_star(graph, n, m),
        (Pattern::DoubleStar { n, m: 1 }, ExtractMethod::M1) => extract_double_star_m1(graph, n, k),
        (Pattern::DoubleStar { n, m }, ExtractMethod::Auto) => {
            let cond = check_conditions(pattern, k);
            if m == 1 && !cond.double_star_upper_holds() && cond.double_star_m1 == Some(true) {
                extract_double_star_m1(graph, n, k)
            } else {
                extract_double_star(graph, n, m)
            }
        }
        (Pattern::SubdividedStar { n, m }, ExtractMethod::Auto | ExtractMethod::General) => {
            extract_subdivided_star(graph, n, m, k)
        }
        (_, ExtractMethod::M1) => return Err(unsupported("m = 1")),
        (Pattern::Star { .. }, _) => return Err(unsupported("counting-argument")),
    }
    .map_err(extract_failure)
}

fn cmd_extract(a: ExtractArgs) -> CmdResult {
    let (file, graph) = load(&a.input)?;
    let pattern = a.pattern.or_file(&file)?;
    let k = a.k.unwrap_or(graph.colors());
    if k < graph.colors() {
        return Err(usage(anyhow!(
            "-k {k} is smaller than the file's {} colors",
            graph.colors()
        )));
    }
    // The general double-star extractor reads k from the palette.
    let graph = if k > graph.colors() {
        ColoredCompleteGraph::build(graph.order(), k, graph.edges()).map_err(internal)?
    } else {
        graph
    };
    let x = run_extractor(&graph, pattern, usize::from(k), a.method)?;
    graph
        .validate_embedding(&x.embedding)
        .map_err(|e| internal(anyhow!("extracted copy is invalid: {e}")))?;
    emit(
        a.format,
        || {
            let mut s = report::embedding_text(&x.embedding);
            if a.explain {
                s.push('\n');
                s.push_str(&x.trace.to_string());
            }
            s
        },
        || {
            let mut v = report::embedding_json(&x.embedding);
            if a.explain {
                v["trace"] = json!({
                    "steps": x.trace.steps,
                    "relabelings": x.trace.relabelings.iter().map(|r| json!({
                        "description": r.description,
                        "permutation": r.permutation,
                    })).collect::<Vec<_>>(),
                    "family": x.trace.family.as_ref().map(|f| json!({
                        "ground": f.ground,
                        "centers": f.centers,
                        "members": f.members,
                        "counts": f.counts,
                        "sum_counts": f.total_count(),
                        "sum_sizes": f.total_size(),
                    })),
                    "chosen": x.trace.chosen,
                });
            }
            v
        },
    );
    Ok(Outcome::Holds)
}

fn cmd_detect(a: DetectArgs) -> CmdResult {
    let (file, graph) = load(&a.input)?;
    let pattern = a.pattern.or_file(&file)?;
    let found = find_mono(&graph, pattern);
    emit(
        a.format,
        || {
            found
                .as_ref()
                .map_or_else(|| "FREE".to_string(), report::embedding_text)
        },
        || {
            json!({
                "status": if found.is_some() { "found" } else { "free" },
                "embedding": found.as_ref().map(report::embedding_json),
            })
        },
    );
    Ok(Outcome::Holds)
}

fn cmd_dot(a: DotArgs) -> CmdResult {
    let (file, graph) = load(&a.input)?;
    let highlight = if a.highlight {
        find_mono(&graph, a.pattern.or_file(&file)?)
    } else {
        None
    };
    write_out(
        a.output.as_deref(),
        &dot::to_dot(&graph, highlight.as_ref()),
    )?;
    Ok(Outcome::Holds)
}

fn cmd_random(a: RandomArgs) -> CmdResult {
    let pattern = a.pattern.given()?;
    if a.k == 0 || a.order == 0 {
        return Err(usage(anyhow!("order and k must be at least 1")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let g = ColoredCompleteGraph::from_fn(a.order, a.k, |_, _| rng.gen_range(1..=a.k))
        .map_err(internal)?;
    write_out(
        a.output.as_deref(),
        &(ColoringFile::raw(&g, pattern).to_json() + "\n"),
    )?;
    Ok(Outcome::Holds)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Search(a) => cmd_search(a),
        Command::Extract(a) => cmd_extract(a),
        Command::Detect(a) => cmd_detect(a),
        Command::Dot(a) => cmd_dot(a),
        Command::Random(a) => cmd_random(a),
    };
    match result {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Refuted) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(3)
        }
    }
}
