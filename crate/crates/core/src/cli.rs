//! Command-line front end.
//!
//! Every subcommand writes one JSON document to stdout and nothing else;
//! `--verbose` adds a human summary and timing on stderr. [`run`] does all the
//! work in-process so it can be driven from tests; the `minconn` binary only
//! forwards its arguments and exit code.
//!
//! Exit codes: 0 success, 1 property falsified, 2 input error, 3 resource limit.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::coloring::{self, EdgeColoring, SearchLimits};
use crate::connectivity::{self, is_connected, is_minimally_connected};
use crate::error::{Error, Result};
use crate::generators;
use crate::hypergraph::{complement, Hypergraph};
use crate::io::{self, Document, Parsed};
use crate::minimal_span::{self, DeletionOrder, DEFAULT_MAX_EDGES};
use crate::rational::format_weight;
use crate::structure::{self, ProcessMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "minconn", version, about = "Minimally connected uniform hypergraphs")]
struct Cli {
    /// Human-readable summary and timing on stderr.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a hypergraph file.
    Analyze { file: String },
    /// Extract a spanning minimally connected subhypergraph.
    Span {
        file: String,
        /// Minimise total weight instead of plain deletion (file needs weights).
        #[arg(long, value_enum)]
        weighted: Option<Strategy>,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print a generated hypergraph file.
    Generate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Vertex colorings.
    Color {
        file: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Colors every edge must see, for `--mode k`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Randomised property sweep; exits 1 with the counterexamples on failure.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Strategy {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Lex,
    Seeded,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Star,
    TwoEdge,
    LoosePath,
    RandomTree,
    RandomConnected,
    RandomMinconn,
    SizeOrder,
    CliqueExpansion,
    GreedyCounterexample,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Weak2,
    Weak,
    Strong,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Suite {
    Tightness,
    SizeBounds,
    Complement,
    Gallai,
    Monochromatic,
    Rc,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a [String],
    input_digest: Option<String>,
    seed: Option<u64>,
    result: Value,
}

/// Failure of a subcommand: its exit code and the stderr diagnostic.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_LIMIT,
        Error::NoWitness { .. }
        | Error::NoSpanningColor
        | Error::TheoremViolation(_)
        | Error::InternalInconsistency(_) => EXIT_FALSIFIED,
        _ => EXIT_INPUT,
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let started = Instant::now();
    let mut stderr = String::new();
    let (code, stdout) = match dispatch(&cli.command, &echo) {
        Ok((code, stdout, summary)) => {
            if cli.verbose {
                stderr.push_str(&summary);
                stderr.push('\n');
            }
            (code, stdout)
        }
        Err(Failure(code, msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            (code, String::new())
        }
    };
    if cli.verbose {
        stderr.push_str(&format!("elapsed: {:.3}s\n", started.elapsed().as_secs_f64()));
    }
    Outcome { code, stdout, stderr }
}

type Dispatched = std::result::Result<(i32, String, String), Failure>;

fn dispatch(cmd: &Command, echo: &[String]) -> Dispatched {
    match cmd {
        Command::Analyze { file } => analyze(file, echo),
        Command::Span { file, weighted, order, seed } => span(file, *weighted, *order, *seed, echo),
        Command::Generate { family, n, r, m, k, seed } => generate(*family, *n, *r, *m, *k, *seed),
        Command::Color { file, mode, k } => color(file, *mode, *k, echo),
        Command::Check { suite, seed, trials, r, n, jobs } => check(*suite, *seed, *trials, *r, *n, *jobs, echo),
    }
}

fn render(echo: &[String], digest: Option<String>, seed: Option<u64>, result: Value) -> String {
    let report = Report { command: echo, input_digest: digest, seed, result };
    let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
    text.push('\n');
    text
}

fn load(file: &str) -> std::result::Result<(Parsed, String), Failure> {
    let bytes = std::fs::read(file).map_err(|e| input_error(format!("cannot read {file}: {e}")))?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| input_error(format!("{file} is not UTF-8")))?;
    Ok((io::parse_document(&text)?, digest))
}

fn analyze(file: &str, echo: &[String]) -> Dispatched {
    let (parsed, digest) = load(file)?;
    let h = parsed.hypergraph();
    let report = structure::classify(h)?;
    let summary = format!(
        "{h}: connected={} minimally_connected={} tree={} star={}",
        report.connected, report.minimally_connected, report.tree, report.star
    );
    let result = serde_json::to_value(&report).expect("report serializes");
    Ok((EXIT_OK, render(echo, Some(digest), None, result), summary))
}

fn span(file: &str, weighted: Option<Strategy>, order: Order, seed: Option<u64>, echo: &[String]) -> Dispatched {
    let (parsed, digest) = load(file)?;
    let (strategy, m, weight) = match weighted {
        Some(strategy) => {
            if order != Order::Lex {
                return Err(input_error("--order applies to unweighted extraction only"));
            }
            let Parsed::Weighted(wh) = &parsed else {
                return Err(input_error(format!("{file} has no weights")));
            };
            let (name, m) = match strategy {
                Strategy::Greedy => ("greedy", minimal_span::greedy_min_weight(wh)?),
                Strategy::Exact => ("exact", minimal_span::exact_min_weight(wh, DEFAULT_MAX_EDGES)?),
            };
            let w = wh.total_weight(&m)?;
            (name, m, Some(w))
        }
        None => {
            let deletion = match (order, seed) {
                (Order::Lex, _) => DeletionOrder::Lexicographic,
                (Order::Seeded, Some(s)) => DeletionOrder::Seeded(s),
                (Order::Seeded, None) => return Err(input_error("--order seeded needs --seed")),
            };
            let h = parsed.hypergraph();
            let m = minimal_span::spanning_minimally_connected_with(h, deletion)?;
            // Weighted files still report the weight of the plain extraction.
            let w = match &parsed {
                Parsed::Weighted(wh) => Some(wh.total_weight(&m)?),
                Parsed::Plain(_) => None,
            };
            (if order == Order::Lex { "lex" } else { "seeded" }, m, w)
        }
    };
    let summary = format!(
        "{strategy}: {} edges{}",
        m.size(),
        weight.as_ref().map(|w| format!(", weight {}", format_weight(w))).unwrap_or_default()
    );
    let result = json!({
        "strategy": strategy,
        "size": m.size(),
        "weight": weight.as_ref().map(format_weight),
        "size_bounds": structure::size_bounds(m.order(), m.r()).ok(),
        "subhypergraph": io::to_document(&m),
    });
    let seed = if order == Order::Seeded { seed } else { None };
    Ok((EXIT_OK, render(echo, Some(digest), seed, result), summary))
}

fn need(value: Option<usize>, flag: &str, family: Family) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| {
        let name = family.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
        input_error(format!("family {name} needs --{flag}"))
    })
}

fn generate(
    family: Family,
    n: Option<usize>,
    r: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    seed: Option<u64>,
) -> Dispatched {
    let need_seed = || seed.ok_or_else(|| input_error("random families need --seed"));
    let h = match family {
        Family::Complete => generators::complete(need(n, "n", family)?, need(r, "r", family)?)?,
        Family::Star => generators::star(need(n, "n", family)?, need(r, "r", family)?)?,
        Family::TwoEdge => generators::two_edge_no_spanning_tree(need(r, "r", family)?)?,
        Family::LoosePath => generators::loose_path_hypergraph(need(k, "k", family)?, need(r, "r", family)?)?,
        Family::RandomTree => generators::random_tree(need(k, "k", family)?, need(r, "r", family)?, need_seed()?)?,
        Family::RandomConnected => generators::random_connected(
            need(n, "n", family)?,
            need(r, "r", family)?,
            need(k, "k", family)?,
            need_seed()?,
        )?,
        Family::RandomMinconn => generators::random_minimally_connected(
            need(n, "n", family)?,
            need(r, "r", family)?,
            need(k, "k", family)?,
            need_seed()?,
        )?,
        Family::SizeOrder => {
            generators::construct_size_order(need(n, "n", family)?, need(m, "m", family)?, need(r, "r", family)?)?
        }
        Family::CliqueExpansion => generators::clique_expansion(need(n, "n", family)?, need(r, "r", family)?)?,
        Family::GreedyCounterexample => {
            let wh = generators::greedy_counterexample();
            let summary = format!("{}", wh.base());
            return Ok((EXIT_OK, io::serialize_weighted(&wh), summary));
        }
    };
    Ok((EXIT_OK, io::serialize(&h), h.to_string()))
}

fn color(file: &str, mode: Mode, k: Option<usize>, echo: &[String]) -> Dispatched {
    let (parsed, digest) = load(file)?;
    let h = parsed.hypergraph();
    let limits = SearchLimits::default();
    let (name, coloring, extra) = match mode {
        Mode::Weak2 => ("weak2", coloring::weak_two_coloring(h)?, Value::Null),
        Mode::Weak => ("weak", coloring::k_chromatic(h, 2, &limits)?.1, Value::Null),
        Mode::Strong => {
            let (_, c) = coloring::strong_chromatic(h, &limits)?;
            let bound = if is_minimally_connected(h) && h.size() > 1 {
                Some(coloring::best_strong_upper_bound(h)?.0)
            } else {
                None
            };
            ("strong", c, json!(bound))
        }
        Mode::K => {
            let k = k.ok_or_else(|| input_error("--mode k needs --k"))?;
            ("k", coloring::k_chromatic(h, k, &limits)?.1, Value::Null)
        }
    };
    let mut result = json!({
        "mode": name,
        "palette_size": coloring.palette_size(),
        "coloring": coloring.to_map(h),
    });
    if let Some(k) = k.filter(|_| matches!(mode, Mode::K)) {
        result["k"] = json!(k);
    }
    if !extra.is_null() {
        result["upper_bound"] = extra;
    }
    let summary = format!("{name} coloring of {h} uses {} colors", coloring.palette_size());
    Ok((EXIT_OK, render(echo, Some(digest), None, result), summary))
}

/// Outcome of one property trial.
enum Verdict {
    Pass,
    /// The property's hypothesis does not apply to the sampled instance.
    Vacuous,
    Fail { instance: Document, detail: String },
    Limit(String),
}

fn fail(h: &Hypergraph, detail: impl Into<String>) -> Verdict {
    Verdict::Fail { instance: io::to_document(h), detail: detail.into() }
}

fn verdict_from_error(h: &Hypergraph, e: Error) -> Verdict {
    match e {
        Error::ResourceLimit { .. } => Verdict::Limit(e.to_string()),
        other => fail(h, other.to_string()),
    }
}

/// How many counterexamples a check report lists in full.
const LISTED_COUNTEREXAMPLES: usize = 10;

#[allow(clippy::too_many_arguments)]
fn check(
    suite: Suite,
    seed: u64,
    trials: usize,
    r: Option<usize>,
    n: Option<usize>,
    jobs: usize,
    echo: &[String],
) -> Dispatched {
    if jobs == 0 {
        return Err(input_error("--jobs must be at least 1"));
    }
    let params = SuiteParams::new(suite, r, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| rng.gen()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure(EXIT_LIMIT, format!("thread pool: {e}")))?;
    let verdicts: Vec<Verdict> = pool.install(|| seeds.par_iter().map(|&s| params.trial(s)).collect());

    let (mut passed, mut vacuous, mut limited) = (0, 0, 0);
    let mut first_limit = None;
    let mut failures = Vec::new();
    for (i, v) in verdicts.into_iter().enumerate() {
        match v {
            Verdict::Pass => passed += 1,
            Verdict::Vacuous => vacuous += 1,
            Verdict::Limit(why) => {
                limited += 1;
                first_limit.get_or_insert(why);
            }
            Verdict::Fail { instance, detail } => failures.push(json!({
                "trial": i,
                "trial_seed": seeds[i],
                "detail": detail,
                "instance": instance,
            })),
        }
    }
    let failed = failures.len();
    failures.truncate(LISTED_COUNTEREXAMPLES);
    let code = if failed > 0 {
        EXIT_FALSIFIED
    } else if limited > 0 {
        EXIT_LIMIT
    } else {
        EXIT_OK
    };
    let result = json!({
        "suite": suite,
        "r": params.r,
        "n": params.n,
        "trials": trials,
        "passed": passed,
        "vacuous": vacuous,
        "resource_limited": limited,
        "first_limit": first_limit,
        "failed": failed,
        "holds": failed == 0,
        "counterexamples": failures,
    });
    let summary = format!(
        "{suite:?}: {passed} passed, {vacuous} vacuous, {limited} over limits, {failed} failed of {trials}"
    );
    Ok((code, render(echo, None, Some(seed), result), summary))
}

/// Instance parameters of a check suite after defaults are applied.
#[derive(Debug, Clone, Copy)]
struct SuiteParams {
    suite: Suite,
    /// Fixed uniformity, or `None` to draw it per trial.
    r: Option<usize>,
    /// Largest order (or exact order for the complete-hypergraph suites).
    n: usize,
}

impl SuiteParams {
    fn new(suite: Suite, r: Option<usize>, n: Option<usize>) -> std::result::Result<Self, Failure> {
        let (r, n) = match suite {
            Suite::Tightness => (r, n.unwrap_or(10)),
            Suite::SizeBounds => (r, n.unwrap_or(9)),
            Suite::Complement => (Some(r.unwrap_or(3)), n.unwrap_or(6)),
            Suite::Gallai | Suite::Monochromatic => (Some(r.unwrap_or(3)), n.unwrap_or(5)),
            Suite::Rc => (Some(r.unwrap_or(3)), n.unwrap_or(9)),
        };
        let least_r = r.unwrap_or(3);
        if least_r < 2 || r.is_none() && n < 5 || n < least_r {
            return Err(input_error(format!("suite needs n >= r >= 2, got n={n}, r={r:?}")));
        }
        if matches!(suite, Suite::Gallai | Suite::Monochromatic | Suite::Tightness) && least_r < 3 {
            return Err(input_error("suite needs r >= 3"));
        }
        if matches!(suite, Suite::Complement | Suite::Gallai | Suite::Monochromatic) && n > 10 {
            return Err(input_error("complete-hypergraph suites accept n <= 10"));
        }
        Ok(SuiteParams { suite, r, n })
    }

    fn trial(&self, seed: u64) -> Verdict {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = self.r.unwrap_or_else(|| rng.gen_range(3..=5.min(self.n)));
        match self.suite {
            Suite::Tightness => tightness_trial(&mut rng, r, self.n),
            Suite::SizeBounds => size_bounds_trial(&mut rng, r, self.n),
            Suite::Complement => complement_trial(&mut rng, r, self.n),
            Suite::Gallai => gallai_trial(&mut rng, r, self.n),
            Suite::Monochromatic => monochromatic_trial(&mut rng, r, self.n),
            Suite::Rc => rc_trial(&mut rng, r, self.n),
        }
    }
}

const PROCESS_ORDERS: usize = 20;

fn tightness_trial(rng: &mut ChaCha8Rng, r: usize, max_n: usize) -> Verdict {
    let n = rng.gen_range(r..=max_n);
    let host_k = rng.gen_range(1..=2 * n);
    let h = match generators::random_minimally_connected(n, r, host_k, rng.gen()) {
        Ok(h) => h,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    let expected = h.r() * h.size() - h.order();
    for _ in 0..PROCESS_ORDERS {
        match structure::random_constructive_process(&h, ProcessMode::MinimallyConnected, rng.gen()) {
            Some(p) if p.tightness_sum() == expected => {}
            Some(p) => return fail(&h, format!("order {:?} has tightness sum {}, expected {expected}", p.edge_order, p.tightness_sum())),
            None => return fail(&h, "no minimally connected constructive process"),
        }
    }
    Verdict::Pass
}

fn size_bounds_trial(rng: &mut ChaCha8Rng, r: usize, max_n: usize) -> Verdict {
    let n = rng.gen_range(r..=max_n);
    let host_k = rng.gen_range(1..=3 * n);
    let h = match generators::random_connected(n, r, host_k, rng.gen()) {
        Ok(h) => h,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    let m = match minimal_span::spanning_minimally_connected(&h) {
        Ok(m) => m,
        Err(e) => return verdict_from_error(&h, e),
    };
    let (lo, hi) = match structure::size_bounds(h.order(), r) {
        Ok(b) => b,
        Err(e) => return verdict_from_error(&h, e),
    };
    if m.order() != h.order() || !is_minimally_connected(&m) {
        return fail(&h, format!("extraction {m} is not spanning and minimally connected"));
    }
    if !(lo..=hi).contains(&m.size()) {
        return fail(&h, format!("extraction has {} edges, outside [{lo}, {hi}]", m.size()));
    }
    Verdict::Pass
}

/// A random r-uniform hypergraph on exactly `n` vertices: each r-subset
/// kept independently with a per-trial density.
fn random_subhypergraph(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Result<Hypergraph> {
    let k = generators::complete(n, r)?;
    let density: f64 = rng.gen();
    let kept: Vec<usize> = (0..k.size()).filter(|_| rng.gen_bool(density)).collect();
    Ok(k.spanning_subhypergraph(kept))
}

fn complement_trial(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Verdict {
    let h = match random_subhypergraph(rng, n, r) {
        Ok(h) => h,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    match complement_property(&h) {
        Ok(v) => v,
        Err(e) => verdict_from_error(&h, e),
    }
}

/// Disconnected: the complement is connected, of diameter 1, and covers every
/// pair. Connected with diameter at least 2: the complement has diameter 1.
fn complement_property(h: &Hypergraph) -> Result<Verdict> {
    let c = complement(h)?;
    if !is_connected(h) {
        if !is_connected(&c) {
            return Ok(fail(h, format!("complement {c} of a disconnected hypergraph is disconnected")));
        }
        if connectivity::diameter(&c)? != 1 {
            return Ok(fail(h, format!("complement {c} of a disconnected hypergraph has diameter above 1")));
        }
        if coloring::two_section(&c).iter().any(|adj| adj.len() != c.order() - 1) {
            return Ok(fail(h, format!("complement {c} leaves a pair uncovered")));
        }
        return Ok(Verdict::Pass);
    }
    if connectivity::diameter(h)? < 2 {
        return Ok(Verdict::Vacuous);
    }
    if !is_connected(&c) {
        return Ok(fail(h, format!("complement {c} of a diameter >= 2 hypergraph is disconnected")));
    }
    let d = connectivity::diameter(&c)?;
    if d != 1 {
        return Ok(fail(h, format!("complement {c} has diameter {d}")));
    }
    Ok(Verdict::Pass)
}

/// Rejection-sampling budget for one Gallai coloring.
const GALLAI_ATTEMPTS: usize = 1_000;

fn gallai_trial(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Verdict {
    let k = match generators::complete(n, r) {
        Ok(k) => k,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    let t = r + 1;
    for _ in 0..GALLAI_ATTEMPTS {
        let c = coloring::random_edge_coloring(&k, t, rng.gen());
        match coloring::is_gallai_coloring(&k, &c) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(e) => return verdict_from_error(&k, e),
        }
        return match coloring::spanning_color(&k, &c) {
            Ok(_) => Verdict::Pass,
            Err(e) => colored_failure(&k, &c, e),
        };
    }
    Verdict::Limit(format!("no Gallai coloring found in {GALLAI_ATTEMPTS} samples"))
}

fn monochromatic_trial(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Verdict {
    let k = match generators::complete(n, r) {
        Ok(k) => k,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    let c = coloring::random_edge_coloring(&k, 2, rng.gen());
    match coloring::monochromatic_spanning_minconn(&k, &c) {
        Ok(_) => Verdict::Pass,
        Err(e) => colored_failure(&k, &c, e),
    }
}

fn colored_failure(k: &Hypergraph, c: &EdgeColoring, e: Error) -> Verdict {
    if let Error::ResourceLimit { .. } = e {
        return Verdict::Limit(e.to_string());
    }
    let colors: Vec<String> = c.colors().iter().map(usize::to_string).collect();
    fail(k, format!("{e}; edge colors {}", colors.join(",")))
}

/// Largest edge count sampled by the rainbow connection suite.
const RC_MAX_EDGES: usize = 5;

fn rc_trial(rng: &mut ChaCha8Rng, r: usize, max_n: usize) -> Verdict {
    let k = rng.gen_range(1..=RC_MAX_EDGES);
    let n = rng.gen_range(r..=max_n);
    let h = match generators::random_connected(n, r, k, rng.gen()) {
        Ok(h) => h,
        Err(e) => return Verdict::Limit(e.to_string()),
    };
    match coloring::rainbow_connection_number(&h, &SearchLimits::default()) {
        Ok(rc) if h.size() == 1 && rc != 1 => fail(&h, format!("single edge has rc {rc}")),
        Ok(rc) if rc > h.order() - r + 1 => fail(&h, format!("rc {rc} exceeds n - r + 1 = {}", h.order() - r + 1)),
        Ok(_) => Verdict::Pass,
        Err(e) => verdict_from_error(&h, e),
    }
}
