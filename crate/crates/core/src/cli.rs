//! Command-line front end: `run`, `replay`, `verify` and `analyze`.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 step cap reached,
//! 3 corrupt record. The binary is a thin wrapper around [`run_cli`], so
//! everything here can be driven in-process with captured output.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::{growth_ratio, DyckCountTable};
use crate::engine::{run_with, Color, PartialColoring, RunOptions};
use crate::graph::{generate, parse_dimacs, Family, Graph};
use crate::params::{Kappa, Mode};
use crate::records::{cycle_count_histogram, replay_full, RecordFile};
use crate::rng::SeededRng;
use crate::verify::verify_optional;
use crate::Instance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_STEP_CAP: i32 = 2;
pub const EXIT_CORRUPT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "acyclic-color", version, about = "Randomized acyclic coloring with invertible records")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a graph and optionally write the coloring and record.
    Run(RunArgs),
    /// Rebuild every step of a run from its final coloring and record.
    Replay(ReplayArgs),
    /// Check that a coloring is acyclic.
    Verify(VerifyArgs),
    /// Tabular analyses on standard output.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Empty,
    Path,
    Cycle,
    Complete,
    #[value(name = "complete_bipartite", alias = "complete-bipartite")]
    CompleteBipartite,
    Hypercube,
    #[value(name = "random_regular", alias = "random-regular")]
    RandomRegular,
    #[value(name = "erdos_renyi", alias = "erdos-renyi")]
    ErdosRenyi,
}

#[derive(Debug, Clone, Args)]
struct GraphSource {
    /// DIMACS graph file.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Generated graph family.
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    #[arg(long)]
    n: Option<usize>,
    /// Degree for random_regular.
    #[arg(long)]
    d: Option<usize>,
    /// Edge probability for erdos_renyi.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    left: Option<usize>,
    #[arg(long)]
    right: Option<usize>,
    #[arg(long)]
    dim: Option<u32>,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    graph_seed: u64,
}

#[derive(Debug, Clone, Args)]
struct AlgoArgs {
    /// Rational `a/b` or decimal; defaults to 10583/10000 raised as needed.
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long, default_value = "safe")]
    mode: Mode,
    /// Fail instead of raising an inadmissible kappa.
    #[arg(long)]
    strict_kappa: bool,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[command(flatten)]
    source: GraphSource,
    #[command(flatten)]
    algo: AlgoArgs,
    #[arg(long, env = "ACRC_SEED", default_value_t = 0)]
    seed: u64,
    /// Defaults to 50 n.
    #[arg(long)]
    step_cap: Option<u64>,
    #[arg(long)]
    emit_record: Option<PathBuf>,
    #[arg(long)]
    emit_coloring: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Include wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    record: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    coloring: PathBuf,
}

#[derive(Debug, Subcommand)]
enum AnalyzeCommand {
    /// Counts of Dyck words with even descents: `t,count,ratio`.
    Dyck {
        #[arg(long, default_value_t = 20)]
        t_max: usize,
    },
    /// Catalog sizes against the cycle-count bound: `v,k,count,bound,margin,holds`.
    Bounds {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        algo: AlgoArgs,
        /// Longest cycle length searched; defaults to n.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Independent runs with record sizes against the entropy of the draws.
    Bench {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        algo: AlgoArgs,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, env = "ACRC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        step_cap: Option<u64>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

type CliResult = Result<i32, Failure>;

/// Report printed by `run`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub delta: u64,
    pub kappa: String,
    pub mode: Mode,
    pub palette: u64,
    pub list_size: u64,
    pub d_max: u64,
    pub f_approx: f64,
    pub seed: u64,
    pub terminated: bool,
    pub steps: u64,
    pub uncolorings: u64,
    /// Uncolored cycle length -> count.
    pub cycle_lengths: BTreeMap<usize, u64>,
    pub colors_used: usize,
    pub r1_bits: u64,
    pub r2_bits: u64,
    pub r1_bytes: u64,
    pub r2_bytes: u64,
    pub record_file_bytes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Parses `args` (including the program name) and executes the command.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Run(a) => cmd_run(a, out, err),
        Command::Replay(a) => cmd_replay(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Analyze(a) => cmd_analyze(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn out_err(e: std::io::Error) -> Failure {
    usage(format!("writing output: {e}"))
}

fn load_graph(src: &GraphSource) -> Result<(Graph, String), Failure> {
    if let Some(path) = &src.graph {
        let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        let g = parse_dimacs(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok((g, path.display().to_string()));
    }
    let name = src.family.ok_or_else(|| usage("either --graph or --family is required"))?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--{flag} is required for this family")));
    let family = match name {
        FamilyName::Empty => Family::Empty { n: need(src.n, "n")? },
        FamilyName::Path => Family::Path { n: need(src.n, "n")? },
        FamilyName::Cycle => Family::Cycle { n: need(src.n, "n")? },
        FamilyName::Complete => Family::Complete { n: need(src.n, "n")? },
        FamilyName::CompleteBipartite => {
            Family::CompleteBipartite { left: need(src.left, "left")?, right: need(src.right, "right")? }
        }
        FamilyName::Hypercube => Family::Hypercube { dim: src.dim.ok_or_else(|| usage("--dim is required"))? },
        FamilyName::RandomRegular => Family::RandomRegular { n: need(src.n, "n")?, d: need(src.d, "d")? },
        FamilyName::ErdosRenyi => {
            Family::ErdosRenyi { n: need(src.n, "n")?, p: src.p.ok_or_else(|| usage("--p is required"))? }
        }
    };
    let g = generate(&family, src.graph_seed).map_err(usage)?;
    let descr = match family {
        Family::RandomRegular { .. } | Family::ErdosRenyi { .. } => format!("{family} seed={}", src.graph_seed),
        _ => family.to_string(),
    };
    Ok((g, descr))
}

fn effective_delta(g: &Graph) -> u64 {
    g.max_degree().max(1) as u64
}

fn resolve_kappa(algo: &AlgoArgs, delta: u64, err: &mut dyn Write) -> Result<Kappa, Failure> {
    let Some(text) = &algo.kappa else { return Ok(Kappa::default_for(delta)) };
    let kappa = Kappa::parse(text).map_err(usage)?;
    if kappa.admissible_for(delta) {
        return Ok(kappa);
    }
    let minimal = Kappa::minimal_for(delta);
    if algo.strict_kappa {
        return Err(usage(format!(
            "kappa {kappa} violates kappa^3 * delta^2 >= 8 for delta = {delta}; the smallest valid value is {minimal}"
        )));
    }
    let _ = writeln!(
        err,
        "warning: kappa {kappa} is too small for delta = {delta}; raised to the minimal valid value {minimal} ({:.4})",
        minimal.as_f64()
    );
    Ok(minimal)
}

fn build_instance(src: &GraphSource, algo: &AlgoArgs, err: &mut dyn Write) -> Result<(Instance, String), Failure> {
    let (g, descr) = load_graph(src)?;
    let kappa = resolve_kappa(algo, effective_delta(&g), err)?;
    let inst = Instance::new(g, kappa, algo.mode).map_err(usage)?;
    Ok((inst, descr))
}

fn write_coloring(path: &Path, c: &PartialColoring) -> Result<(), Failure> {
    let json = serde_json::to_string(c.as_slice()).expect("colors serialize");
    std::fs::write(path, json + "\n").map_err(|e| io_err(path, e))
}

fn read_coloring(path: &Path, n: usize) -> Result<PartialColoring, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let colors: Vec<Option<Color>> =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if colors.len() != n {
        return Err(usage(format!("{}: {} entries for a graph with {n} vertices", path.display(), colors.len())));
    }
    if colors.iter().flatten().any(|&c| c == 0) {
        return Err(usage(format!("{}: colors start at 1", path.display())));
    }
    Ok(PartialColoring::from_colors(colors))
}

fn cmd_run(a: RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (inst, input) = build_instance(&a.source, &a.algo, err)?;
    let started = Instant::now();
    let opts = RunOptions { step_cap: a.step_cap, ..RunOptions::default() };
    let run = run_with(&inst, &mut SeededRng::new(a.seed), &opts, |_, _, _| {}).map_err(usage)?;
    let elapsed = started.elapsed();
    let p = &inst.params;
    let file = RecordFile {
        delta: p.delta,
        kappa: p.kappa,
        mode: p.mode,
        n: inst.graph.n() as u64,
        seed: a.seed,
        record: run.record.clone(),
    };
    let bytes = file.encode();
    if let Some(path) = &a.emit_record {
        std::fs::write(path, &bytes).map_err(|e| io_err(path, e))?;
    }
    if let Some(path) = &a.emit_coloring {
        write_coloring(path, &run.coloring)?;
    }
    let rec = &run.record;
    let report = RunReport {
        input,
        n: inst.graph.n(),
        m: inst.graph.m(),
        delta: p.delta,
        kappa: p.kappa.to_string(),
        mode: p.mode,
        palette: p.palette,
        list_size: p.list_size,
        d_max: p.d_max,
        f_approx: p.f_approx,
        seed: a.seed,
        terminated: run.stats.terminated,
        steps: run.stats.steps,
        uncolorings: run.stats.uncolorings,
        cycle_lengths: run.stats.cycle_lengths.clone(),
        colors_used: run.coloring.colors_used(),
        r1_bits: rec.r1_bits(),
        r2_bits: rec.r2_bits(),
        r1_bytes: rec.r1_bits().div_ceil(8),
        r2_bytes: rec.r2_bits().div_ceil(8),
        record_file_bytes: bytes.len(),
        wall_time_ms: a.timing.then_some(elapsed.as_secs_f64() * 1e3),
    };
    if a.json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        writeln!(out, "{text}").map_err(out_err)?;
    } else {
        write_report_text(&report, out).map_err(out_err)?;
    }
    Ok(if report.terminated { EXIT_OK } else { EXIT_STEP_CAP })
}

fn write_report_text(r: &RunReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "input        {}", r.input)?;
    writeln!(out, "graph        n={} m={} delta={}", r.n, r.m, r.delta)?;
    writeln!(out, "params       kappa={} mode={} palette={} list={} d_max={} f~{:.4}", r.kappa, r.mode, r.palette, r.list_size, r.d_max, r.f_approx)?;
    writeln!(out, "seed         {}", r.seed)?;
    writeln!(out, "terminated   {}", r.terminated)?;
    writeln!(out, "steps        {} ({} vertices uncolored in total)", r.steps, r.uncolorings)?;
    let hist: Vec<String> = r.cycle_lengths.iter().map(|(len, c)| format!("{len}:{c}")).collect();
    writeln!(out, "cycles       {}", if hist.is_empty() { "-".to_string() } else { hist.join(" ") })?;
    writeln!(out, "colors used  {}", r.colors_used)?;
    writeln!(out, "record       r1={} bits r2={} bits file={} bytes", r.r1_bits, r.r2_bits, r.record_file_bytes)?;
    if let Some(ms) = r.wall_time_ms {
        writeln!(out, "wall time    {ms:.3} ms")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct FrameRow<'a> {
    step: usize,
    #[serde(flatten)]
    frame: &'a crate::ReplayFrame,
}

fn cmd_replay(a: ReplayArgs, out: &mut dyn Write) -> CliResult {
    let (g, _) = load_graph(&a.source)?;
    let bytes = std::fs::read(&a.record).map_err(|e| io_err(&a.record, e))?;
    let file = RecordFile::decode(&bytes).map_err(|e| Failure { code: EXIT_CORRUPT, message: e.to_string() })?;
    if file.n != g.n() as u64 {
        return Err(usage(format!("record is for {} vertices, graph has {}", file.n, g.n())));
    }
    if file.delta != effective_delta(&g) {
        return Err(usage(format!("record is for delta = {}, graph has delta = {}", file.delta, effective_delta(&g))));
    }
    let inst = Instance::new(g, file.kappa, file.mode).map_err(usage)?;
    let last = read_coloring(&a.coloring, inst.graph.n())?;
    let frames = replay_full(&last, &file.record, &inst)
        .map_err(|e| Failure { code: EXIT_CORRUPT, message: e.to_string() })?;
    if a.json {
        let rows: Vec<FrameRow> = frames.iter().enumerate().map(|(i, frame)| FrameRow { step: i + 1, frame }).collect();
        let text = serde_json::to_string_pretty(&rows).expect("frames serialize");
        writeln!(out, "{text}").map_err(out_err)?;
    } else {
        for (i, f) in frames.iter().enumerate() {
            match &f.cycle {
                None => writeln!(out, "{} v={} x={} kept", i + 1, f.vertex, f.color),
                Some(id) => writeln!(out, "{} v={} x={} uncolored {}", i + 1, f.vertex, f.color, id),
            }
            .map_err(out_err)?;
        }
        writeln!(out, "replayed {} steps back to the empty coloring", frames.len()).map_err(out_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult {
    let (g, _) = load_graph(&a.source)?;
    let c = read_coloring(&a.coloring, g.n())?;
    let report = verify_optional(&g, c.as_slice()).map_err(usage)?;
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    writeln!(out, "{text}").map_err(out_err)?;
    Ok(if report.acyclic { EXIT_OK } else { EXIT_USAGE })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct BenchRow {
    trial: u64,
    seed: u64,
    terminated: bool,
    t: u64,
    u_t: u64,
    colors_used: usize,
    record_bits: u64,
}

fn cmd_analyze(a: AnalyzeCommand, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match a {
        AnalyzeCommand::Dyck { t_max } => {
            let table = DyckCountTable::build(t_max);
            writeln!(out, "t,count,ratio").map_err(out_err)?;
            for t in 1..=t_max {
                let count = table.dyck(t);
                writeln!(out, "{t},{count},{:.6}", growth_ratio(count, t)).map_err(out_err)?;
            }
            Ok(EXIT_OK)
        }
        AnalyzeCommand::Bounds { source, algo, max_len } => {
            let (inst, _) = build_instance(&source, &algo, err)?;
            let g = &inst.graph;
            let max_len = max_len.unwrap_or(g.n()).min(g.n());
            let mut all_hold = true;
            writeln!(out, "v,k,count,bound,margin,holds").map_err(out_err)?;
            for v in g.vertices() {
                let hist = cycle_count_histogram(g, &inst.dangerous, v, max_len);
                for k in 2..=max_len / 2 {
                    let count = hist.get(&k).copied().unwrap_or(0);
                    let bound = inst.params.cycle_count_bound_f64(k);
                    let holds = inst.params.cycle_count_within_bound(count, k);
                    all_hold &= holds;
                    writeln!(out, "{v},{k},{count},{bound:.4},{:.4},{holds}", bound - count as f64).map_err(out_err)?;
                }
            }
            Ok(if all_hold { EXIT_OK } else { EXIT_USAGE })
        }
        AnalyzeCommand::Bench { source, algo, trials, seed, step_cap } => {
            let (inst, _) = build_instance(&source, &algo, err)?;
            let opts = RunOptions { step_cap, audit: false };
            let rows: Vec<Result<BenchRow, String>> = (0..trials)
                .into_par_iter()
                .map(|trial| {
                    let mut rng = SeededRng::for_stream(seed, trial);
                    let run = run_with(&inst, &mut rng, &opts, |_, _, _| {}).map_err(|e| e.to_string())?;
                    Ok(BenchRow {
                        trial,
                        seed,
                        terminated: run.stats.terminated,
                        t: run.stats.steps,
                        u_t: run.record.u_total(),
                        colors_used: run.coloring.colors_used(),
                        record_bits: run.record.r1_bits() + run.record.r2_bits(),
                    })
                })
                .collect();
            let log_l = (inst.params.list_size as f64).log2();
            writeln!(out, "trial,seed,terminated,t,u_t,colors_used,record_bits,entropy_bits").map_err(out_err)?;
            for row in rows {
                let r = row.map_err(usage)?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{:.3}",
                    r.trial, r.seed, r.terminated, r.t, r.u_t, r.colors_used, r.record_bits, r.t as f64 * log_l
                )
                .map_err(out_err)?;
            }
            Ok(EXIT_OK)
        }
    }
}
