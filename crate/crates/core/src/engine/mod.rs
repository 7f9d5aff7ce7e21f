//! The extension step and the driver loop around it.
//!
//! Each step takes the smallest uncolored vertex `v`, draws a color `x`
//! uniformly from its candidate list and tries `v -> x`. If that closes one
//! or more two-colored cycles, the longest one (ties broken by the smallest
//! identifier) is partly uncolored instead: every vertex of the cycle except
//! `v`, `w2` and `w3` loses its color, and `v` stays uncolored.

mod coloring;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use coloring::{Color, PartialColoring};

use crate::graph::{DangerousSets, Graph, Vertex};
use crate::params::{AlgoParams, Mode};
use crate::records::{cycle_identifier, CycleId, Record, RecordError};
use crate::rng::SeededRng;
use crate::Instance;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("every vertex is already colored")]
    NothingToColor,
    #[error("vertex {vertex} has only {available} candidate colors, {needed} required ({mode} mode)")]
    CandidateListShort { vertex: Vertex, available: usize, needed: usize, mode: Mode },
    #[error("vertex {0} is already colored")]
    AlreadyColored(Vertex),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error("invariant violated after step {step}: {message}")]
    InvariantViolation { step: u64, message: String },
}

/// Source of the uniform choice made at every step.
pub trait ColorSource {
    /// An index in `0..len`.
    fn choose(&mut self, len: usize) -> usize;
}

impl ColorSource for SeededRng {
    fn choose(&mut self, len: usize) -> usize {
        self.index(len)
    }
}

/// Replays a fixed list of choices; panics when the script runs out.
#[derive(Debug, Clone, Default)]
pub struct Scripted(std::collections::VecDeque<usize>);

impl Scripted {
    pub fn new(choices: impl IntoIterator<Item = usize>) -> Self {
        Self(choices.into_iter().collect())
    }
}

impl ColorSource for Scripted {
    fn choose(&mut self, len: usize) -> usize {
        let i = self.0.pop_front().expect("scripted choices exhausted");
        assert!(i < len, "scripted choice {i} outside list of length {len}");
        i
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StepResult {
    Kept,
    Uncolored {
        cycle: CycleId,
        /// Half the cycle length.
        k: usize,
        /// 1-based position of `cycle` in the catalog of `2k`-cycles through the vertex.
        z: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub vertex: Vertex,
    pub color: Color,
    pub result: StepResult,
}

impl StepOutcome {
    /// Vertex-uncolorings performed by this step, `2k - 2` or 0.
    pub fn uncolorings(&self) -> u64 {
        match &self.result {
            StepResult::Kept => 0,
            StepResult::Uncolored { k, .. } => 2 * *k as u64 - 2,
        }
    }
}

/// The palette minus the colors on `N(v)` and `D(v)`, truncated to the
/// `list_size` smallest colors.
pub fn candidate_list(
    c: &PartialColoring,
    v: Vertex,
    g: &Graph,
    params: &AlgoParams,
    dangerous: &DangerousSets,
) -> Result<Vec<Color>, EngineError> {
    if c.is_colored(v) {
        return Err(EngineError::AlreadyColored(v));
    }
    let blocked: BTreeSet<Color> =
        g.neighbors(v).iter().chain(dangerous.of(v)).filter_map(|&u| c.get(u)).collect();
    let needed = params.list_size as usize;
    let list: Vec<Color> =
        (1..=params.palette as Color).filter(|x| !blocked.contains(x)).take(needed).collect();
    if list.len() < needed {
        return Err(EngineError::CandidateListShort { vertex: v, available: list.len(), needed, mode: params.mode });
    }
    Ok(list)
}

/// All cycles through `v` that become two-colored once `v` gets color `x`.
///
/// For every color `y` on the neighborhood, the vertices colored `x` or `y`
/// induce a forest. Two `y`-colored neighbors of `v` in the same tree are
/// joined by exactly one tree path, which closes exactly one cycle through `v`.
/// The result is sorted.
pub fn find_bichromatic_cycles(c: &PartialColoring, v: Vertex, x: Color, g: &Graph) -> Vec<CycleId> {
    debug_assert!(!c.is_colored(v));
    let mut by_color: BTreeMap<Color, Vec<Vertex>> = BTreeMap::new();
    for &u in g.neighbors(v) {
        if let Some(y) = c.get(u) {
            assert_ne!(y, x, "color {x} is already on a neighbor of {v}");
            by_color.entry(y).or_default().push(u);
        }
    }
    let mut parent = vec![0usize; g.n() + 1];
    let mut cycles = Vec::new();
    for (y, ends) in by_color {
        if ends.len() < 2 {
            continue;
        }
        for (i, &start) in ends.iter().enumerate() {
            let reached = tree_bfs(c, g, start, v, x, y, &mut parent);
            for &end in &ends[i + 1..] {
                if parent[end] == 0 {
                    continue;
                }
                let mut path = vec![end];
                let mut cur = end;
                while cur != start {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                cycles.push(cycle_identifier(v, &path).expect("tree path closes a simple even cycle"));
            }
            for u in reached {
                parent[u] = 0;
            }
        }
    }
    cycles.sort();
    cycles.dedup();
    cycles
}

// Breadth-first search from `start` through vertices colored x or y, skipping
// `v`. Fills `parent` for every reached vertex except `start`; returns them.
fn tree_bfs(
    c: &PartialColoring,
    g: &Graph,
    start: Vertex,
    v: Vertex,
    x: Color,
    y: Color,
    parent: &mut [usize],
) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut head = 0;
    parent[start] = usize::MAX;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if w == v || parent[w] != 0 {
                continue;
            }
            if matches!(c.get(w), Some(col) if col == x || col == y) {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    parent[start] = 0;
    order
}

/// The longest cycle, ties broken by the lexicographically smallest identifier.
pub fn select_uncolor_target(cycles: &[CycleId]) -> Option<&CycleId> {
    cycles.iter().min_by(|a, b| b.cycle_len().cmp(&a.cycle_len()).then_with(|| a.cmp(b)))
}

/// One extension step on a copy of `c`.
pub fn extend_step(
    c: &PartialColoring,
    source: &mut dyn ColorSource,
    inst: &Instance,
) -> Result<(PartialColoring, StepOutcome), EngineError> {
    let mut next = c.clone();
    let outcome = extend_in_place(&mut next, source, inst)?;
    Ok((next, outcome))
}

pub fn extend_in_place(
    c: &mut PartialColoring,
    source: &mut dyn ColorSource,
    inst: &Instance,
) -> Result<StepOutcome, EngineError> {
    let v = c.smallest_uncolored().ok_or(EngineError::NothingToColor)?;
    let list = candidate_list(c, v, &inst.graph, &inst.params, &inst.dangerous)?;
    let x = list[source.choose(list.len())];
    let cycles = find_bichromatic_cycles(c, v, x, &inst.graph);
    let Some(target) = select_uncolor_target(&cycles) else {
        c.set(v, x);
        return Ok(StepOutcome { vertex: v, color: x, result: StepResult::Kept });
    };
    let k = target.half_len();
    let z = inst.catalog.index_of(&inst.graph, &inst.dangerous, v, target)?;
    for &w in target.cleared() {
        c.clear(w);
    }
    Ok(StepOutcome { vertex: v, color: x, result: StepResult::Uncolored { cycle: target.clone(), k, z } })
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Defaults to `50 n` (at least 1).
    pub step_cap: Option<u64>,
    /// Re-verify every invariant after every step.
    pub audit: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { step_cap: None, audit: cfg!(debug_assertions) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    pub steps: u64,
    pub uncolorings: u64,
    /// Uncolored cycle length -> number of such steps.
    pub cycle_lengths: BTreeMap<usize, u64>,
    pub terminated: bool,
}

#[derive(Debug, Clone)]
pub struct Run {
    pub coloring: PartialColoring,
    pub record: Record,
    pub stats: RunStats,
    pub outcomes: Vec<StepOutcome>,
}

pub fn default_step_cap(n: usize) -> u64 {
    (50 * n as u64).max(1)
}

/// Runs from the empty coloring with the ChaCha stream 0 of `seed`.
pub fn run_until_colored(inst: &Instance, seed: u64, step_cap: Option<u64>) -> Result<Run, EngineError> {
    let opts = RunOptions { step_cap, ..RunOptions::default() };
    run_with(inst, &mut SeededRng::new(seed), &opts, |_, _, _| {})
}

/// Repeats extension and logging until every vertex is colored or the step
/// cap is hit. `observer` sees the state after every step.
pub fn run_with<F>(
    inst: &Instance,
    source: &mut dyn ColorSource,
    opts: &RunOptions,
    mut observer: F,
) -> Result<Run, EngineError>
where
    F: FnMut(&PartialColoring, &Record, &StepOutcome),
{
    let cap = opts.step_cap.unwrap_or_else(|| default_step_cap(inst.graph.n()));
    let mut coloring = PartialColoring::new(inst.graph.n());
    let mut record = Record::new();
    let mut stats = RunStats::default();
    let mut outcomes = Vec::new();
    while !coloring.is_complete() && stats.steps < cap {
        let outcome = extend_in_place(&mut coloring, source, inst)?;
        record.push(&outcome, &inst.params)?;
        stats.steps += 1;
        if let StepResult::Uncolored { k, .. } = outcome.result {
            stats.uncolorings += outcome.uncolorings();
            *stats.cycle_lengths.entry(2 * k).or_default() += 1;
        }
        if opts.audit {
            audit_step(inst, &coloring, &record, &outcome)
                .map_err(|message| EngineError::InvariantViolation { step: stats.steps, message })?;
        }
        observer(&coloring, &record, &outcome);
        outcomes.push(outcome);
    }
    stats.terminated = coloring.is_complete();
    Ok(Run { coloring, record, stats, outcomes })
}

/// Full consistency audit of the state reached after one step.
pub fn audit_step(
    inst: &Instance,
    c: &PartialColoring,
    rec: &Record,
    outcome: &StepOutcome,
) -> Result<(), String> {
    let g = &inst.graph;
    if let Some(witness) = crate::verify::partial_violation(g, c) {
        return Err(format!("coloring is not partial acyclic: {witness:?}"));
    }
    for v in g.vertices() {
        let Some(col) = c.get(v) else { continue };
        if let Some(&u) = inst.dangerous.of(v).iter().find(|&&u| c.get(u) == Some(col)) {
            return Err(format!("dangerous pair {v},{u} shares color {col}"));
        }
    }
    if (outcome.color as u64) > inst.params.palette || outcome.color == 0 {
        return Err(format!("color {} outside the palette", outcome.color));
    }
    if let StepResult::Uncolored { cycle, k, .. } = &outcome.result {
        if *k < 2 || cycle.cycle_len() != 2 * k {
            return Err(format!("cycle {cycle} does not have length {}", 2 * k));
        }
        if !crate::records::is_catalog_member(g, &inst.dangerous, outcome.vertex, cycle) {
            return Err(format!("cycle {cycle} is not in the catalog of {}", outcome.vertex));
        }
    }
    rec.check_invariants(c.colored_count(), &inst.params).map_err(|e| e.to_string())?;
    if rec.u_total() >= rec.t() {
        return Err(format!("U_t = {} is not below t = {}", rec.u_total(), rec.t()));
    }
    Ok(())
}
