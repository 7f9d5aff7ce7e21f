//! Running a record backwards.
//!
//! Going forward through `r1` and the digits of `r2` tells, for every step,
//! which vertex was attempted and which cycle (if any) was uncolored. Going
//! backward from the final coloring then restores each earlier coloring and
//! the color drawn at each step.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{decode_steps, pop_last_step, CycleId, Record, RecordError, ReplayError, StepCode};
use crate::engine::{candidate_list, find_bichromatic_cycles, select_uncolor_target, Color, PartialColoring, StepOutcome, StepResult};
use crate::graph::Vertex;
use crate::Instance;

/// One reconstructed step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplayFrame {
    pub vertex: Vertex,
    pub color: Color,
    /// The uncolored cycle, `None` when the color was kept.
    pub cycle: Option<CycleId>,
}

impl From<&StepOutcome> for ReplayFrame {
    fn from(out: &StepOutcome) -> Self {
        let cycle = match &out.result {
            StepResult::Kept => None,
            StepResult::Uncolored { cycle, .. } => Some(cycle.clone()),
        };
        Self { vertex: out.vertex, color: out.color, cycle }
    }
}

/// Attempted vertex and uncolored cycle of one step, without the color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedStep {
    pub vertex: Vertex,
    pub cycle: Option<CycleId>,
}

fn corrupt(msg: impl Into<String>) -> RecordError {
    RecordError::Corrupt(msg.into())
}

fn at(step: usize) -> impl FnOnce(RecordError) -> ReplayError {
    move |source| ReplayError { step: step as u64, source }
}

/// Forward pass over the record: tracks the uncolored set and decodes each
/// uncolored cycle from its catalog index.
pub fn decode_trace(rec: &Record, inst: &Instance) -> Result<(Vec<DecodedStep>, BTreeSet<Vertex>), ReplayError> {
    let codes = decode_steps(rec, &inst.params).map_err(at(rec.t() as usize))?;
    let mut uncolored: BTreeSet<Vertex> = inst.graph.vertices().collect();
    let mut steps = Vec::with_capacity(codes.len());
    for (i, code) in codes.into_iter().enumerate() {
        let step = i + 1;
        let v = *uncolored.first().ok_or_else(|| at(step)(corrupt("record continues after every vertex is colored")))?;
        match code {
            StepCode::Kept => {
                uncolored.remove(&v);
                steps.push(DecodedStep { vertex: v, cycle: None });
            }
            StepCode::Uncolored { k, z } => {
                let id = inst.catalog.identifier_at(&inst.graph, &inst.dangerous, v, k, z).map_err(at(step))?;
                if id.vertices().iter().any(|w| uncolored.contains(w)) {
                    return Err(at(step)(corrupt(format!("cycle {id} runs through an uncolored vertex"))));
                }
                uncolored.extend(id.cleared().iter().copied());
                steps.push(DecodedStep { vertex: v, cycle: Some(id) });
            }
        }
    }
    Ok((steps, uncolored))
}

/// The set of uncolored vertices after the steps in `rec`.
pub fn reconstruct_uncolored_set(rec: &Record, inst: &Instance) -> Result<BTreeSet<Vertex>, RecordError> {
    decode_trace(rec, inst).map(|(_, set)| set).map_err(|e| e.source)
}

/// Inverts one step on the coloring: returns the coloring before the step
/// and the color that was drawn.
///
/// For a kept step the drawn color sits on the vertex itself. For an
/// uncolored cycle `w2 ... w2k` it is the color of `w3`, and the cleared
/// vertices alternate between the colors of `w2` and `w3`.
pub fn undo_step(after: &PartialColoring, step: &DecodedStep) -> Result<(PartialColoring, Color), RecordError> {
    let v = step.vertex;
    let mut before = after.clone();
    match &step.cycle {
        None => {
            let x = after.get(v).ok_or_else(|| corrupt(format!("vertex {v} should be colored")))?;
            before.clear(v);
            Ok((before, x))
        }
        Some(id) => {
            if after.is_colored(v) {
                return Err(corrupt(format!("vertex {v} should be uncolored")));
            }
            let (y, x) = match (after.get(id.w(2)), after.get(id.w(3))) {
                (Some(y), Some(x)) => (y, x),
                _ => return Err(corrupt(format!("w2 and w3 of cycle {id} should be colored"))),
            };
            for i in 4..=id.cycle_len() {
                let w = id.w(i);
                if after.is_colored(w) {
                    return Err(corrupt(format!("vertex {w} of cycle {id} should be uncolored")));
                }
                before.set(w, if i % 2 == 0 { y } else { x });
            }
            Ok((before, x))
        }
    }
}

// Forward consistency of a reconstructed step: x was a legal draw and the
// engine would have produced exactly this outcome from `before`.
fn check_forward(before: &PartialColoring, step: &DecodedStep, x: Color, inst: &Instance) -> Result<(), RecordError> {
    let list = candidate_list(before, step.vertex, &inst.graph, &inst.params, &inst.dangerous)
        .map_err(|e| corrupt(e.to_string()))?;
    if !list.contains(&x) {
        return Err(corrupt(format!("color {x} was not a candidate for vertex {}", step.vertex)));
    }
    let cycles = find_bichromatic_cycles(before, step.vertex, x, &inst.graph);
    if select_uncolor_target(&cycles) != step.cycle.as_ref() {
        return Err(corrupt(format!("the recorded outcome at vertex {} does not match the coloring", step.vertex)));
    }
    Ok(())
}

/// One step back: the previous record, the previous coloring and the frame
/// of the step that was undone.
pub fn reconstruct_previous(
    rec: &Record,
    after: &PartialColoring,
    inst: &Instance,
) -> Result<(Record, PartialColoring, ReplayFrame), RecordError> {
    let popped = pop_last_step(rec, &inst.params)?;
    let before_set = reconstruct_uncolored_set(&popped.previous, inst)?;
    let v = *before_set.first().ok_or_else(|| corrupt("no vertex was uncolored before the last step"))?;
    let cycle = match popped.z {
        None => None,
        Some(z) => {
            let k = popped.q / 2 + 1;
            Some(inst.catalog.identifier_at(&inst.graph, &inst.dangerous, v, k, z)?)
        }
    };
    let step = DecodedStep { vertex: v, cycle };
    let (before, x) = undo_step(after, &step)?;
    if before.uncolored() != &before_set {
        return Err(corrupt("coloring does not match the uncolored set implied by the record"));
    }
    check_forward(&before, &step, x, inst)?;
    Ok((popped.previous, before, ReplayFrame { vertex: v, color: x, cycle: step.cycle }))
}

/// Reconstructs every step of a run, in forward order, from its final
/// coloring and record. Fails unless the walk ends at the empty coloring.
pub fn replay_full(last: &PartialColoring, rec: &Record, inst: &Instance) -> Result<Vec<ReplayFrame>, ReplayError> {
    let t = rec.t() as usize;
    if last.n() != inst.graph.n() {
        return Err(at(t)(corrupt(format!("coloring has {} vertices, graph has {}", last.n(), inst.graph.n()))));
    }
    let (steps, final_set) = decode_trace(rec, inst)?;
    if last.uncolored() != &final_set {
        return Err(at(t)(corrupt("final coloring does not match the uncolored set implied by the record")));
    }
    let mut frames = Vec::with_capacity(t);
    let mut cur = last.clone();
    for (i, step) in steps.iter().enumerate().rev() {
        let (before, x) = undo_step(&cur, step).map_err(at(i + 1))?;
        check_forward(&before, step, x, inst).map_err(at(i + 1))?;
        frames.push(ReplayFrame { vertex: step.vertex, color: x, cycle: step.cycle.clone() });
        cur = before;
    }
    if cur.colored_count() != 0 {
        return Err(at(0)(corrupt("replay did not reach the empty coloring")));
    }
    frames.reverse();
    Ok(frames)
}
