//! The step log and its inverse.
//!
//! A [`Record`] holds a bit string `r1` (one `0` per step, followed by
//! `2k - 2` ones when a `2k`-cycle was uncolored) and an integer `r2` that
//! accumulates, in mixed radix, the catalog position of every uncolored
//! cycle. Together with the final coloring it determines every color drawn
//! during the run; [`replay_full`] recovers them.

mod catalog;
mod cycle;
mod file;
mod record;
mod replay;

pub use catalog::{
    cycle_count_histogram, enumerate_catalog, for_each_in_catalog, is_catalog_member, CycleCatalog, DEFAULT_CACHE_LIMIT,
};
pub use cycle::{cycle_identifier, CycleId};
pub use file::{RecordFile, MAGIC};
pub use record::{decode_steps, log_step, pop_last_step, PoppedStep, Record, StepCode};
pub use replay::{
    decode_trace, reconstruct_previous, reconstruct_uncolored_set, replay_full, undo_step, DecodedStep, ReplayFrame,
};

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("cycle {cycle} is not in the catalog of 2k-cycles through {vertex}")]
    NotInCatalog { vertex: Vertex, cycle: CycleId },
    #[error("index {z} is outside the catalog of {len} {cycle_len}-cycles through {vertex}")]
    IndexOutOfRange { vertex: Vertex, cycle_len: usize, z: String, len: u64 },
    #[error("cycle index {z} exceeds the radix {radix} for length {cycle_len}")]
    RadixOverflow { z: u64, radix: String, cycle_len: usize },
    #[error("record is empty")]
    Empty,
    #[error("corrupt record: {0}")]
    Corrupt(String),
    #[error("malformed record file: {0}")]
    Format(String),
    #[error("record invariant violated: {0}")]
    Invariant(String),
}

/// A reconstruction failure at a given (1-based) step.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("replay failed at step {step}: {source}")]
pub struct ReplayError {
    pub step: u64,
    #[source]
    pub source: RecordError,
}
