//! Randomized acyclic vertex coloring driven by an invertible execution record.
//!
//! The algorithm repeatedly tries to color the smallest uncolored vertex with
//! a uniformly random color from a restricted candidate list. When the new
//! color closes a two-colored cycle, part of that cycle is uncolored again.
//! Every step is logged into a compact record (a bit string plus a
//! mixed-radix integer) that, together with the current coloring, is enough
//! to rebuild the entire run backwards.
//!
//! Module map:
//!
//! - [`graph`]: simple undirected graphs, DIMACS I/O, generators, dangerous sets
//! - [`params`]: exact palette, list size and radix computations
//! - [`engine`]: partial colorings and the extension step
//! - [`records`]: cycle catalogs, the step log, reconstruction and the record file
//! - [`dyck`]: counting Dyck words whose descents all have even length
//! - [`verify`]: acyclicity checks, brute-force exact values, the square-graph baseline
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod dyck;
pub mod engine;
pub mod graph;
mod instance;
pub mod params;
pub mod records;
pub mod rng;
pub mod verify;

pub use engine::{Color, PartialColoring, Run, RunOptions, StepOutcome, StepResult};
pub use graph::{Family, Graph, Vertex};
pub use instance::Instance;
pub use params::{AlgoParams, Kappa, Mode};
pub use records::{CycleId, Record, ReplayFrame};
pub use rng::SeededRng;

/// Errors surfaced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error(transparent)]
    Params(#[from] params::ParamError),
    #[error(transparent)]
    Engine(#[from] engine::EngineError),
    #[error(transparent)]
    Record(#[from] records::RecordError),
    #[error(transparent)]
    Replay(#[from] records::ReplayError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
