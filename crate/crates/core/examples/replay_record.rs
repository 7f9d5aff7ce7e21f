//! Runs the algorithm, serializes the record, and rebuilds every step from
//! the final coloring alone.

use acyclic_color::engine::run_until_colored;
use acyclic_color::graph::generate;
use acyclic_color::records::{replay_full, RecordFile};
use acyclic_color::{Family, Instance, Mode, ReplayFrame};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graph = generate(&Family::RandomRegular { n: 30, d: 5 }, 3)?;
    let inst = Instance::with_default_kappa(graph, Mode::Safe)?;
    let seed = 11;
    let run = run_until_colored(&inst, seed, None)?;

    let file = RecordFile {
        delta: inst.params.delta,
        kappa: inst.params.kappa,
        mode: inst.params.mode,
        n: inst.graph.n() as u64,
        seed,
        record: run.record.clone(),
    };
    let bytes = file.encode();
    println!("{} steps, record r1 = {} bits, r2 = {} bits, file = {} bytes", run.stats.steps, run.record.r1_bits(), run.record.r2_bits(), bytes.len());
    println!("r1 = {}", run.record.r1_string());

    let decoded = RecordFile::decode(&bytes)?;
    let frames = replay_full(&run.coloring, &decoded.record, &inst)?;
    let forward: Vec<ReplayFrame> = run.outcomes.iter().map(ReplayFrame::from).collect();
    assert_eq!(frames, forward);
    for (i, f) in frames.iter().enumerate().filter(|(_, f)| f.cycle.is_some()) {
        println!("step {:>3}: v={} drew {} and uncolored along {}", i + 1, f.vertex, f.color, f.cycle.as_ref().unwrap());
    }
    println!("replayed {} frames; all match the forward run", frames.len());
    Ok(())
}
