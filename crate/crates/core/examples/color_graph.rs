//! Colors a graph with the randomized algorithm and checks the result.
//!
//! ```text
//! cargo run --example color_graph                 # hypercube Q4
//! cargo run --example color_graph -- graph.col 7  # DIMACS file, seed 7
//! ```

use acyclic_color::engine::run_until_colored;
use acyclic_color::graph::{generate, parse_dimacs};
use acyclic_color::verify::verify_acyclic;
use acyclic_color::{Family, Instance, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let graph = match args.next() {
        Some(path) => parse_dimacs(&std::fs::read_to_string(path)?)?,
        None => generate(&Family::Hypercube { dim: 4 }, 0)?,
    };
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let inst = Instance::with_default_kappa(graph, Mode::Safe)?;
    let p = &inst.params;
    println!("n={} m={} delta={} kappa={}", inst.graph.n(), inst.graph.m(), p.delta, p.kappa);
    println!("palette P={} (list {} + delta {} + d_max {}), f={:.3}", p.palette, p.list_size, p.delta, p.d_max, p.f_approx);

    let run = run_until_colored(&inst, seed, None)?;
    println!(
        "terminated={} after {} steps, {} uncolorings, cycle lengths {:?}",
        run.stats.terminated,
        run.stats.steps,
        run.outcomes.iter().filter(|o| o.uncolorings() > 0).count(),
        run.stats.cycle_lengths
    );
    if let Some(colors) = run.coloring.to_complete() {
        let report = verify_acyclic(&inst.graph, &colors)?;
        println!("colors used {} of {}, acyclic={}", report.colors_used, p.palette, report.acyclic);
        println!("coloring {colors:?}");
    }
    Ok(())
}
