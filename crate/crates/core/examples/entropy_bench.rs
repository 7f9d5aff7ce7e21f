//! Many independent runs on one random regular graph: steps, record size
//! and the entropy of the random draws, as CSV.

use acyclic_color::engine::{run_with, RunOptions};
use acyclic_color::graph::generate;
use acyclic_color::{Family, Instance, Mode, SeededRng};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trials: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let inst = Instance::with_default_kappa(generate(&Family::RandomRegular { n: 60, d: 6 }, 1)?, Mode::Safe)?;
    let opts = RunOptions { step_cap: None, audit: false };
    let log_l = (inst.params.list_size as f64).log2();
    println!("trial,terminated,t,u_t,colors_used,record_bits,entropy_bits");
    for trial in 0..trials {
        let run = run_with(&inst, &mut SeededRng::for_stream(42, trial), &opts, |_, _, _| {})?;
        let rec = &run.record;
        println!(
            "{trial},{},{},{},{},{},{:.1}",
            run.stats.terminated,
            rec.t(),
            rec.u_total(),
            run.coloring.colors_used(),
            rec.r1_bits() + rec.r2_bits(),
            rec.t() as f64 * log_l
        );
    }
    Ok(())
}
