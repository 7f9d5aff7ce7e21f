//! Lists the catalog of short cycles through a vertex and checks every
//! catalog size against the exact cycle-count bound.

use acyclic_color::graph::generate;
use acyclic_color::records::{cycle_count_histogram, enumerate_catalog};
use acyclic_color::{Family, Instance, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inst = Instance::with_default_kappa(generate(&Family::Complete { n: 5 }, 0)?, Mode::Safe)?;
    for id in enumerate_catalog(&inst.graph, &inst.dangerous, 1, 2) {
        println!("4-cycle through 1: {id}");
    }

    let inst = Instance::with_default_kappa(generate(&Family::Hypercube { dim: 3 }, 0)?, Mode::Safe)?;
    let p = &inst.params;
    let mut violations = 0;
    for v in inst.graph.vertices() {
        for (k, count) in cycle_count_histogram(&inst.graph, &inst.dangerous, v, inst.graph.n()) {
            let ok = p.cycle_count_within_bound(count, k);
            violations += usize::from(!ok);
            if v == 1 {
                println!("Q3 v=1 length {:>2}: {count:>3} cycles, bound {:.2}, within={ok}", 2 * k, p.cycle_count_bound_f64(k));
            }
        }
    }
    println!("violations over all vertices: {violations}");
    Ok(())
}
