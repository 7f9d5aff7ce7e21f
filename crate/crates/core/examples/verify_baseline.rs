//! Compares the algorithm with the exact acyclic chromatic number and with
//! the greedy coloring of the square graph.

use acyclic_color::engine::run_until_colored;
use acyclic_color::graph::generate;
use acyclic_color::verify::{brute_force_chi_a, square_greedy_baseline, verify_acyclic, DEFAULT_BRUTE_FORCE_CAP};
use acyclic_color::{Family, Instance, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = [
        Family::Path { n: 5 },
        Family::Cycle { n: 4 },
        Family::Cycle { n: 7 },
        Family::Complete { n: 5 },
        Family::CompleteBipartite { left: 3, right: 3 },
        Family::Hypercube { dim: 3 },
    ];
    println!("{:<24} {:>5} {:>9} {:>7} {:>8}", "graph", "chi_a", "algorithm", "square", "palette");
    for f in corpus {
        let g = generate(&f, 0)?;
        let exact = brute_force_chi_a(&g, DEFAULT_BRUTE_FORCE_CAP)?;
        let greedy = square_greedy_baseline(&g);
        let greedy_used = verify_acyclic(&g, &greedy)?.colors_used;
        let inst = Instance::with_default_kappa(g, Mode::Safe)?;
        let run = run_until_colored(&inst, 5, None)?;
        let colors = run.coloring.to_complete().expect("run terminated");
        let report = verify_acyclic(&inst.graph, &colors)?;
        assert!(report.acyclic);
        println!("{:<24} {exact:>5} {:>9} {greedy_used:>7} {:>8}", f.to_string(), report.colors_used, inst.params.palette);
    }
    Ok(())
}
