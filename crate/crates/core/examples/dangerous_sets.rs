//! Dangerous pairs: vertices sharing at least kappa * delta^(2/3) common neighbors.

use acyclic_color::graph::{dangerous_set, generate};
use acyclic_color::{Family, Kappa};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Family::CompleteBipartite { left: 3, right: 3 }, "10583/10000"),
        (Family::CompleteBipartite { left: 4, right: 6 }, "10583/10000"),
        (Family::Cycle { n: 4 }, "63/50"),
        (Family::Hypercube { dim: 4 }, "1.0583"),
    ];
    for (family, kappa) in cases {
        let g = generate(&family, 0)?;
        let kappa = Kappa::parse(kappa)?;
        let d = dangerous_set(&g, kappa)?;
        println!("{family}: delta={} kappa={kappa} threshold={} common neighbors", d.delta(), d.threshold());
        for v in g.vertices().take(4) {
            println!("  D({v}) = {:?}", d.of(v));
        }
    }
    Ok(())
}
